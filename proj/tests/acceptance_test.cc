// Copyright 2026 The bglemma Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bglemma/dictionary.h"
#include "bglemma/error.h"
#include "bglemma/eval.h"
#include "bglemma/ingest.h"
#include "bglemma/lemmatizer.h"
#include "bglemma/paradigms.h"
#include "bglemma/tagset.h"
#include "oracle.h"
#include "test_util.h"

namespace bglemma {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const Dictionary& fixture_dict() {
  static const Dictionary d = [] {
    DictionaryBuilder b;
    scan_bgoffice(testing::bgoffice_dir(), b, testing::shipped_paradigms());
    scan_wiktionary(testing::dump_bz2(), b, testing::shipped_paradigms());
    return std::move(b).freeze();
  }();
  return d;
}

GramFeatures adj(Gender g, Number n, Article a, bool ext = false) {
  GramFeatures f;
  f.pos_class = PosClass::kAdjective;
  f.gender = g;
  f.number = n;
  f.article = a;
  f.extended = ext;
  return f;
}

Outcome table1() {
  using G = Gender;
  using N = Number;
  using A = Article;
  const std::multiset<std::pair<std::string, std::uint32_t>> expected = {
      {"рядък", encode_tag(adj(G::kMasculine, N::kSingular, A::kIndefinite)).value},
      {"редкия", encode_tag(adj(G::kMasculine, N::kSingular, A::kDefinite)).value},
      {"редкият", encode_tag(adj(G::kMasculine, N::kSingular, A::kDefiniteFull)).value},
      {"рядка", encode_tag(adj(G::kFeminine, N::kSingular, A::kIndefinite)).value},
      {"рядката", encode_tag(adj(G::kFeminine, N::kSingular, A::kDefinite)).value},
      {"рядко", encode_tag(adj(G::kNeuter, N::kSingular, A::kIndefinite)).value},
      {"рядкото", encode_tag(adj(G::kNeuter, N::kSingular, A::kDefinite)).value},
      {"редки", encode_tag(adj(G::kUnspecified, N::kPlural, A::kIndefinite)).value},
      {"редките", encode_tag(adj(G::kUnspecified, N::kPlural, A::kDefinite)).value},
      {"редки", encode_tag(adj(G::kMasculine, N::kSingular, A::kUnspecified, true)).value},
  };
  const ParadigmSet& set = testing::shipped_paradigms();
  const auto t0 = Clock::now();
  const std::vector<WordEntry> forms = generate_word_forms("рядък", "83", set);
  const double ms = ms_since(t0);

  Outcome o;
  std::multiset<std::pair<std::string, std::uint32_t>> got;
  for (const WordEntry& e : forms) {
    got.insert({e.surface, e.tag.value});
    o.require(e.lemma == "рядък", "lemma mismatch: " + e.lemma);
  }
  o.require(forms.size() == 10, "expected 10 forms, got " +
                                    std::to_string(forms.size()));
  o.require(got == expected, "surface/feature multiset differs");
  o.require(ms < 1.0, "took " + fmt("%.3f ms", ms));
  if (o.pass) o.detail = "10 forms, " + fmt("%.3f ms", ms);
  return o;
}

Outcome tag_codec() {
  Outcome o;
  std::size_t bundles = 0;
  const auto t0 = Clock::now();
  for (int p = 0; p < kPosClassCount; ++p)
    for (int g = 0; g < kGenderCount; ++g)
      for (int n = 0; n < kNumberCount; ++n)
        for (int a = 0; a < kArticleCount; ++a)
          for (int x = 0; x < 2; ++x)
            for (int pe = 0; pe < kPersonCount; ++pe)
              for (int t = 0; t < kTenseCount; ++t) {
                GramFeatures f;
                f.pos_class = static_cast<PosClass>(p);
                f.gender = static_cast<Gender>(g);
                f.number = static_cast<Number>(n);
                f.article = static_cast<Article>(a);
                f.extended = x == 1;
                f.person = static_cast<Person>(pe);
                f.tense = static_cast<Tense>(t);
                ++bundles;
                if (!(decode_tag(encode_tag(f)) == f)) {
                  o.require(false, "decode(encode) failed for " +
                                       format_hex(encode_tag(f)));
                }
                if (!(parse_tag_string(format_tag_string(f)) == f)) {
                  o.require(false, "parse(format) failed for " +
                                       format_tag_string(f));
                }
              }
  std::size_t accepted = 0;
  for (std::uint32_t v = 0; v < (1u << 17); ++v) {
    try {
      decode_tag(PackedTag{v});
      ++accepted;
    } catch (const InvalidTag&) {
    }
  }
  for (int bit = 17; bit < 32; ++bit) {
    try {
      decode_tag(PackedTag{1u << bit});
      o.require(false, "reserved bit accepted");
    } catch (const InvalidTag&) {
    }
  }
  const double ms = ms_since(t0);
  o.require(bundles == 21120, "unexpected bundle count");
  o.require(accepted == bundles, "decode accepts " + std::to_string(accepted) +
                                     " values, expected " +
                                     std::to_string(bundles));
  o.require(ms < 1000.0, "took " + fmt("%.1f ms", ms));
  if (o.pass) {
    o.detail = std::to_string(bundles) + " bundles, " + fmt("%.1f ms", ms);
  }
  return o;
}

Outcome ambiguity() {
  DictionaryBuilder b;
  b.add_lexeme({"рядък", "83"}, testing::shipped_paradigms());
  const Dictionary d = std::move(b).freeze();
  const std::vector<Candidate> c = d.lookup("редки");
  Outcome o;
  o.require(c.size() == 2, std::to_string(c.size()) + " candidates");
  if (!o.pass) return o;
  std::set<std::uint32_t> tags;
  for (const Candidate& x : c) {
    o.require(x.lemma == "рядък", "lemma " + x.lemma);
    tags.insert(x.tag.value);
  }
  const std::set<std::uint32_t> want = {
      encode_tag(adj(Gender::kUnspecified, Number::kPlural,
                     Article::kIndefinite))
          .value,
      encode_tag(adj(Gender::kMasculine, Number::kSingular,
                     Article::kUnspecified, true))
          .value};
  o.require(tags == want, "tags differ");
  if (o.pass) o.detail = "2 candidates, lemma рядък";
  return o;
}

Outcome serialization() {
  Outcome o;
  const Dictionary& d = fixture_dict();
  testing::TempDir tmp;
  save(d, tmp.path() / "a.bglx");
  save(d, tmp.path() / "b.bglx");
  const std::string bytes = testing::read_file(tmp.path() / "a.bglx");
  o.require(bytes == testing::read_file(tmp.path() / "b.bglx"),
            "repeated saves differ");
  const Dictionary back = load_dictionary(tmp.path() / "a.bglx");
  o.require(back.stats() == d.stats(), "stats differ after load");
  for (const WordEntry& e : d.entries()) {
    if (back.lookup(e.surface) != d.lookup(e.surface)) {
      o.require(false, "lookup differs for " + e.surface);
    }
  }
  o.require(back == d, "dictionaries differ");

  std::size_t rejected = 0, trials = 0;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    std::string bad = bytes;
    bad[i] = static_cast<char>(bad[i] ^ 0x20);
    ++trials;
    try {
      deserialize(bad);
    } catch (const FormatError&) {
      ++rejected;
    }
  }
  for (std::size_t len = 0; len < bytes.size(); ++len) {
    ++trials;
    try {
      deserialize(std::string_view(bytes).substr(0, len));
    } catch (const FormatError&) {
      ++rejected;
    }
  }
  o.require(rejected == trials, std::to_string(trials - rejected) +
                                    " corrupt inputs accepted");
  const auto trunc = tmp.write("t.bglx", bytes.substr(0, bytes.size() - 1));
  try {
    load_dictionary(trunc);
    o.require(false, "truncated file loaded");
  } catch (const FormatError&) {
  }
  if (o.pass) {
    o.detail = std::to_string(bytes.size()) + " bytes, " +
               std::to_string(trials) + " corrupt inputs rejected";
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const Dictionary& d = fixture_dict();
  const std::vector<WordEntry> entries = d.entries();
  std::set<std::string> types;
  for (const WordEntry& e : entries) types.insert(e.paradigm_type);
  o.require(types.size() >= 6, std::to_string(types.size()) + " types");
  o.require(d.lemma_count() >= 50,
            std::to_string(d.lemma_count()) + " lexemes");

  const auto t0 = Clock::now();
  const testing::Oracle oracle(d);
  std::vector<std::pair<std::string, std::uint32_t>> queries;
  for (const WordEntry& e : entries) {
    queries.push_back({e.surface, e.tag.value});
    queries.push_back({e.surface, e.tag.value & 0x1F});
  }
  const char* oov[] = {"qqq",     "хълм",   "Хълма",   "небето",  "облак",
                       "XYZ",     "мечта",  "Мечтите", "синьо",   "весел",
                       "пея",     "пеят",   "над",     "под",     "зад",
                       "колата",  "стъпка", "ЛЯТО",    "есента",  "зимата"};
  for (const char* s : oov) queries.push_back({s, 0x1});
  std::size_t mismatches = 0, oov_seen = 0;
  for (const auto& [surface, q] : queries) {
    const LemmaResult got =
        lemmatize(d, TokenRecord{surface, decode_tag(PackedTag{q}), false});
    const testing::OracleResult want = oracle.run(surface, q, false);
    if (!testing::same_result(want, got)) {
      if (mismatches == 0) {
        o.require(false, "first mismatch: " + surface + " " +
                             format_hex(PackedTag{q}));
      }
      ++mismatches;
    }
    if (got.oov) ++oov_seen;
  }
  const double ms = ms_since(t0);
  o.require(oov_seen >= 20, "expected OOV tokens to be OOV");
  o.require(ms < 5000.0, "took " + fmt("%.1f ms", ms));
  if (o.pass) {
    o.detail = std::to_string(queries.size()) + " tokens, " +
               std::to_string(types.size()) + " types, " +
               std::to_string(d.lemma_count()) + " lexemes, " +
               fmt("%.1f ms", ms);
  }
  return o;
}

Outcome closure() {
  Outcome o;
  std::istringstream in(make_synthetic_corpus(fixture_dict(), 2026, 1000));
  const EvalMetrics m = evaluate(fixture_dict(), in);
  o.require(m.tokens == 1000, "tokens=" + std::to_string(m.tokens));
  o.require(m.accuracy_on_covered == 1.0, format_report(m));
  o.require(m.oov_rate == 0.0, format_report(m));
  if (o.pass) o.detail = format_report(m);
  return o;
}

Outcome ingestion() {
  Outcome o;
  const ParadigmSet& set = testing::shipped_paradigms();
  DictionaryBuilder a, b, both;
  const ScanReport ra = scan_bgoffice(testing::bgoffice_dir(), a, set);
  const ScanReport rb = scan_wiktionary(testing::dump_bz2(), b, set);
  scan_bgoffice(testing::bgoffice_dir(), both, set);
  scan_wiktionary(testing::dump_bz2(), both, set);
  const Dictionary merged = merge(std::move(a).freeze(), std::move(b).freeze());
  const Dictionary combined = std::move(both).freeze();
  o.require(merged.stats() == combined.stats(), "stats differ");
  for (const WordEntry& e : combined.entries()) {
    if (merged.lookup(e.surface) != combined.lookup(e.surface)) {
      o.require(false, "lookup differs for " + e.surface);
    }
  }
  o.require(merged == combined, "dictionaries differ");

  // Non-matching file names: bg83.txt, bg12ab.dat, xbg1.dat, BG1.dat, bg.dat.
  o.require(ra.files_processed == 9,
            "files_processed=" + std::to_string(ra.files_processed));
  o.require(combined.lookup("боклук").empty(),
            "a non-matching file was read");
  // Redirect and template-namespace pages are ignored; bg_type is not a
  // configured template name.
  o.require(rb.pages_seen == 18 && rb.pages_ignored == 2,
            "page counts differ");
  o.require(rb.lexemes_added == 11 && rb.pages_without_marker == 3,
            "marker counts differ");
  o.require(rb.unknown_types.size() == 1 && rb.unknown_types.count("999"),
            "unknown type not reported");
  o.require(combined.lookup("Рядък").empty() &&
                combined.lookup("пекаря").empty(),
            "redirect or foreign template page ingested");
  if (o.pass) {
    o.detail = std::to_string(combined.form_count()) + " forms, " +
               std::to_string(combined.lemma_count()) + " lemmas";
  }
  return o;
}

Outcome gold_fixture() {
  Outcome o;
  const Dictionary d = load_builtin(
      std::filesystem::path(BGLEMMA_TEST_BUILTIN_DIR) / "builtin.bglx");
  const EvalMetrics m = evaluate(d, testing::fixture_dir() / "gold20.tsv");
  o.require(m.tokens == 20 && m.correct == 19, format_report(m));
  o.require(std::fabs(m.accuracy - 0.95) < 1e-12, format_report(m));
  if (o.pass) o.detail = format_report(m);
  return o;
}

Outcome scale() {
  Outcome o;
  const Dictionary& base = fixture_dict();
  std::vector<Lexeme> seeds;
  for (std::size_t i = 0; i < base.lemma_count(); ++i) {
    for (const std::string& t : base.lemma_types(i)) {
      seeds.push_back({base.lemmas()[i], t});
    }
  }
  // Two-letter Cyrillic prefixes make distinct synthetic lexemes.
  std::vector<std::string> letters;
  for (char32_t c = 0x0430; c <= 0x044F; ++c) {
    letters.push_back(testing::oracle_encode(std::u32string(1, c)));
  }
  const ParadigmSet& set = testing::shipped_paradigms();
  testing::TempDir tmp;

  const auto t0 = Clock::now();
  DictionaryBuilder b;
  for (std::size_t p = 0; b.stats().form_count < 100000; ++p) {
    const std::string prefix =
        letters[p / letters.size() % letters.size()] +
        letters[p % letters.size()];
    for (const Lexeme& l : seeds) b.add_lexeme({prefix + l.lemma, l.type_id}, set);
  }
  const Dictionary d = std::move(b).freeze();
  save(d, tmp.path() / "scale.bglx");
  const Dictionary loaded = load_dictionary(tmp.path() / "scale.bglx");
  const std::vector<WordEntry> entries = loaded.entries();
  std::mt19937_64 rng(7);
  std::size_t hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const WordEntry& e = entries[rng() % entries.size()];
    const LemmaResult r =
        lemmatize(loaded, TokenRecord{e.surface, decode_tag(e.tag), false});
    if (!r.oov) ++hits;
  }
  const double ms = ms_since(t0);
  o.require(loaded.form_count() >= 100000,
            "only " + std::to_string(loaded.form_count()) + " forms");
  o.require(loaded == d, "loaded dictionary differs");
  o.require(hits == 10000, std::to_string(10000 - hits) + " lookups missed");
  o.require(ms < 5000.0, "took " + fmt("%.1f ms", ms));
  if (o.pass) {
    o.detail = std::to_string(loaded.form_count()) + " forms, " +
               fmt("%.1f ms", ms);
  }
  return o;
}

}  // namespace
}  // namespace bglemma

int main() {
  using bglemma::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {
          {"table1_reproduction", bglemma::table1},
          {"tag_codec_round_trip", bglemma::tag_codec},
          {"ambiguity_handling", bglemma::ambiguity},
          {"serialization", bglemma::serialization},
          {"oracle_equivalence", bglemma::oracle_equivalence},
          {"closure_accuracy", bglemma::closure},
          {"ingestion_fidelity", bglemma::ingestion},
          {"gold_fixture_accuracy", bglemma::gold_fixture},
          {"scale_smoke", bglemma::scale},
      };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name,
                o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
