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

#include "bglemma/eval.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <nlohmann/json.hpp>

#include "bglemma/error.h"
#include "bglemma/unicode.h"

namespace bglemma {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

// Uniform in [0, bound) without modulo bias.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

EvalMetrics evaluate(const Dictionary& dict, std::istream& corpus,
                     const LemmatizerOptions& options) {
  EvalMetrics m;
  TsvTokenReader reader(corpus);
  while (auto line = reader.next()) {
    if (line->kind != TsvLine::Kind::kToken) continue;
    if (!line->lemma || line->lemma->empty()) {
      throw ParseError(line->line_number, "gold record needs a lemma column");
    }
    const LemmaResult r = lemmatize(dict, line->token, options);
    const bool ok =
        unicode::normalize_nfc(r.lemma) == unicode::normalize_nfc(*line->lemma);
    ++m.tokens;
    if (ok) ++m.correct;
    if (!r.oov) {
      ++m.covered;
      if (ok) ++m.correct_on_covered;
    }
  }
  if (m.tokens == 0) throw EmptyCorpus("corpus has no records");
  m.accuracy = ratio(m.correct, m.tokens);
  m.accuracy_on_covered = ratio(m.correct_on_covered, m.covered);
  m.oov_rate = ratio(m.tokens - m.covered, m.tokens);
  return m;
}

EvalMetrics evaluate(const Dictionary& dict,
                     const std::filesystem::path& corpus,
                     const LemmatizerOptions& options) {
  std::ifstream in(corpus, std::ios::binary);
  if (!in) throw IoError("cannot read corpus " + corpus.string());
  return evaluate(dict, in, options);
}

std::string format_report(const EvalMetrics& m) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "tokens=%zu correct=%zu accuracy=%.4f covered=%zu "
                "accuracy_on_covered=%.4f oov_rate=%.4f",
                m.tokens, m.correct, m.accuracy, m.covered,
                m.accuracy_on_covered, m.oov_rate);
  return buf;
}

std::string metrics_json(const EvalMetrics& m) {
  const nlohmann::json j = {
      {"tokens", m.tokens},
      {"correct", m.correct},
      {"accuracy", m.accuracy},
      {"covered", m.covered},
      {"correct_on_covered", m.correct_on_covered},
      {"accuracy_on_covered", m.accuracy_on_covered},
      {"oov_rate", m.oov_rate},
  };
  return j.dump(2);
}

std::string make_synthetic_corpus(const Dictionary& dict, std::uint64_t seed,
                                  std::size_t n) {
  if (n == 0) throw InvalidArgument("corpus size must be at least 1");
  if (dict.form_count() == 0) throw EmptyDictionary("dictionary is empty");
  const std::vector<WordEntry> entries = dict.entries();
  std::mt19937_64 rng(seed);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    const WordEntry& e = entries[bounded(rng, entries.size())];
    out += e.surface;
    out += '\t';
    out += format_tag_string(decode_tag(e.tag));
    out += '\t';
    out += e.lemma;
    out += '\n';
  }
  return out;
}

void write_synthetic_corpus(const Dictionary& dict, std::uint64_t seed,
                            std::size_t n, const std::filesystem::path& path) {
  const std::string text = make_synthetic_corpus(dict, seed, n);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace bglemma
