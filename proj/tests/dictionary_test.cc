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

#include "bglemma/dictionary.h"

#include <gtest/gtest.h>

#include <map>
#include <sstream>
#include <thread>

#include "bglemma/error.h"
#include "test_util.h"

namespace bglemma {
namespace {

ParadigmSet type83() {
  std::istringstream in{std::string(testing::kType83)};
  return parse_paradigms(in);
}

Dictionary build(const std::vector<Lexeme>& lexemes, const ParadigmSet& set) {
  DictionaryBuilder b;
  for (const auto& l : lexemes) b.add_lexeme(l, set);
  return std::move(b).freeze();
}

std::string tag_of(const Candidate& c) {
  return format_tag_string(decode_tag(c.tag));
}

TEST(DictionaryTest, SingleLexeme) {
  const Dictionary d = build({{"рядък", "83"}}, type83());
  EXPECT_EQ(d.stats(), (DictionaryStats{1, 10, 1}));
  EXPECT_EQ(d.lookup("редки").size(), 2u);
}

TEST(DictionaryTest, EmptyStats) {
  EXPECT_EQ(Dictionary().stats(), (DictionaryStats{0, 0, 0}));
  EXPECT_TRUE(Dictionary().lookup("x").empty());
}

TEST(DictionaryTest, LookupIsSortedByTag) {
  const Dictionary d = build({{"рядък", "83"}}, type83());
  const auto redki = d.lookup("редки");
  ASSERT_EQ(redki.size(), 2u);
  EXPECT_EQ(redki[0].lemma, "рядък");
  EXPECT_EQ(tag_of(redki[0]), "A-pi-");
  EXPECT_EQ(tag_of(redki[1]), "Ams-e");
  EXPECT_LT(redki[0].tag, redki[1].tag);

  const auto redkite = d.lookup("редките");
  ASSERT_EQ(redkite.size(), 1u);
  EXPECT_EQ(redkite[0].lemma, "рядък");
  EXPECT_EQ(tag_of(redkite[0]), "A-pd-");
  EXPECT_EQ(redkite[0].paradigm_type, "83");

  EXPECT_TRUE(d.lookup("zzz").empty());
  EXPECT_TRUE(d.lookup("Редките").empty());  // exact, case-sensitive
}

TEST(DictionaryTest, AddingTwiceIsIdempotent) {
  const auto set = type83();
  EXPECT_EQ(build({{"рядък", "83"}}, set),
            build({{"рядък", "83"}, {"рядък", "83"}}, set));
}

TEST(DictionaryTest, TooShortLemmaLeavesBuilderUnchanged) {
  DictionaryBuilder b;
  EXPECT_THROW(b.add_lexeme({"ок", "83"}, type83()), LemmaTooShort);
  EXPECT_THROW(b.add_lexeme({"рядък", "1"}, type83()), UnknownType);
  EXPECT_EQ(b.stats(), (DictionaryStats{0, 0, 0}));
}

TEST(DictionaryTest, FirstParadigmTypeWinsDuplicates) {
  DictionaryBuilder b;
  const PackedTag t = encode_tag(parse_tag_string("D"));
  b.add_entry({"тук", "тук", t, "0"});
  b.add_entry({"тук", "тук", t, "5"});
  const Dictionary d = std::move(b).freeze();
  ASSERT_EQ(d.lookup("тук").size(), 1u);
  EXPECT_EQ(d.lookup("тук")[0].paradigm_type, "0");
  EXPECT_EQ(d.lemma_types(0), (std::vector<std::string>{"0", "5"}));
}

TEST(DictionaryTest, AddEntryValidates) {
  DictionaryBuilder b;
  EXPECT_THROW(b.add_entry({"", "x", PackedTag{}, "0"}), InvalidArgument);
  EXPECT_THROW(b.add_entry({"x", "x", PackedTag{0x80000000u}, "0"}),
               InvalidTag);
}

TEST(DictionaryTest, GenerationLookupClosure) {
  const ParadigmSet& set = testing::shipped_paradigms();
  DictionaryBuilder b;
  const std::vector<Lexeme> lexemes = {
      {"рядък", "83"}, {"нов", "76"}, {"град", "1"}, {"учител", "13a"},
      {"жена", "41"},  {"село", "52"}, {"чета", "150"}, {"чакам", "186"},
      {"право", "0"},  {"прав", "76"}};
  for (const auto& l : lexemes) b.add_lexeme(l, set);
  const Dictionary d = std::move(b).freeze();
  std::size_t total = 0;
  for (const auto& l : lexemes) {
    for (const WordEntry& e : generate_word_forms(l.lemma, l.type_id, set)) {
      bool found = false;
      for (const Candidate& c : d.lookup(e.surface)) {
        found |= c.lemma == e.lemma && c.tag == e.tag;
      }
      EXPECT_TRUE(found) << e.surface;
      ++total;
    }
  }
  // form_count is the sum of candidate list lengths.
  std::size_t sum = 0;
  std::map<std::string, int> seen;
  for (const WordEntry& e : d.entries()) ++seen[e.surface];
  for (const auto& [surface, n] : seen) {
    EXPECT_EQ(d.candidate_count(surface), static_cast<std::size_t>(n));
    sum += n;
  }
  EXPECT_EQ(sum, d.form_count());
  // четете occurs twice within one lexeme with different tags
  EXPECT_LE(d.form_count(), total);
  EXPECT_EQ(d.lookup("право").size(), 2u);
}

TEST(MergeTest, IdentityIdempotenceCommutativity) {
  const ParadigmSet& set = testing::shipped_paradigms();
  const Dictionary a = build({{"рядък", "83"}, {"нов", "76"}}, set);
  const Dictionary b = build({{"град", "1"}, {"нов", "76"}}, set);
  EXPECT_EQ(merge(a, Dictionary()), a);
  EXPECT_EQ(merge(Dictionary(), a), a);
  EXPECT_EQ(merge(a, a), a);
  EXPECT_EQ(merge(a, b), merge(b, a));
  EXPECT_EQ(merge(a, b), build({{"рядък", "83"}, {"нов", "76"}, {"град", "1"}},
                               set));
}

TEST(MergeTest, DisjointCountsAdd) {
  const ParadigmSet& set = testing::shipped_paradigms();
  const Dictionary a = build({{"рядък", "83"}}, set);
  const Dictionary b = build({{"жена", "41"}}, set);
  const DictionaryStats m = merge(a, b).stats();
  EXPECT_EQ(m.lemma_count, 2u);
  EXPECT_EQ(m.form_count, 10u + 4u);
  EXPECT_EQ(m.ambiguous_surface_count, 1u);
}

TEST(SerializationTest, RoundTrip) {
  const Dictionary d = build({{"рядък", "83"}}, type83());
  const std::string bytes = serialize(d);
  EXPECT_EQ(bytes.substr(0, 6), std::string("BGLX\x01\n", 6));
  const Dictionary back = deserialize(bytes);
  EXPECT_EQ(back, d);
  EXPECT_EQ(back.stats(), d.stats());
  for (const WordEntry& e : d.entries()) {
    EXPECT_EQ(back.lookup(e.surface), d.lookup(e.surface));
  }
  EXPECT_EQ(serialize(back), bytes);
}

TEST(SerializationTest, EmptyDictionary) {
  const std::string bytes = serialize(Dictionary());
  EXPECT_EQ(bytes.size(), 6u + 12u + 4u);
  EXPECT_EQ(deserialize(bytes), Dictionary());
}

TEST(SerializationTest, SaveTwiceIsByteIdentical) {
  testing::TempDir tmp;
  const Dictionary d = build({{"рядък", "83"}}, type83());
  save(d, tmp.path() / "a.bglx");
  save(load_dictionary(tmp.path() / "a.bglx"), tmp.path() / "b.bglx");
  EXPECT_EQ(testing::read_file(tmp.path() / "a.bglx"),
            testing::read_file(tmp.path() / "b.bglx"));
}

TEST(SerializationTest, RejectsCorruptInput) {
  const std::string good = serialize(build({{"рядък", "83"}}, type83()));
  EXPECT_THROW(deserialize("XXXX\x01\n"), FormatError);
  EXPECT_THROW(deserialize(""), FormatError);
  EXPECT_THROW(deserialize(good.substr(0, good.size() - 1)), FormatError);
  EXPECT_THROW(deserialize(good.substr(0, 20)), FormatError);

  std::string wrong_version = good;
  wrong_version[4] = 2;
  EXPECT_THROW(deserialize(wrong_version), FormatError);

  // Every single-byte flip is caught by the checksum or by validation.
  for (std::size_t i = 0; i < good.size(); ++i) {
    std::string bad = good;
    bad[i] = static_cast<char>(bad[i] ^ 0x40);
    EXPECT_THROW(deserialize(bad), FormatError) << "offset " << i;
  }
  // Every truncation is rejected.
  for (std::size_t n = 0; n < good.size(); ++n) {
    EXPECT_THROW(deserialize(good.substr(0, n)), FormatError) << n;
  }
}

TEST(SerializationTest, LoadErrors) {
  testing::TempDir tmp;
  EXPECT_THROW(load_dictionary(tmp.path() / "missing.bglx"), IoError);
  const auto junk = tmp.write("junk.bglx", "not a dictionary");
  EXPECT_THROW(load_dictionary(junk), FormatError);
}

TEST(DictionaryTest, ConcurrentReaders) {
  const Dictionary d = build({{"рядък", "83"}}, type83());
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 2000; ++i) {
        ok[t] += d.lookup("редки").size() == 2 ? 1 : 0;
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int n : ok) EXPECT_EQ(n, 2000);
}

}  // namespace
}  // namespace bglemma
