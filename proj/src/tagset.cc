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

#include "bglemma/tagset.h"

#include <array>
#include <charconv>
#include <cstdio>

#include "bglemma/error.h"

namespace bglemma {
namespace {

constexpr int kPosShift = 0;
constexpr int kGenderShift = 5;
constexpr int kNumberShift = 7;
constexpr int kArticleShift = 9;
constexpr int kExtendedShift = 11;
constexpr int kPersonShift = 12;
constexpr int kTenseShift = 14;

constexpr std::uint32_t kPosMask = 0x1F;
constexpr std::uint32_t kTwoBits = 0x3;
constexpr std::uint32_t kThreeBits = 0x7;

// Features addressable by a string position after the class letter.
enum class Field { kGender, kNumber, kArticle, kExtended, kPerson, kTense };

constexpr int kFieldCount = 6;

struct ClassLayout {
  char letter;
  int primary;  // leading positions always written by format_tag_string
  std::array<Field, kFieldCount> order;
};

constexpr std::array<Field, kFieldCount> kCanonicalOrder = {
    Field::kGender,   Field::kNumber, Field::kArticle,
    Field::kExtended, Field::kPerson, Field::kTense};

constexpr std::array<Field, kFieldCount> kNominalOrder = kCanonicalOrder;

constexpr std::array<Field, kFieldCount> kVerbOrder = {
    Field::kTense,   Field::kPerson,   Field::kNumber,
    Field::kGender,  Field::kArticle,  Field::kExtended};

constexpr std::array<Field, kFieldCount> kPronounOrder = {
    Field::kPerson,  Field::kGender,   Field::kNumber,
    Field::kArticle, Field::kExtended, Field::kTense};

// Indexed by PosClass value.
constexpr std::array<ClassLayout, kPosClassCount> kLayouts = {{
    {'-', 0, kCanonicalOrder},
    {'N', 3, kNominalOrder},
    {'A', 4, kNominalOrder},
    {'V', 3, kVerbOrder},
    {'P', 3, kPronounOrder},
    {'M', 3, kNominalOrder},
    {'D', 0, kCanonicalOrder},
    {'R', 0, kCanonicalOrder},
    {'C', 0, kCanonicalOrder},
    {'T', 0, kCanonicalOrder},
    {'I', 0, kCanonicalOrder},
}};

// Letters for values 1..n of each field; index 0 is the '-' filler.
constexpr std::string_view kGenderLetters = "-mfn";
constexpr std::string_view kNumberLetters = "-sp";
constexpr std::string_view kArticleLetters = "-idf";
constexpr std::string_view kExtendedLetters = "-e";
constexpr std::string_view kPersonLetters = "-123";
constexpr std::string_view kTenseLetters = "-ramz";

std::string_view letters_for(Field f) {
  switch (f) {
    case Field::kGender: return kGenderLetters;
    case Field::kNumber: return kNumberLetters;
    case Field::kArticle: return kArticleLetters;
    case Field::kExtended: return kExtendedLetters;
    case Field::kPerson: return kPersonLetters;
    case Field::kTense: return kTenseLetters;
  }
  return {};
}

int get_field(const GramFeatures& g, Field f) {
  switch (f) {
    case Field::kGender: return static_cast<int>(g.gender);
    case Field::kNumber: return static_cast<int>(g.number);
    case Field::kArticle: return static_cast<int>(g.article);
    case Field::kExtended: return g.extended ? 1 : 0;
    case Field::kPerson: return static_cast<int>(g.person);
    case Field::kTense: return static_cast<int>(g.tense);
  }
  return 0;
}

void set_field(GramFeatures& g, Field f, int v) {
  switch (f) {
    case Field::kGender: g.gender = static_cast<Gender>(v); break;
    case Field::kNumber: g.number = static_cast<Number>(v); break;
    case Field::kArticle: g.article = static_cast<Article>(v); break;
    case Field::kExtended: g.extended = v != 0; break;
    case Field::kPerson: g.person = static_cast<Person>(v); break;
    case Field::kTense: g.tense = static_cast<Tense>(v); break;
  }
}

const char* field_name(Field f) {
  switch (f) {
    case Field::kGender: return "gender";
    case Field::kNumber: return "number";
    case Field::kArticle: return "article";
    case Field::kExtended: return "extended";
    case Field::kPerson: return "person";
    case Field::kTense: return "tense";
  }
  return "?";
}

}  // namespace

PackedTag encode_tag(const GramFeatures& f) {
  std::uint32_t v = 0;
  v |= (static_cast<std::uint32_t>(f.pos_class) & kPosMask) << kPosShift;
  v |= (static_cast<std::uint32_t>(f.gender) & kTwoBits) << kGenderShift;
  v |= (static_cast<std::uint32_t>(f.number) & kTwoBits) << kNumberShift;
  v |= (static_cast<std::uint32_t>(f.article) & kTwoBits) << kArticleShift;
  v |= (f.extended ? 1u : 0u) << kExtendedShift;
  v |= (static_cast<std::uint32_t>(f.person) & kTwoBits) << kPersonShift;
  v |= (static_cast<std::uint32_t>(f.tense) & kThreeBits) << kTenseShift;
  return PackedTag{v};
}

GramFeatures decode_tag(PackedTag packed) {
  const std::uint32_t v = packed.value;
  if (v & kReservedTagMask) {
    throw InvalidTag("reserved bits set in tag " + format_hex(packed));
  }
  auto field = [&](int shift, std::uint32_t mask, int count, const char* name) {
    const std::uint32_t x = (v >> shift) & mask;
    if (x >= static_cast<std::uint32_t>(count)) {
      throw InvalidTag(std::string(name) + " out of range in tag " +
                       format_hex(packed));
    }
    return static_cast<std::uint8_t>(x);
  };
  GramFeatures g;
  g.pos_class = static_cast<PosClass>(
      field(kPosShift, kPosMask, kPosClassCount, "pos class"));
  g.gender = static_cast<Gender>(
      field(kGenderShift, kTwoBits, kGenderCount, "gender"));
  g.number = static_cast<Number>(
      field(kNumberShift, kTwoBits, kNumberCount, "number"));
  g.article = static_cast<Article>(
      field(kArticleShift, kTwoBits, kArticleCount, "article"));
  g.extended = ((v >> kExtendedShift) & 1u) != 0;
  g.person = static_cast<Person>(
      field(kPersonShift, kTwoBits, kPersonCount, "person"));
  g.tense = static_cast<Tense>(
      field(kTenseShift, kThreeBits, kTenseCount, "tense"));
  return g;
}

GramFeatures parse_tag_string(std::string_view s) {
  if (s.empty()) throw MalformedTag("empty tag");
  GramFeatures g;
  int cls = -1;
  for (int i = 0; i < kPosClassCount; ++i) {
    if (kLayouts[i].letter == s[0]) cls = i;
  }
  if (cls < 0) {
    throw MalformedTag("unknown class letter in tag '" + std::string(s) + "'");
  }
  g.pos_class = static_cast<PosClass>(cls);
  const ClassLayout& layout = kLayouts[cls];
  if (s.size() - 1 > static_cast<std::size_t>(kFieldCount)) {
    throw MalformedTag("tag '" + std::string(s) + "' is too long");
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    const Field f = layout.order[i - 1];
    const std::string_view letters = letters_for(f);
    const auto pos = letters.find(s[i]);
    if (pos == std::string_view::npos) {
      throw MalformedTag("bad " + std::string(field_name(f)) + " letter '" +
                         std::string(1, s[i]) + "' in tag '" +
                         std::string(s) + "'");
    }
    set_field(g, f, static_cast<int>(pos));
  }
  return g;
}

std::string format_tag_string(const GramFeatures& g) {
  const auto cls = static_cast<std::size_t>(g.pos_class);
  const ClassLayout& layout =
      kLayouts[cls < kLayouts.size() ? cls : 0];
  int len = layout.primary;
  for (int i = layout.primary; i < kFieldCount; ++i) {
    if (get_field(g, layout.order[i]) != 0) len = i + 1;
  }
  std::string out(1, layout.letter);
  for (int i = 0; i < len; ++i) {
    const Field f = layout.order[i];
    out += letters_for(f)[get_field(g, f)];
  }
  return out;
}

bool tags_compatible(const GramFeatures& q, const GramFeatures& c) {
  if (q.pos_class != PosClass::kUnspecified && q.pos_class != c.pos_class)
    return false;
  if (q.gender != Gender::kUnspecified && q.gender != c.gender) return false;
  if (q.number != Number::kUnspecified && q.number != c.number) return false;
  if (q.article != Article::kUnspecified && q.article != c.article)
    return false;
  if (q.extended && !c.extended) return false;
  if (q.person != Person::kUnspecified && q.person != c.person) return false;
  if (q.tense != Tense::kUnspecified && q.tense != c.tense) return false;
  return true;
}

int specified_field_count(const GramFeatures& g) {
  return (g.pos_class != PosClass::kUnspecified) +
         (g.gender != Gender::kUnspecified) +
         (g.number != Number::kUnspecified) +
         (g.article != Article::kUnspecified) + (g.extended ? 1 : 0) +
         (g.person != Person::kUnspecified) +
         (g.tense != Tense::kUnspecified);
}

GramFeatures pos_only(const GramFeatures& g) {
  GramFeatures out;
  out.pos_class = g.pos_class;
  return out;
}

std::string format_hex(PackedTag packed) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%08x", packed.value);
  return buf;
}

PackedTag parse_hex(std::string_view s) {
  std::string_view digits = s;
  if (digits.size() >= 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  if (digits.empty() || digits.size() > 8) {
    throw MalformedTag("bad hex tag '" + std::string(s) + "'");
  }
  std::uint32_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), v, 16);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw MalformedTag("bad hex tag '" + std::string(s) + "'");
  }
  return PackedTag{v};
}

std::string_view to_string(PosClass v) {
  static constexpr std::array<std::string_view, kPosClassCount> kNames = {
      "unspecified", "noun",        "adjective",   "verb",
      "pronoun",     "numeral",     "adverb",      "preposition",
      "conjunction", "particle",    "interjection"};
  const auto i = static_cast<std::size_t>(v);
  return i < kNames.size() ? kNames[i] : "invalid";
}

std::string_view to_string(Gender v) {
  static constexpr std::array<std::string_view, kGenderCount> kNames = {
      "unspecified", "masculine", "feminine", "neuter"};
  const auto i = static_cast<std::size_t>(v);
  return i < kNames.size() ? kNames[i] : "invalid";
}

std::string_view to_string(Number v) {
  static constexpr std::array<std::string_view, kNumberCount> kNames = {
      "unspecified", "singular", "plural"};
  const auto i = static_cast<std::size_t>(v);
  return i < kNames.size() ? kNames[i] : "invalid";
}

std::string_view to_string(Article v) {
  static constexpr std::array<std::string_view, kArticleCount> kNames = {
      "unspecified", "indefinite", "definite", "definite-full"};
  const auto i = static_cast<std::size_t>(v);
  return i < kNames.size() ? kNames[i] : "invalid";
}

std::string_view to_string(Person v) {
  static constexpr std::array<std::string_view, kPersonCount> kNames = {
      "unspecified", "first", "second", "third"};
  const auto i = static_cast<std::size_t>(v);
  return i < kNames.size() ? kNames[i] : "invalid";
}

std::string_view to_string(Tense v) {
  static constexpr std::array<std::string_view, kTenseCount> kNames = {
      "unspecified", "present", "aorist", "imperfect", "imperative"};
  const auto i = static_cast<std::size_t>(v);
  return i < kNames.size() ? kNames[i] : "invalid";
}

}  // namespace bglemma
