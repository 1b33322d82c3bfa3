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

// Morphosyntactic feature bundles, their 32-bit packed form and their
// positional string form.
//
// Packed layout (least significant bit first):
//
//   bits  0-4   pos class
//   bits  5-6   gender
//   bits  7-8   number
//   bits  9-10  article
//   bit   11    extended form
//   bits 12-13  person
//   bits 14-16  tense
//   bits 17-31  reserved, always zero
//
// Value 0 is "unspecified" in every field, so PackedTag{0} carries no
// information at all.
//
// Positional strings start with a class letter (N A V P M D R C T I, or '-'
// for an unspecified class) followed by one letter per feature, '-' meaning
// unspecified. Each class lists its own features first:
//
//   N  gender number article            "Nmsd"
//   A  gender number article extended   "Amsf-"
//   V  tense person number              "Vr3s"
//   P  person gender number             "P3ms"
//   M  gender number article            "Mmpi"
//   D R C T I -                         "D"
//
// The remaining features follow in the order gender, number, article,
// extended, person, tense. Trailing '-' positions may be omitted when
// parsing; formatting always writes the class positions and only as many
// trailing positions as needed to carry every specified feature.

#ifndef BGLEMMA_TAGSET_H_
#define BGLEMMA_TAGSET_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bglemma {

enum class PosClass : std::uint8_t {
  kUnspecified = 0,
  kNoun = 1,
  kAdjective = 2,
  kVerb = 3,
  kPronoun = 4,
  kNumeral = 5,
  kAdverb = 6,
  kPreposition = 7,
  kConjunction = 8,
  kParticle = 9,
  kInterjection = 10,
};

enum class Gender : std::uint8_t {
  kUnspecified = 0,
  kMasculine = 1,
  kFeminine = 2,
  kNeuter = 3,
};

enum class Number : std::uint8_t {
  kUnspecified = 0,
  kSingular = 1,
  kPlural = 2,
};

enum class Article : std::uint8_t {
  kUnspecified = 0,
  kIndefinite = 1,
  kDefinite = 2,
  kDefiniteFull = 3,
};

enum class Person : std::uint8_t {
  kUnspecified = 0,
  kFirst = 1,
  kSecond = 2,
  kThird = 3,
};

enum class Tense : std::uint8_t {
  kUnspecified = 0,
  kPresent = 1,
  kAorist = 2,
  kImperfect = 3,
  kImperative = 4,
};

// Number of values in each enum, including kUnspecified.
inline constexpr int kPosClassCount = 11;
inline constexpr int kGenderCount = 4;
inline constexpr int kNumberCount = 3;
inline constexpr int kArticleCount = 4;
inline constexpr int kPersonCount = 4;
inline constexpr int kTenseCount = 5;

struct GramFeatures {
  PosClass pos_class = PosClass::kUnspecified;
  Gender gender = Gender::kUnspecified;
  Number number = Number::kUnspecified;
  Article article = Article::kUnspecified;
  bool extended = false;
  Person person = Person::kUnspecified;
  Tense tense = Tense::kUnspecified;

  friend bool operator==(const GramFeatures&, const GramFeatures&) = default;
};

struct PackedTag {
  std::uint32_t value = 0;

  friend auto operator<=>(const PackedTag&, const PackedTag&) = default;
};

inline constexpr std::uint32_t kReservedTagMask = 0xFFFE0000u;

PackedTag encode_tag(const GramFeatures& features);

// Throws InvalidTag when a reserved bit is set or a field is out of range.
GramFeatures decode_tag(PackedTag packed);

// Throws MalformedTag.
GramFeatures parse_tag_string(std::string_view s);

std::string format_tag_string(const GramFeatures& features);

// Wildcard subsumption: every field the query specifies must equal the
// candidate's. `extended` only counts when the query sets it.
bool tags_compatible(const GramFeatures& query, const GramFeatures& candidate);

// Number of fields that are not unspecified (extended counts when true).
int specified_field_count(const GramFeatures& features);

// Only the class of `features`, every other field unspecified.
GramFeatures pos_only(const GramFeatures& features);

// "0x" followed by 8 lowercase hex digits.
std::string format_hex(PackedTag packed);

// Accepts an optional 0x/0X prefix and 1-8 hex digits. Throws MalformedTag.
PackedTag parse_hex(std::string_view s);

std::string_view to_string(PosClass v);
std::string_view to_string(Gender v);
std::string_view to_string(Number v);
std::string_view to_string(Article v);
std::string_view to_string(Person v);
std::string_view to_string(Tense v);

}  // namespace bglemma

#endif  // BGLEMMA_TAGSET_H_
