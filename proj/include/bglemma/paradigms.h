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

// Inflectional paradigms and word form generation.
//
// A paradigm is an ordered list of rules. Each rule removes `strip`
// characters from the end of the lemma and appends `suffix`; the base rule
// reproduces the lemma itself. Stem alternations (рядък -> редки) are folded
// into longer strips, so no morphophonology is needed.
//
// Definition file format (UTF-8, '#' starts a comment):
//
//   paradigm 83 pos=A
//   form strip=0 suffix=- tag=Amsi- base
//   form strip=4 suffix=едкия tag=Amsd-
//
// `suffix=-` denotes the empty suffix.

#ifndef BGLEMMA_PARADIGMS_H_
#define BGLEMMA_PARADIGMS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bglemma/tagset.h"

namespace bglemma {

struct FormRule {
  std::size_t strip = 0;
  std::string suffix;
  GramFeatures tag;
  bool is_base = false;

  friend bool operator==(const FormRule&, const FormRule&) = default;
};

struct Paradigm {
  std::string type_id;
  PosClass pos_class = PosClass::kUnspecified;
  std::vector<FormRule> rules;
};

// A generated surface form, linked to its lemma and tag.
struct WordEntry {
  std::string surface;
  std::string lemma;
  PackedTag tag;
  std::string paradigm_type;

  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

// Digits followed by at most one lowercase ASCII letter ("83", "187a").
bool is_valid_type_id(std::string_view type_id);

// Invariant violations of `p`, one message each. Empty iff `p` is valid.
std::vector<std::string> validate_paradigm(const Paradigm& p);

class ParadigmSet {
 public:
  using Map = std::map<std::string, Paradigm, std::less<>>;

  // Throws DuplicateType.
  void add(Paradigm p);

  // nullptr when absent.
  const Paradigm* find(std::string_view type_id) const;

  bool contains(std::string_view type_id) const {
    return find(type_id) != nullptr;
  }
  std::size_t size() const { return paradigms_.size(); }
  bool empty() const { return paradigms_.empty(); }
  Map::const_iterator begin() const { return paradigms_.begin(); }
  Map::const_iterator end() const { return paradigms_.end(); }

 private:
  Map paradigms_;
};

// Throws ParseError, DuplicateType or InvalidRule.
ParadigmSet parse_paradigms(std::istream& in);

// As parse_paradigms; throws IoError when the file cannot be read.
ParadigmSet load_paradigms(const std::filesystem::path& path);

// One entry per rule, in rule order. Throws UnknownType, or LemmaTooShort
// when a rule strips as many characters as the lemma has.
std::vector<WordEntry> generate_word_forms(std::string_view lemma,
                                           std::string_view type_id,
                                           const ParadigmSet& set);

}  // namespace bglemma

#endif  // BGLEMMA_PARADIGMS_H_
