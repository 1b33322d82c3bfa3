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

// Surface form index.
//
// A DictionaryBuilder accumulates entries; freezing it produces an immutable
// Dictionary that may be shared freely between threads. Candidate lists are
// kept sorted by (lemma, tag value) and free of duplicate (lemma, tag) pairs,
// so every operation is deterministic.

#ifndef BGLEMMA_DICTIONARY_H_
#define BGLEMMA_DICTIONARY_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bglemma/paradigms.h"
#include "bglemma/tagset.h"

namespace bglemma {

struct Lexeme {
  std::string lemma;
  std::string type_id;
};

struct Candidate {
  std::string lemma;
  PackedTag tag;
  std::string paradigm_type;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct DictionaryStats {
  std::size_t lemma_count = 0;
  std::size_t form_count = 0;
  std::size_t ambiguous_surface_count = 0;

  friend bool operator==(const DictionaryStats&,
                         const DictionaryStats&) = default;
};

class Dictionary;

class DictionaryBuilder {
 public:
  DictionaryBuilder() = default;

  // Generates every form of the lexeme and inserts it. Throws whatever
  // generate_word_forms throws; on error the builder is unchanged.
  void add_lexeme(const Lexeme& lexeme, const ParadigmSet& paradigms);

  // Inserts one entry and records entry.paradigm_type for its lemma.
  // A (surface, lemma, tag) already present keeps its first paradigm type.
  void add_entry(const WordEntry& entry);

  // Inserts every entry and lemma of `other`.
  void merge(const Dictionary& other);

  DictionaryStats stats() const;

  // Consumes the builder.
  Dictionary freeze() &&;

 private:
  struct Slot {
    std::string lemma;
    PackedTag tag;
    std::string paradigm_type;
  };

  void insert(std::string_view surface, std::string_view lemma, PackedTag tag,
              std::string_view paradigm_type);

  std::map<std::string, std::vector<Slot>, std::less<>> forms_;
  std::map<std::string, std::set<std::string>, std::less<>> lemmas_;
  std::size_t form_count_ = 0;
};

class Dictionary {
 public:
  // The empty dictionary.
  Dictionary() = default;

  // Exact, case-sensitive match. Empty when the surface is unknown.
  std::vector<Candidate> lookup(std::string_view surface) const;

  // Number of candidates for `surface`, without materializing them.
  std::size_t candidate_count(std::string_view surface) const;

  DictionaryStats stats() const;

  bool empty() const { return surfaces_.empty() && lemmas_.empty(); }
  std::size_t surface_count() const { return surfaces_.size(); }
  std::size_t form_count() const { return entries_.size(); }
  std::size_t lemma_count() const { return lemmas_.size(); }

  // Sorted lemma table and the paradigm types recorded for each lemma.
  const std::vector<std::string>& lemmas() const { return lemmas_; }
  const std::vector<std::string>& lemma_types(std::size_t lemma_index) const {
    return lemma_types_[lemma_index];
  }

  // All entries in canonical order: by surface, then (lemma, tag).
  std::vector<WordEntry> entries() const;

  friend bool operator==(const Dictionary&, const Dictionary&) = default;

 private:
  friend class DictionaryBuilder;
  friend std::string serialize(const Dictionary& dict);
  friend Dictionary deserialize(std::string_view bytes);

  struct StoredEntry {
    std::uint32_t lemma = 0;  // index into lemmas_
    PackedTag tag;
    std::string paradigm_type;

    friend bool operator==(const StoredEntry&, const StoredEntry&) = default;
  };

  // Index of `surface` in surfaces_, or surfaces_.size() when absent.
  std::size_t find_surface(std::string_view surface) const;

  std::vector<std::string> lemmas_;
  std::vector<std::vector<std::string>> lemma_types_;
  std::vector<std::string> surfaces_;
  std::vector<std::uint32_t> offsets_{0};  // surfaces_.size() + 1 entries
  std::vector<StoredEntry> entries_;
};

// Union of both dictionaries. Where the same (surface, lemma, tag) occurs in
// both with different paradigm types, the one from `a` is kept.
Dictionary merge(const Dictionary& a, const Dictionary& b);

// Binary format, all integers little-endian:
//
//   "BGLX" 0x01 '\n'
//   u32 lemma_count  u32 surface_count  u32 form_count
//   lemma_count   x { str lemma, u32 n, n x str type_id }
//   surface_count x { str surface, u32 n, n x { u32 lemma_index, u32 tag,
//                                               str paradigm_type } }
//   u32 CRC-32 of every preceding byte
//
// where str is a u32 byte length followed by UTF-8 bytes. Output is a pure
// function of the dictionary contents.
std::string serialize(const Dictionary& dict);

// Throws FormatError.
Dictionary deserialize(std::string_view bytes);

// Throws IoError.
void save(const Dictionary& dict, const std::filesystem::path& path);

// Throws IoError or FormatError.
Dictionary load_dictionary(const std::filesystem::path& path);

}  // namespace bglemma

#endif  // BGLEMMA_DICTIONARY_H_
