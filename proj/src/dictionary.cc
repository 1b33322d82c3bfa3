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

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <limits>
#include <tuple>

#include "bglemma/error.h"
#include "bglemma/unicode.h"

namespace bglemma {
namespace {

constexpr std::string_view kMagic = "BGLX";
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kHeaderSize = 6;

class Writer {
 public:
  void bytes(std::string_view s) { out_.append(s); }
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    bytes(s);
  }
  std::string& buffer() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<std::uint32_t>(
               static_cast<unsigned char>(data_[pos_ + i]))
           << (8 * i);
    }
    pos_ += 4;
    return v;
  }

  std::string str() {
    const std::uint32_t n = u32();
    need(n);
    std::string s(data_.substr(pos_, n));
    pos_ += n;
    if (!unicode::is_valid_utf8(s)) throw FormatError("string is not UTF-8");
    return s;
  }

  // Bounds a count read from the file by the bytes left, each element taking
  // at least `min_element_size` bytes.
  std::uint32_t count(std::size_t min_element_size) {
    const std::uint32_t n = u32();
    if (static_cast<std::uint64_t>(n) * min_element_size > remaining()) {
      throw FormatError("truncated dictionary");
    }
    return n;
  }

  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (n > remaining()) throw FormatError("truncated dictionary");
  }

  std::string_view data_;
  std::size_t pos_ = 0;
};

std::uint32_t crc32_of(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large buffers in pieces.
  constexpr std::size_t kChunk = 1u << 30;
  for (std::size_t off = 0; off < bytes.size(); off += kChunk) {
    const std::size_t n = std::min(kChunk, bytes.size() - off);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data() + off),
                static_cast<uInt>(n));
  }
  return static_cast<std::uint32_t>(crc);
}

std::uint32_t checked_u32(std::size_t n, const char* what) {
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgument(std::string("too many ") + what + " to serialize");
  }
  return static_cast<std::uint32_t>(n);
}

}  // namespace

void DictionaryBuilder::insert(std::string_view surface,
                               std::string_view lemma, PackedTag tag,
                               std::string_view paradigm_type) {
  auto it = forms_.find(surface);
  if (it == forms_.end()) {
    it = forms_.emplace(std::string(surface), std::vector<Slot>()).first;
  }
  auto& slots = it->second;
  const auto key = std::make_tuple(lemma, tag);
  const auto pos = std::lower_bound(
      slots.begin(), slots.end(), key, [](const Slot& s, const auto& k) {
        return std::make_tuple(std::string_view(s.lemma), s.tag) < k;
      });
  if (pos != slots.end() && pos->lemma == lemma && pos->tag == tag) return;
  slots.insert(pos, Slot{std::string(lemma), tag, std::string(paradigm_type)});
  ++form_count_;
}

void DictionaryBuilder::add_lexeme(const Lexeme& lexeme,
                                   const ParadigmSet& paradigms) {
  const auto forms =
      generate_word_forms(lexeme.lemma, lexeme.type_id, paradigms);
  for (const WordEntry& e : forms) {
    insert(e.surface, e.lemma, e.tag, e.paradigm_type);
  }
  auto it = lemmas_.find(lexeme.lemma);
  if (it == lemmas_.end()) {
    it = lemmas_.emplace(lexeme.lemma, std::set<std::string>()).first;
  }
  it->second.insert(lexeme.type_id);
}

void DictionaryBuilder::add_entry(const WordEntry& entry) {
  if (entry.surface.empty() || entry.lemma.empty()) {
    throw InvalidArgument("entry needs a surface and a lemma");
  }
  decode_tag(entry.tag);
  insert(entry.surface, entry.lemma, entry.tag, entry.paradigm_type);
  lemmas_[entry.lemma].insert(entry.paradigm_type);
}

void DictionaryBuilder::merge(const Dictionary& other) {
  for (std::size_t i = 0; i < other.lemmas_.size(); ++i) {
    auto& types = lemmas_[other.lemmas_[i]];
    types.insert(other.lemma_types_[i].begin(), other.lemma_types_[i].end());
  }
  for (std::size_t s = 0; s < other.surfaces_.size(); ++s) {
    for (std::uint32_t k = other.offsets_[s]; k < other.offsets_[s + 1]; ++k) {
      const auto& e = other.entries_[k];
      insert(other.surfaces_[s], other.lemmas_[e.lemma], e.tag,
             e.paradigm_type);
    }
  }
}

DictionaryStats DictionaryBuilder::stats() const {
  DictionaryStats st;
  st.lemma_count = lemmas_.size();
  st.form_count = form_count_;
  for (const auto& [surface, slots] : forms_) {
    if (slots.size() >= 2) ++st.ambiguous_surface_count;
  }
  return st;
}

Dictionary DictionaryBuilder::freeze() && {
  Dictionary d;
  d.lemmas_.reserve(lemmas_.size());
  d.lemma_types_.reserve(lemmas_.size());
  for (auto& [lemma, types] : lemmas_) {
    d.lemmas_.push_back(lemma);
    d.lemma_types_.emplace_back(types.begin(), types.end());
  }
  d.surfaces_.reserve(forms_.size());
  d.offsets_.reserve(forms_.size() + 1);
  d.entries_.reserve(form_count_);
  for (auto& [surface, slots] : forms_) {
    d.surfaces_.push_back(surface);
    for (Slot& s : slots) {
      const auto it =
          std::lower_bound(d.lemmas_.begin(), d.lemmas_.end(), s.lemma);
      d.entries_.push_back(Dictionary::StoredEntry{
          static_cast<std::uint32_t>(it - d.lemmas_.begin()), s.tag,
          std::move(s.paradigm_type)});
    }
    d.offsets_.push_back(checked_u32(d.entries_.size(), "entries"));
  }
  forms_.clear();
  lemmas_.clear();
  form_count_ = 0;
  return d;
}

std::size_t Dictionary::find_surface(std::string_view surface) const {
  const auto it = std::lower_bound(
      surfaces_.begin(), surfaces_.end(), surface,
      [](const std::string& a, std::string_view b) { return a < b; });
  if (it == surfaces_.end() || *it != surface) return surfaces_.size();
  return static_cast<std::size_t>(it - surfaces_.begin());
}

std::vector<Candidate> Dictionary::lookup(std::string_view surface) const {
  std::vector<Candidate> out;
  const std::size_t s = find_surface(surface);
  if (s == surfaces_.size()) return out;
  out.reserve(offsets_[s + 1] - offsets_[s]);
  for (std::uint32_t k = offsets_[s]; k < offsets_[s + 1]; ++k) {
    const auto& e = entries_[k];
    out.push_back(Candidate{lemmas_[e.lemma], e.tag, e.paradigm_type});
  }
  return out;
}

std::size_t Dictionary::candidate_count(std::string_view surface) const {
  const std::size_t s = find_surface(surface);
  return s == surfaces_.size() ? 0 : offsets_[s + 1] - offsets_[s];
}

DictionaryStats Dictionary::stats() const {
  DictionaryStats st;
  st.lemma_count = lemmas_.size();
  st.form_count = entries_.size();
  for (std::size_t s = 0; s < surfaces_.size(); ++s) {
    if (offsets_[s + 1] - offsets_[s] >= 2) ++st.ambiguous_surface_count;
  }
  return st;
}

std::vector<WordEntry> Dictionary::entries() const {
  std::vector<WordEntry> out;
  out.reserve(entries_.size());
  for (std::size_t s = 0; s < surfaces_.size(); ++s) {
    for (std::uint32_t k = offsets_[s]; k < offsets_[s + 1]; ++k) {
      const auto& e = entries_[k];
      out.push_back(
          WordEntry{surfaces_[s], lemmas_[e.lemma], e.tag, e.paradigm_type});
    }
  }
  return out;
}

Dictionary merge(const Dictionary& a, const Dictionary& b) {
  DictionaryBuilder builder;
  builder.merge(a);
  builder.merge(b);
  return std::move(builder).freeze();
}

std::string serialize(const Dictionary& d) {
  Writer w;
  w.bytes(kMagic);
  w.u8(kVersion);
  w.u8('\n');
  w.u32(checked_u32(d.lemmas_.size(), "lemmas"));
  w.u32(checked_u32(d.surfaces_.size(), "surfaces"));
  w.u32(checked_u32(d.entries_.size(), "entries"));
  for (std::size_t i = 0; i < d.lemmas_.size(); ++i) {
    w.str(d.lemmas_[i]);
    w.u32(checked_u32(d.lemma_types_[i].size(), "types"));
    for (const auto& t : d.lemma_types_[i]) w.str(t);
  }
  for (std::size_t s = 0; s < d.surfaces_.size(); ++s) {
    w.str(d.surfaces_[s]);
    w.u32(d.offsets_[s + 1] - d.offsets_[s]);
    for (std::uint32_t k = d.offsets_[s]; k < d.offsets_[s + 1]; ++k) {
      const auto& e = d.entries_[k];
      w.u32(e.lemma);
      w.u32(e.tag.value);
      w.str(e.paradigm_type);
    }
  }
  w.u32(crc32_of(w.buffer()));
  return std::move(w.buffer());
}

Dictionary deserialize(std::string_view bytes) {
  if (bytes.size() < kMagic.size() || bytes.substr(0, 4) != kMagic) {
    throw FormatError("not a dictionary file (bad magic)");
  }
  if (bytes.size() < kHeaderSize + 16) throw FormatError("truncated dictionary");
  if (static_cast<std::uint8_t>(bytes[4]) != kVersion) {
    throw FormatError("unsupported dictionary version " +
                      std::to_string(static_cast<std::uint8_t>(bytes[4])));
  }
  if (bytes[5] != '\n') throw FormatError("bad dictionary header");

  const std::string_view body = bytes.substr(0, bytes.size() - 4);
  if (Reader(bytes.substr(bytes.size() - 4)).u32() != crc32_of(body)) {
    throw FormatError("checksum mismatch (corrupt or truncated file)");
  }

  Reader r(body.substr(kHeaderSize));
  Dictionary d;
  const std::uint32_t lemma_count = r.count(8);
  const std::uint32_t surface_count = r.count(8);
  const std::uint32_t form_count = r.count(12);

  d.lemmas_.reserve(lemma_count);
  d.lemma_types_.reserve(lemma_count);
  for (std::uint32_t i = 0; i < lemma_count; ++i) {
    std::string lemma = r.str();
    if (lemma.empty()) throw FormatError("empty lemma");
    if (!d.lemmas_.empty() && !(d.lemmas_.back() < lemma)) {
      throw FormatError("lemma table out of order");
    }
    std::vector<std::string> types(r.count(4));
    for (auto& t : types) t = r.str();
    if (!std::is_sorted(types.begin(), types.end()) ||
        std::adjacent_find(types.begin(), types.end()) != types.end()) {
      throw FormatError("lemma type list out of order");
    }
    d.lemmas_.push_back(std::move(lemma));
    d.lemma_types_.push_back(std::move(types));
  }

  d.surfaces_.reserve(surface_count);
  d.offsets_.reserve(surface_count + 1);
  d.entries_.reserve(form_count);
  for (std::uint32_t s = 0; s < surface_count; ++s) {
    std::string surface = r.str();
    if (surface.empty()) throw FormatError("empty surface");
    if (!d.surfaces_.empty() && !(d.surfaces_.back() < surface)) {
      throw FormatError("surface table out of order");
    }
    const std::uint32_t n = r.count(12);
    if (n == 0) throw FormatError("surface without candidates");
    const std::size_t first = d.entries_.size();
    for (std::uint32_t k = 0; k < n; ++k) {
      Dictionary::StoredEntry e;
      e.lemma = r.u32();
      e.tag = PackedTag{r.u32()};
      e.paradigm_type = r.str();
      if (e.lemma >= lemma_count) throw FormatError("lemma index out of range");
      try {
        decode_tag(e.tag);
      } catch (const InvalidTag& ex) {
        throw FormatError(ex.what());
      }
      if (d.entries_.size() > first) {
        const auto& prev = d.entries_.back();
        // Lemma indices follow lemma order, so index order is lemma order.
        if (std::tie(prev.lemma, prev.tag) >= std::tie(e.lemma, e.tag)) {
          throw FormatError("candidate list out of order");
        }
      }
      d.entries_.push_back(std::move(e));
    }
    d.surfaces_.push_back(std::move(surface));
    d.offsets_.push_back(static_cast<std::uint32_t>(d.entries_.size()));
  }
  if (d.entries_.size() != form_count) throw FormatError("form count mismatch");
  if (r.remaining() != 0) throw FormatError("trailing bytes in dictionary");
  return d;
}

void save(const Dictionary& dict, const std::filesystem::path& path) {
  const std::string bytes = serialize(dict);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("error writing " + path.string());
}

Dictionary load_dictionary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return deserialize(bytes);
}

}  // namespace bglemma
