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

#include "bglemma/paradigms.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "bglemma/error.h"
#include "bglemma/unicode.h"

namespace bglemma {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

struct KeyValue {
  std::string_view key;
  std::string_view value;
};

std::optional<KeyValue> split_key_value(std::string_view token) {
  const auto eq = token.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  return KeyValue{token.substr(0, eq), token.substr(eq + 1)};
}

Paradigm parse_header(const std::vector<std::string_view>& tokens,
                      std::size_t line_no) {
  if (tokens.size() != 3) {
    throw ParseError(line_no, "expected 'paradigm <type> pos=<letter>'");
  }
  Paradigm p;
  p.type_id = std::string(tokens[1]);
  if (!is_valid_type_id(p.type_id)) {
    throw ParseError(line_no, "bad paradigm type '" + p.type_id + "'");
  }
  const auto kv = split_key_value(tokens[2]);
  if (!kv || kv->key != "pos" || kv->value.size() != 1) {
    throw ParseError(line_no, "expected pos=<letter>");
  }
  try {
    p.pos_class = parse_tag_string(kv->value).pos_class;
  } catch (const MalformedTag& e) {
    throw ParseError(line_no, e.what());
  }
  return p;
}

FormRule parse_rule(const std::vector<std::string_view>& tokens,
                    std::size_t line_no) {
  FormRule rule;
  bool have_strip = false, have_suffix = false, have_tag = false;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::string_view tok = tokens[i];
    if (tok == "base") {
      rule.is_base = true;
      continue;
    }
    const auto kv = split_key_value(tok);
    if (!kv) throw ParseError(line_no, "unexpected '" + std::string(tok) + "'");
    if (kv->key == "strip") {
      const auto* first = kv->value.data();
      const auto* last = first + kv->value.size();
      const auto [ptr, ec] = std::from_chars(first, last, rule.strip);
      if (kv->value.empty() || ec != std::errc() || ptr != last) {
        throw ParseError(line_no, "bad strip count");
      }
      have_strip = true;
    } else if (kv->key == "suffix") {
      if (kv->value.empty()) throw ParseError(line_no, "empty suffix value");
      rule.suffix = kv->value == "-" ? std::string() : std::string(kv->value);
      if (!unicode::is_valid_utf8(rule.suffix)) {
        throw ParseError(line_no, "suffix is not valid UTF-8");
      }
      have_suffix = true;
    } else if (kv->key == "tag") {
      try {
        rule.tag = parse_tag_string(kv->value);
      } catch (const MalformedTag& e) {
        throw ParseError(line_no, e.what());
      }
      have_tag = true;
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(kv->key) + "'");
    }
  }
  if (!have_strip || !have_suffix || !have_tag) {
    throw ParseError(line_no, "form needs strip=, suffix= and tag=");
  }
  return rule;
}

void finish(std::optional<Paradigm>& current, ParadigmSet& set) {
  if (!current) return;
  const auto report = validate_paradigm(*current);
  if (!report.empty()) {
    throw InvalidRule("paradigm " + current->type_id + ": " + report.front());
  }
  set.add(std::move(*current));
  current.reset();
}

}  // namespace

bool is_valid_type_id(std::string_view id) {
  std::size_t digits = 0;
  while (digits < id.size() && id[digits] >= '0' && id[digits] <= '9') {
    ++digits;
  }
  if (digits == 0) return false;
  if (digits == id.size()) return true;
  return digits + 1 == id.size() && id[digits] >= 'a' && id[digits] <= 'z';
}

std::vector<std::string> validate_paradigm(const Paradigm& p) {
  std::vector<std::string> report;
  if (!is_valid_type_id(p.type_id)) {
    report.push_back("type id '" + p.type_id + "' is not digits + letter");
  }
  if (p.rules.empty()) report.push_back("paradigm has no rules");
  std::size_t bases = 0;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    const FormRule& r = p.rules[i];
    if (!r.is_base) continue;
    ++bases;
    if (r.strip != 0 || !r.suffix.empty()) {
      report.push_back("base rule " + std::to_string(i + 1) +
                       " must have strip=0 and an empty suffix");
    }
  }
  if (!p.rules.empty() && bases != 1) {
    report.push_back("expected exactly one base rule, found " +
                     std::to_string(bases));
  }
  return report;
}

void ParadigmSet::add(Paradigm p) {
  if (paradigms_.contains(p.type_id)) throw DuplicateType(p.type_id);
  std::string key = p.type_id;
  paradigms_.emplace(std::move(key), std::move(p));
}

const Paradigm* ParadigmSet::find(std::string_view type_id) const {
  const auto it = paradigms_.find(type_id);
  return it == paradigms_.end() ? nullptr : &it->second;
}

ParadigmSet parse_paradigms(std::istream& in) {
  ParadigmSet set;
  std::optional<Paradigm> current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    const auto tokens = split_ws(view);
    if (tokens.empty()) continue;
    if (tokens[0] == "paradigm") {
      finish(current, set);
      Paradigm p = parse_header(tokens, line_no);
      if (set.contains(p.type_id)) throw DuplicateType(p.type_id);
      current = std::move(p);
    } else if (tokens[0] == "form") {
      if (!current) throw ParseError(line_no, "form outside a paradigm block");
      current->rules.push_back(parse_rule(tokens, line_no));
    } else {
      throw ParseError(line_no, "unknown directive '" +
                                    std::string(tokens[0]) + "'");
    }
  }
  finish(current, set);
  return set;
}

ParadigmSet load_paradigms(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read paradigm file " + path.string());
  return parse_paradigms(in);
}

std::vector<WordEntry> generate_word_forms(std::string_view lemma,
                                           std::string_view type_id,
                                           const ParadigmSet& set) {
  if (lemma.empty()) throw InvalidArgument("empty lemma");
  const Paradigm* p = set.find(type_id);
  if (p == nullptr) throw UnknownType(std::string(type_id));
  const std::size_t length = unicode::char_length(lemma);
  for (const FormRule& r : p->rules) {
    if (r.strip >= length) {
      throw LemmaTooShort("lemma '" + std::string(lemma) + "' has " +
                          std::to_string(length) + " characters, type " +
                          p->type_id + " strips " + std::to_string(r.strip));
    }
  }
  std::vector<WordEntry> forms;
  forms.reserve(p->rules.size());
  for (const FormRule& r : p->rules) {
    forms.push_back(WordEntry{unicode::drop_last_chars(lemma, r.strip) +
                                  r.suffix,
                              std::string(lemma), encode_tag(r.tag),
                              p->type_id});
  }
  return forms;
}

}  // namespace bglemma
