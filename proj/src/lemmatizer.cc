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

#include "bglemma/lemmatizer.h"

#include <istream>
#include <ostream>

#include "bglemma/error.h"
#include "bglemma/unicode.h"

namespace bglemma {
namespace {

// Query fields the candidate reproduces, plus the fields the candidate
// specifies at all.
int score(const GramFeatures& q, const GramFeatures& c) {
  int matched = 0;
  if (q.pos_class != PosClass::kUnspecified && q.pos_class == c.pos_class)
    ++matched;
  if (q.gender != Gender::kUnspecified && q.gender == c.gender) ++matched;
  if (q.number != Number::kUnspecified && q.number == c.number) ++matched;
  if (q.article != Article::kUnspecified && q.article == c.article) ++matched;
  if (q.extended && c.extended) ++matched;
  if (q.person != Person::kUnspecified && q.person == c.person) ++matched;
  if (q.tense != Tense::kUnspecified && q.tense == c.tense) ++matched;
  return matched + specified_field_count(c);
}

struct Decoded {
  const Candidate* candidate;
  GramFeatures features;
};

// Best candidate among those compatible with `query` (all of them when
// `filter` is false). Candidates arrive sorted by (lemma, tag), so the
// first maximum is the tie-break winner.
const Candidate* choose(const std::vector<Decoded>& cands,
                        const GramFeatures& query, bool filter) {
  const Candidate* best = nullptr;
  int best_score = -1;
  for (const Decoded& d : cands) {
    if (filter && !tags_compatible(query, d.features)) continue;
    const int s = score(query, d.features);
    if (s > best_score) {
      best = d.candidate;
      best_score = s;
    }
  }
  return best;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

LemmaResult lemmatize(const Dictionary& dict, const TokenRecord& token,
                      const LemmatizerOptions& options) {
  std::vector<Candidate> found = dict.lookup(token.surface);
  if (found.empty() && unicode::has_upper(token.surface)) {
    found = dict.lookup(unicode::to_lower(token.surface));
    if (found.empty() && token.sentence_initial &&
        unicode::only_first_upper(token.surface)) {
      found = dict.lookup(unicode::lower_first(token.surface));
    }
  }

  LemmaResult result;
  result.candidate_count = found.size();
  if (found.empty()) {
    result.lemma = unicode::to_lower(token.surface);
    return result;
  }

  std::vector<Decoded> decoded;
  decoded.reserve(found.size());
  for (const Candidate& c : found) {
    decoded.push_back(Decoded{&c, decode_tag(c.tag)});
  }

  const Candidate* best = choose(decoded, token.query_tag, true);
  if (best == nullptr && options.fallback) {
    best = choose(decoded, pos_only(token.query_tag), true);
    if (best == nullptr) best = choose(decoded, token.query_tag, false);
  }
  if (best == nullptr) {
    result.lemma = unicode::to_lower(token.surface);
    return result;
  }
  result.lemma = best->lemma;
  result.matched_tag = best->tag;
  result.oov = false;
  return result;
}

std::vector<AnnotatedToken> lemmatize_stream(
    const Dictionary& dict, std::span<const TokenRecord> tokens,
    const LemmatizerOptions& options) {
  std::vector<AnnotatedToken> out;
  out.reserve(tokens.size());
  for (const TokenRecord& t : tokens) {
    out.push_back(AnnotatedToken{t, lemmatize(dict, t, options)});
  }
  return out;
}

std::optional<TsvLine> TsvTokenReader::next() {
  std::string raw;
  if (!std::getline(in_, raw)) {
    if (in_.bad()) throw IoError("error reading token stream");
    return std::nullopt;
  }
  ++line_number_;
  if (!raw.empty() && raw.back() == '\r') raw.pop_back();
  if (line_number_ == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);

  TsvLine line;
  line.line_number = line_number_;
  line.text = raw;
  if (raw.find_first_not_of(" \t") == std::string::npos) {
    line.kind = TsvLine::Kind::kBlank;
    at_sentence_start_ = true;
    return line;
  }
  if (raw.front() == '#' && raw.find('\t') == std::string::npos) {
    line.kind = TsvLine::Kind::kComment;
    return line;
  }

  const auto cols = split_tabs(raw);
  if (cols.size() < 2 || cols.size() > 3) {
    throw ParseError(line_number_, "expected surface<TAB>tag[<TAB>lemma]");
  }
  if (cols[0].empty()) throw ParseError(line_number_, "empty surface");
  if (!unicode::is_valid_utf8(raw)) {
    throw ParseError(line_number_, "line is not valid UTF-8");
  }
  line.kind = TsvLine::Kind::kToken;
  line.token.surface = std::string(cols[0]);
  line.tag_string = std::string(cols[1]);
  try {
    line.token.query_tag = parse_tag_string(cols[1]);
  } catch (const MalformedTag& e) {
    throw ParseError(line_number_, e.what());
  }
  line.token.sentence_initial = at_sentence_start_;
  if (cols.size() == 3) line.lemma = std::string(cols[2]);
  at_sentence_start_ = false;
  return line;
}

StreamSummary annotate_stream(const Dictionary& dict, std::istream& in,
                              std::ostream& out,
                              const LemmatizerOptions& options) {
  StreamSummary summary;
  TsvTokenReader reader(in);
  while (auto line = reader.next()) {
    if (line->kind != TsvLine::Kind::kToken) {
      out << line->text << '\n';
      continue;
    }
    const LemmaResult r = lemmatize(dict, line->token, options);
    ++summary.tokens;
    if (r.oov) ++summary.oov;
    out << line->text << '\t' << r.lemma << '\t' << (r.oov ? "O" : "-")
        << '\n';
  }
  return summary;
}

}  // namespace bglemma
