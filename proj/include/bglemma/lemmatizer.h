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

// Dictionary lemmatization of POS-tagged tokens.
//
// For each token the dictionary is consulted with the surface as written,
// then fully lowercased, then (sentence-initial tokens with only a leading
// capital) with the first letter lowered. Candidates must be compatible with
// the token's query tag; among those the most specific candidate wins, ties
// going to the smaller lemma, then the smaller packed tag. When no candidate
// is compatible the query is relaxed to its POS class, and then dropped.
// Unknown words lemmatize to their lowercase form and are flagged OOV.

#ifndef BGLEMMA_LEMMATIZER_H_
#define BGLEMMA_LEMMATIZER_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bglemma/dictionary.h"
#include "bglemma/tagset.h"

namespace bglemma {

struct TokenRecord {
  std::string surface;
  GramFeatures query_tag;
  bool sentence_initial = false;

  friend bool operator==(const TokenRecord&, const TokenRecord&) = default;
};

struct LemmaResult {
  std::string lemma;
  std::optional<PackedTag> matched_tag;
  // Candidates found at the casing level that produced a match.
  std::size_t candidate_count = 0;
  bool oov = true;

  friend bool operator==(const LemmaResult&, const LemmaResult&) = default;
};

struct LemmatizerOptions {
  // Relax an incompatible query to POS only, then to no query at all.
  // Without it such tokens are reported as OOV.
  bool fallback = true;
};

LemmaResult lemmatize(const Dictionary& dict, const TokenRecord& token,
                      const LemmatizerOptions& options = {});

struct AnnotatedToken {
  TokenRecord token;
  LemmaResult result;
};

std::vector<AnnotatedToken> lemmatize_stream(
    const Dictionary& dict, std::span<const TokenRecord> tokens,
    const LemmatizerOptions& options = {});

// --- Token stream TSV --------------------------------------------------------
//
// One token per line: surface<TAB>tag[<TAB>lemma]. A blank line ends a
// sentence. A line starting with '#' and containing no tab is a comment.

struct TsvLine {
  enum class Kind { kToken, kBlank, kComment };

  Kind kind = Kind::kBlank;
  std::size_t line_number = 0;
  std::string text;  // the raw line, without the line terminator
  TokenRecord token;
  std::string tag_string;
  std::optional<std::string> lemma;  // third column, when present
};

class TsvTokenReader {
 public:
  explicit TsvTokenReader(std::istream& in) : in_(in) {}

  // Next line, or nullopt at end of input. Throws ParseError.
  std::optional<TsvLine> next();

 private:
  std::istream& in_;
  std::size_t line_number_ = 0;
  bool at_sentence_start_ = true;
};

struct StreamSummary {
  std::size_t tokens = 0;
  std::size_t oov = 0;
};

// Reads a token stream and writes each token line followed by its lemma and
// an OOV marker column ("O" for OOV, "-" otherwise). Blank and comment lines
// are copied. Throws ParseError on a malformed line, after writing all
// previous lines.
StreamSummary annotate_stream(const Dictionary& dict, std::istream& in,
                              std::ostream& out,
                              const LemmatizerOptions& options = {});

}  // namespace bglemma

#endif  // BGLEMMA_LEMMATIZER_H_
