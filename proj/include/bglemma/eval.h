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

// Lemmatization accuracy against a gold corpus.
//
// Gold corpora use the token stream format with a mandatory third column:
// surface<TAB>tag<TAB>lemma. Each record is lemmatized with its gold tag as
// the query; a prediction is correct when it equals the gold lemma after NFC
// normalization. No case folding is applied.

#ifndef BGLEMMA_EVAL_H_
#define BGLEMMA_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "bglemma/dictionary.h"
#include "bglemma/lemmatizer.h"

namespace bglemma {

struct EvalMetrics {
  std::size_t tokens = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  std::size_t covered = 0;  // tokens with a dictionary candidate
  std::size_t correct_on_covered = 0;
  double accuracy_on_covered = 0.0;
  double oov_rate = 0.0;
};

// Throws ParseError or EmptyCorpus.
EvalMetrics evaluate(const Dictionary& dict, std::istream& corpus,
                     const LemmatizerOptions& options = {});

// Throws IoError, ParseError or EmptyCorpus.
EvalMetrics evaluate(const Dictionary& dict,
                     const std::filesystem::path& corpus,
                     const LemmatizerOptions& options = {});

// Single line: "tokens=... correct=... accuracy=... covered=...
// accuracy_on_covered=... oov_rate=...".
std::string format_report(const EvalMetrics& m);

// The same fields as a JSON object.
std::string metrics_json(const EvalMetrics& m);

// `n` gold lines (surface, tag, lemma) drawn uniformly with replacement from
// the dictionary's entries by a 64-bit Mersenne Twister seeded with `seed`.
// The output depends only on (dict, seed, n).
//
// Throws EmptyDictionary, or InvalidArgument when n == 0.
std::string make_synthetic_corpus(const Dictionary& dict, std::uint64_t seed,
                                  std::size_t n);

// Throws IoError in addition to the above.
void write_synthetic_corpus(const Dictionary& dict, std::uint64_t seed,
                            std::size_t n, const std::filesystem::path& out);

}  // namespace bglemma

#endif  // BGLEMMA_EVAL_H_
