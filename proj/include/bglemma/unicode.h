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

// UTF-8 helpers. Character counts are in Unicode scalar values.

#ifndef BGLEMMA_UNICODE_H_
#define BGLEMMA_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace bglemma::unicode {

bool is_valid_utf8(std::string_view s);

// Throws InvalidArgument on invalid UTF-8.
std::size_t char_length(std::string_view s);

// `s` without its last `n` characters. Requires n <= char_length(s).
std::string drop_last_chars(std::string_view s, std::size_t n);

std::string to_lower(std::string_view s);

// Lowercases the first character only.
std::string lower_first(std::string_view s);

bool has_upper(std::string_view s);

// True iff the first character is uppercase and no other character is.
bool only_first_upper(std::string_view s);

// Canonical composition (NFC).
std::string normalize_nfc(std::string_view s);

// Converts bytes in the named encoding (any name ICU knows, e.g.
// "windows-1251") to UTF-8. "utf-8" input is validated and returned as is.
// Throws InvalidArgument on an unknown encoding or undecodable input.
std::string to_utf8(std::string_view bytes, std::string_view encoding);

}  // namespace bglemma::unicode

#endif  // BGLEMMA_UNICODE_H_
