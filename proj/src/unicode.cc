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

#include "bglemma/unicode.h"

#include <unicode/errorcode.h>
#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/ucnv.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <memory>

#include "bglemma/error.h"

namespace bglemma::unicode {
namespace {

const icu::Locale& bulgarian() {
  static const icu::Locale locale("bg");
  return locale;
}

icu::UnicodeString from_utf8(std::string_view s) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<std::int32_t>(s.size())));
}

std::string to_std(const icu::UnicodeString& u) {
  std::string out;
  u.toUTF8String(out);
  return out;
}

// Byte length of the first character of `s`, or 0 when `s` is empty.
std::size_t first_char_bytes(std::string_view s) {
  if (s.empty()) return 0;
  std::int32_t i = 0;
  UChar32 c;
  U8_NEXT(s.data(), i, static_cast<std::int32_t>(s.size()), c);
  return static_cast<std::size_t>(i);
}

}  // namespace

bool is_valid_utf8(std::string_view s) {
  const auto n = static_cast<std::int32_t>(s.size());
  std::int32_t i = 0;
  while (i < n) {
    UChar32 c;
    U8_NEXT(s.data(), i, n, c);
    if (c < 0) return false;
  }
  return true;
}

std::size_t char_length(std::string_view s) {
  const auto n = static_cast<std::int32_t>(s.size());
  std::int32_t i = 0;
  std::size_t count = 0;
  while (i < n) {
    UChar32 c;
    U8_NEXT(s.data(), i, n, c);
    if (c < 0) throw InvalidArgument("invalid UTF-8");
    ++count;
  }
  return count;
}

std::string drop_last_chars(std::string_view s, std::size_t n) {
  auto end = static_cast<std::int32_t>(s.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (end == 0) throw InvalidArgument("string too short");
    UChar32 c;
    U8_PREV(s.data(), 0, end, c);
    if (c < 0) throw InvalidArgument("invalid UTF-8");
  }
  return std::string(s.substr(0, static_cast<std::size_t>(end)));
}

std::string to_lower(std::string_view s) {
  icu::UnicodeString u = from_utf8(s);
  u.toLower(bulgarian());
  return to_std(u);
}

std::string lower_first(std::string_view s) {
  const std::size_t n = first_char_bytes(s);
  return to_lower(s.substr(0, n)) + std::string(s.substr(n));
}

bool has_upper(std::string_view s) {
  const auto n = static_cast<std::int32_t>(s.size());
  std::int32_t i = 0;
  while (i < n) {
    UChar32 c;
    U8_NEXT(s.data(), i, n, c);
    if (c >= 0 && u_isupper(c)) return true;
  }
  return false;
}

bool only_first_upper(std::string_view s) {
  if (s.empty()) return false;
  const std::size_t n = first_char_bytes(s);
  std::int32_t i = 0;
  UChar32 c;
  U8_NEXT(s.data(), i, static_cast<std::int32_t>(s.size()), c);
  return c >= 0 && u_isupper(c) && !has_upper(s.substr(n));
}

std::string normalize_nfc(std::string_view s) {
  icu::ErrorCode status;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (status.isFailure()) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString out = nfc->normalize(from_utf8(s), status);
  if (status.isFailure()) throw InvalidArgument("cannot normalize string");
  return to_std(out);
}

std::string to_utf8(std::string_view bytes, std::string_view encoding) {
  const std::string enc(encoding);
  if (enc == "utf-8" || enc == "UTF-8" || enc == "utf8") {
    if (!is_valid_utf8(bytes)) throw InvalidArgument("invalid UTF-8 input");
    return std::string(bytes);
  }
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<UConverter, decltype(&ucnv_close)> conv(
      ucnv_open(enc.c_str(), &status), &ucnv_close);
  if (U_FAILURE(status)) {
    throw InvalidArgument("unknown encoding '" + enc + "'");
  }
  ucnv_setToUCallBack(conv.get(), UCNV_TO_U_CALLBACK_STOP, nullptr, nullptr,
                      nullptr, &status);
  icu::UnicodeString u(bytes.data(), static_cast<std::int32_t>(bytes.size()),
                       conv.get(), status);
  if (U_FAILURE(status)) {
    throw InvalidArgument("input is not valid " + enc);
  }
  return to_std(u);
}

}  // namespace bglemma::unicode
