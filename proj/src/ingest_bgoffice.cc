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

#include <algorithm>
#include <fstream>
#include <system_error>

#include "bglemma/error.h"
#include "bglemma/ingest.h"
#include "bglemma/unicode.h"

namespace bglemma {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

std::vector<std::filesystem::path> matching_files(
    const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  fs::recursive_directory_iterator it(
      dir, fs::directory_options::follow_directory_symlink, ec);
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  for (const fs::recursive_directory_iterator end; it != end;
       it.increment(ec)) {
    if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
    if (!it->is_regular_file(ec)) continue;
    if (bgoffice_type_from_filename(it->path().filename().string())) {
      files.push_back(it->path());
    }
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

ScanReport& ScanReport::operator+=(const ScanReport& o) {
  files_processed += o.files_processed;
  lines_scanned += o.lines_scanned;
  lexemes_added += o.lexemes_added;
  lines_skipped += o.lines_skipped;
  for (const auto& [type, n] : o.unknown_types) unknown_types[type] += n;
  pages_seen += o.pages_seen;
  pages_ignored += o.pages_ignored;
  pages_without_marker += o.pages_without_marker;
  return *this;
}

std::optional<std::string> bgoffice_type_from_filename(std::string_view name) {
  constexpr std::string_view kPrefix = "bg";
  constexpr std::string_view kExt = ".dat";
  if (name.size() <= kPrefix.size() + kExt.size() ||
      !name.starts_with(kPrefix) || !name.ends_with(kExt)) {
    return std::nullopt;
  }
  const std::string_view type =
      name.substr(kPrefix.size(), name.size() - kPrefix.size() - kExt.size());
  if (!is_valid_type_id(type)) return std::nullopt;
  return std::string(type);
}

ScanReport scan_bgoffice(const std::filesystem::path& dir,
                         DictionaryBuilder& dict, const ParadigmSet& paradigms,
                         const ScanPolicy& policy,
                         const BgofficeOptions& options) {
  ScanReport report;
  for (const auto& file : matching_files(dir)) {
    const std::string type = *bgoffice_type_from_filename(
        file.filename().string());
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot read " + file.string());
    ++report.files_processed;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      if (line_no == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
      std::string line;
      bool malformed = false;
      try {
        line = unicode::to_utf8(raw, options.encoding);
      } catch (const InvalidArgument&) {
        malformed = true;
      }
      const std::string_view lemma = trim(line);
      if (!malformed && (lemma.empty() || lemma.front() == '#')) continue;
      ++report.lines_scanned;
      if (!malformed && lemma.find_first_of(" \t") != std::string_view::npos) {
        malformed = true;
      }
      if (malformed) {
        if (policy.strict) {
          throw ParseError(line_no, file.string() + ": malformed lemma line");
        }
        ++report.lines_skipped;
        continue;
      }
      try {
        dict.add_lexeme(Lexeme{std::string(lemma), type}, paradigms);
        ++report.lexemes_added;
      } catch (const UnknownType&) {
        if (policy.strict) throw;
        ++report.unknown_types[type];
        ++report.lines_skipped;
      } catch (const LemmaTooShort&) {
        if (policy.strict) throw;
        ++report.lines_skipped;
      }
    }
    if (in.bad()) throw IoError("error reading " + file.string());
  }
  return report;
}

}  // namespace bglemma
