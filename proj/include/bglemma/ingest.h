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

// Populating a dictionary from external lexical resources: a BG Office
// developer package and a MediaWiki (Wiktionary) XML dump.

#ifndef BGLEMMA_INGEST_H_
#define BGLEMMA_INGEST_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bglemma/dictionary.h"
#include "bglemma/paradigms.h"

namespace bglemma {

struct ScanPolicy {
  // Abort on the first unknown type, short lemma or malformed record
  // instead of skipping and counting it.
  bool strict = false;
};

struct ScanReport {
  std::size_t files_processed = 0;
  // Lemma records examined: lemma lines of .dat files, or (title, type)
  // markers found in dump pages. Always lexemes_added + lines_skipped.
  std::size_t lines_scanned = 0;
  std::size_t lexemes_added = 0;
  std::size_t lines_skipped = 0;
  std::map<std::string, std::size_t> unknown_types;
  // Dump scans only.
  std::size_t pages_seen = 0;
  std::size_t pages_ignored = 0;  // other namespaces and redirects
  std::size_t pages_without_marker = 0;

  ScanReport& operator+=(const ScanReport& other);
  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// --- BG Office -------------------------------------------------------------

struct BgofficeOptions {
  // Encoding of the .dat files; any name ICU accepts ("windows-1251", ...).
  std::string encoding = "utf-8";
};

// "bg83.dat" -> "83", "bg187a.dat" -> "187a"; nullopt for other names.
std::optional<std::string> bgoffice_type_from_filename(std::string_view name);

// Walks `dir` recursively. Every file named bg<digits>[a-z].dat holds one
// lemma per line of the type named by the file; blank lines and lines
// starting with '#' are ignored. Files are visited in sorted path order.
//
// Throws IoError. In strict mode also UnknownType, LemmaTooShort or
// ParseError for the first bad line.
ScanReport scan_bgoffice(const std::filesystem::path& dir,
                         DictionaryBuilder& dict, const ParadigmSet& paradigms,
                         const ScanPolicy& policy = {},
                         const BgofficeOptions& options = {});

// --- Wiktionary ------------------------------------------------------------

struct DumpPage {
  std::string title;
  std::int64_t ns = 0;
  bool redirect = false;
  std::string text;  // wikitext of the last revision
};

// Streams <page> elements of a MediaWiki XML export. Throws XmlError.
void read_dump_xml(std::istream& in,
                   const std::function<void(const DumpPage&)>& on_page);

// Opens `path`, decompressing bzip2 on the fly when the file is bzip2
// (detected by its "BZh" magic, required for *.bz2 names), and streams its
// pages. Throws IoError, DecompressError or XmlError.
void read_dump_file(const std::filesystem::path& path,
                    const std::function<void(const DumpPage&)>& on_page);

struct WiktionaryOptions {
  // Template names whose first positional parameter is a paradigm type,
  // e.g. {{bg-type|83}}. The first letter matches case-insensitively, as
  // MediaWiki does; '_' and ' ' are equivalent.
  std::vector<std::string> template_names = {"bg-type", "Словоформи"};
};

// Paradigm types named by marker templates in `wikitext`, in order of first
// appearance and without duplicates. Invocations whose first positional
// parameter is not a valid type id are not markers.
std::vector<std::string> extract_type_markers(
    std::string_view wikitext, const std::vector<std::string>& template_names);

// Adds one lexeme (title, type) per marker on every main-namespace,
// non-redirect page.
//
// Throws IoError, DecompressError or XmlError. In strict mode also
// UnknownType or LemmaTooShort.
ScanReport scan_wiktionary(const std::filesystem::path& dump,
                           DictionaryBuilder& dict,
                           const ParadigmSet& paradigms,
                           const ScanPolicy& policy = {},
                           const WiktionaryOptions& options = {});

// --- Bundled dictionary ----------------------------------------------------

// $BGLEMMA_BUILTIN_DICT when set, else the location fixed at build time.
std::filesystem::path builtin_dictionary_path();

// Loads the bundled sample dictionary. Throws IoError or FormatError.
Dictionary load_builtin();
Dictionary load_builtin(const std::filesystem::path& asset);

}  // namespace bglemma

#endif  // BGLEMMA_INGEST_H_
