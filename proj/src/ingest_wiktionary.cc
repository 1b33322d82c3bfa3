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

#include <expat.h>

#include <boost/iostreams/filter/bzip2.hpp>
#include <boost/iostreams/filtering_stream.hpp>

#include <array>
#include <charconv>
#include <exception>
#include <fstream>
#include <memory>

#include "bglemma/error.h"
#include "bglemma/ingest.h"
#include "bglemma/unicode.h"

namespace bglemma {
namespace {

constexpr std::size_t kReadChunk = 1 << 16;

// SAX handler collecting <page> elements. Element names are matched without
// namespace processing, as MediaWiki exports use a default namespace.
class PageCollector {
 public:
  explicit PageCollector(const std::function<void(const DumpPage&)>& on_page)
      : on_page_(on_page) {}

  static void XMLCALL start(void* self, const XML_Char* name,
                            const XML_Char** attrs) {
    static_cast<PageCollector*>(self)->on_start(name, attrs);
  }
  static void XMLCALL end(void* self, const XML_Char* name) {
    static_cast<PageCollector*>(self)->on_end(name);
  }
  static void XMLCALL chars(void* self, const XML_Char* s, int len) {
    auto* c = static_cast<PageCollector*>(self);
    if (c->capture_ != nullptr) c->capture_->append(s, len);
  }

  void set_parser(XML_Parser parser) { parser_ = parser; }
  std::exception_ptr error() const { return error_; }

 private:
  void on_start(std::string_view name, const XML_Char** /*attrs*/) {
    path_.emplace_back(name);
    if (name == "page" && !in_page_) {
      in_page_ = true;
      page_ = DumpPage{};
      ns_text_.clear();
      have_ns_ = false;
      return;
    }
    if (!in_page_) return;
    const std::size_t depth = path_.size();
    // path: ... page <child> [<grandchild>]
    const bool page_child = depth >= 2 && path_[depth - 2] == "page";
    if (page_child && name == "title") {
      page_.title.clear();
      capture_ = &page_.title;
    } else if (page_child && name == "ns") {
      ns_text_.clear();
      have_ns_ = true;
      capture_ = &ns_text_;
    } else if (page_child && name == "redirect") {
      page_.redirect = true;
    } else if (name == "text" && depth >= 3 && path_[depth - 2] == "revision" &&
               path_[depth - 3] == "page") {
      page_.text.clear();
      capture_ = &page_.text;
    }
  }

  void on_end(std::string_view name) {
    capture_ = nullptr;
    if (!path_.empty()) path_.pop_back();
    if (name != "page" || !in_page_) return;
    in_page_ = false;
    if (have_ns_) {
      const auto* first = ns_text_.data();
      const auto* last = first + ns_text_.size();
      const auto [ptr, ec] = std::from_chars(first, last, page_.ns);
      if (ec != std::errc() || ptr != last) {
        error_ = std::make_exception_ptr(
            XmlError("bad <ns> value '" + ns_text_ + "' in page '" +
                     page_.title + "'"));
        XML_StopParser(parser_, XML_FALSE);
        return;
      }
    }
    try {
      on_page_(page_);
    } catch (...) {
      error_ = std::current_exception();
      XML_StopParser(parser_, XML_FALSE);
    }
  }

  const std::function<void(const DumpPage&)>& on_page_;
  XML_Parser parser_ = nullptr;
  std::vector<std::string> path_;
  bool in_page_ = false;
  DumpPage page_;
  std::string ns_text_;
  bool have_ns_ = false;
  std::string* capture_ = nullptr;
  std::exception_ptr error_;
};

std::string normalize_template_name(std::string_view name) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto b = name.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = name.find_last_not_of(kSpace);
  std::string out(name.substr(b, e - b + 1));
  for (char& c : out) {
    if (c == '_') c = ' ';
  }
  if (!unicode::is_valid_utf8(out)) return {};
  return unicode::lower_first(out);
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

// Top-level '|'-separated segments of the template invocation whose "{{"
// starts at `open`. Empty when the invocation is not closed.
std::vector<std::string_view> template_segments(std::string_view text,
                                                std::size_t open) {
  std::vector<std::string_view> segments;
  int braces = 0;
  int brackets = 0;
  std::size_t seg_start = open + 2;
  std::size_t i = open + 2;
  while (i < text.size()) {
    const std::string_view two = text.substr(i, 2);
    if (two == "{{") {
      ++braces;
      i += 2;
    } else if (two == "}}") {
      if (braces == 0) {
        segments.push_back(text.substr(seg_start, i - seg_start));
        return segments;
      }
      --braces;
      i += 2;
    } else if (two == "[[") {
      ++brackets;
      i += 2;
    } else if (two == "]]") {
      if (brackets > 0) --brackets;
      i += 2;
    } else if (text[i] == '|' && braces == 0 && brackets == 0) {
      segments.push_back(text.substr(seg_start, i - seg_start));
      seg_start = ++i;
    } else {
      ++i;
    }
  }
  return {};
}

}  // namespace

void read_dump_xml(std::istream& in,
                   const std::function<void(const DumpPage&)>& on_page) {
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw XmlError("cannot create XML parser");
  PageCollector collector(on_page);
  collector.set_parser(parser.get());
  XML_SetUserData(parser.get(), &collector);
  XML_SetElementHandler(parser.get(), &PageCollector::start,
                        &PageCollector::end);
  XML_SetCharacterDataHandler(parser.get(), &PageCollector::chars);

  std::array<char, kReadChunk> buf;
  bool saw_input = false;
  for (;;) {
    in.read(buf.data(), buf.size());
    const auto n = static_cast<int>(in.gcount());
    if (in.bad()) throw IoError("error reading dump");
    const bool last = n == 0 || in.eof();
    saw_input = saw_input || n > 0;
    if (XML_Parse(parser.get(), buf.data(), n, last ? XML_TRUE : XML_FALSE) ==
        XML_STATUS_ERROR) {
      if (collector.error()) std::rethrow_exception(collector.error());
      throw XmlError(
          "malformed dump at line " +
          std::to_string(XML_GetCurrentLineNumber(parser.get())) + ": " +
          XML_ErrorString(XML_GetErrorCode(parser.get())));
    }
    if (last) break;
  }
  if (collector.error()) std::rethrow_exception(collector.error());
  if (!saw_input) throw XmlError("empty dump");
}

void read_dump_file(const std::filesystem::path& path,
                    const std::function<void(const DumpPage&)>& on_page) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot read " + path.string());
  std::array<char, 3> magic{};
  file.read(magic.data(), magic.size());
  const bool is_bzip2 = file.gcount() == 3 &&
                        std::string_view(magic.data(), 3) == "BZh";
  file.clear();
  file.seekg(0);
  if (!is_bzip2) {
    if (path.extension() == ".bz2") {
      throw DecompressError(path.string() + ": not a bzip2 stream");
    }
    read_dump_xml(file, on_page);
    return;
  }

  namespace io = boost::iostreams;
  io::filtering_istream in;
  in.push(io::bzip2_decompressor());
  in.push(file);
  in.exceptions(std::ios::badbit);
  try {
    read_dump_xml(in, on_page);
  } catch (const io::bzip2_error& e) {
    throw DecompressError(path.string() + ": bzip2 error " +
                          std::to_string(e.error()));
  } catch (const std::ios_base::failure& e) {
    throw DecompressError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> extract_type_markers(
    std::string_view text, const std::vector<std::string>& template_names) {
  std::vector<std::string> names;
  names.reserve(template_names.size());
  for (const auto& n : template_names) {
    names.push_back(normalize_template_name(n));
  }
  std::vector<std::string> types;
  for (auto open = text.find("{{"); open != std::string_view::npos;
       open = text.find("{{", open + 2)) {
    const auto segments = template_segments(text, open);
    if (segments.size() < 2) continue;
    const std::string name = normalize_template_name(segments[0]);
    if (name.empty() ||
        std::find(names.begin(), names.end(), name) == names.end()) {
      continue;
    }
    for (std::size_t i = 1; i < segments.size(); ++i) {
      if (segments[i].find('=') != std::string_view::npos) continue;
      const std::string_view param = trim(segments[i]);
      if (is_valid_type_id(param) &&
          std::find(types.begin(), types.end(), param) == types.end()) {
        types.emplace_back(param);
      }
      break;
    }
  }
  return types;
}

ScanReport scan_wiktionary(const std::filesystem::path& dump,
                           DictionaryBuilder& dict,
                           const ParadigmSet& paradigms,
                           const ScanPolicy& policy,
                           const WiktionaryOptions& options) {
  ScanReport report;
  read_dump_file(dump, [&](const DumpPage& page) {
    ++report.pages_seen;
    const std::string_view title = trim(page.title);
    if (page.ns != 0 || page.redirect || title.empty()) {
      ++report.pages_ignored;
      return;
    }
    const auto types = extract_type_markers(page.text, options.template_names);
    if (types.empty()) {
      ++report.pages_without_marker;
      return;
    }
    for (const auto& type : types) {
      ++report.lines_scanned;
      try {
        dict.add_lexeme(Lexeme{std::string(title), type}, paradigms);
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
  });
  report.files_processed = 1;
  return report;
}

}  // namespace bglemma
