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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/operators.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "bglemma/dictionary.h"
#include "bglemma/error.h"
#include "bglemma/eval.h"
#include "bglemma/ingest.h"
#include "bglemma/lemmatizer.h"
#include "bglemma/paradigms.h"
#include "bglemma/tagset.h"
#include "bglemma/version.h"

namespace py = pybind11;
using namespace bglemma;

namespace {

GramFeatures tag_arg(const py::object& tag) {
  if (py::isinstance<py::str>(tag)) {
    return parse_tag_string(tag.cast<std::string>());
  }
  return tag.cast<GramFeatures>();
}

py::dict stats_dict(const DictionaryStats& st) {
  py::dict d;
  d["lemma_count"] = st.lemma_count;
  d["form_count"] = st.form_count;
  d["ambiguous_surface_count"] = st.ambiguous_surface_count;
  return d;
}

py::dict report_dict(const ScanReport& r) {
  py::dict d;
  d["files_processed"] = r.files_processed;
  d["lines_scanned"] = r.lines_scanned;
  d["lexemes_added"] = r.lexemes_added;
  d["lines_skipped"] = r.lines_skipped;
  d["unknown_types"] = r.unknown_types;
  d["pages_seen"] = r.pages_seen;
  d["pages_ignored"] = r.pages_ignored;
  d["pages_without_marker"] = r.pages_without_marker;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bulgarian word form generation and lemmatization";
  m.attr("__version__") = std::string(kVersion);

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidTag>(m, "InvalidTag", base);
  py::register_exception<MalformedTag>(m, "MalformedTag", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<DuplicateType>(m, "DuplicateType", base);
  py::register_exception<InvalidRule>(m, "InvalidRule", base);
  py::register_exception<UnknownType>(m, "UnknownType", base);
  py::register_exception<LemmaTooShort>(m, "LemmaTooShort", base);
  py::register_exception<IoError>(m, "IoError", base);
  py::register_exception<FormatError>(m, "FormatError", base);
  py::register_exception<DecompressError>(m, "DecompressError", base);
  py::register_exception<XmlError>(m, "XmlError", base);
  py::register_exception<EmptyCorpus>(m, "EmptyCorpus", base);
  py::register_exception<EmptyDictionary>(m, "EmptyDictionary", base);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base);

  py::class_<GramFeatures>(m, "GramFeatures")
      .def(py::init<>())
      .def_static("parse", &parse_tag_string, py::arg("tag"))
      .def_static("decode",
                  [](std::uint32_t v) { return decode_tag(PackedTag{v}); },
                  py::arg("packed"))
      .def("encode", [](const GramFeatures& g) { return encode_tag(g).value; })
      .def("__str__", &format_tag_string)
      .def("__repr__",
           [](const GramFeatures& g) {
             return "GramFeatures('" + format_tag_string(g) + "')";
           })
      .def(py::self == py::self)
      .def_property_readonly("pos_class",
                             [](const GramFeatures& g) {
                               return std::string(to_string(g.pos_class));
                             })
      .def_property_readonly(
          "gender",
          [](const GramFeatures& g) { return std::string(to_string(g.gender)); })
      .def_property_readonly(
          "number",
          [](const GramFeatures& g) { return std::string(to_string(g.number)); })
      .def_property_readonly("article",
                             [](const GramFeatures& g) {
                               return std::string(to_string(g.article));
                             })
      .def_readonly("extended", &GramFeatures::extended)
      .def_property_readonly(
          "person",
          [](const GramFeatures& g) { return std::string(to_string(g.person)); })
      .def_property_readonly(
          "tense",
          [](const GramFeatures& g) { return std::string(to_string(g.tense)); });

  m.def("encode_tag",
        [](const std::string& tag) { return encode_tag(parse_tag_string(tag)).value; },
        py::arg("tag"), "Positional tag string to packed 32-bit value.");
  m.def("decode_tag",
        [](std::uint32_t v) { return format_tag_string(decode_tag(PackedTag{v})); },
        py::arg("packed"), "Packed 32-bit value to positional tag string.");
  m.def("tags_compatible",
        [](const py::object& q, const py::object& c) {
          return tags_compatible(tag_arg(q), tag_arg(c));
        },
        py::arg("query"), py::arg("candidate"));

  py::class_<ParadigmSet>(m, "ParadigmSet")
      .def_static("load", &load_paradigms, py::arg("path"))
      .def_static("parse",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return parse_paradigms(in);
                  },
                  py::arg("text"))
      .def("__len__", &ParadigmSet::size)
      .def("__contains__", &ParadigmSet::contains)
      .def("type_ids", [](const ParadigmSet& s) {
        std::vector<std::string> ids;
        for (const auto& [id, p] : s) ids.push_back(id);
        return ids;
      });

  m.def("generate_word_forms",
        [](const std::string& lemma, const std::string& type_id,
           const ParadigmSet& set) {
          py::list out;
          for (const WordEntry& e : generate_word_forms(lemma, type_id, set)) {
            out.append(py::make_tuple(e.surface,
                                      format_tag_string(decode_tag(e.tag)),
                                      e.tag.value));
          }
          return out;
        },
        py::arg("lemma"), py::arg("type_id"), py::arg("paradigms"),
        "List of (surface, tag string, packed tag) in rule order.");

  py::class_<Dictionary>(m, "Dictionary")
      .def(py::init<>())
      .def_static("load", &load_dictionary, py::arg("path"))
      .def("save", [](const Dictionary& d, const std::filesystem::path& p) {
        save(d, p);
      }, py::arg("path"))
      .def("lookup",
           [](const Dictionary& d, const std::string& surface) {
             py::list out;
             for (const Candidate& c : d.lookup(surface)) {
               out.append(py::make_tuple(c.lemma,
                                         format_tag_string(decode_tag(c.tag)),
                                         c.paradigm_type));
             }
             return out;
           },
           py::arg("surface"))
      .def("stats", [](const Dictionary& d) { return stats_dict(d.stats()); })
      .def("merge", [](const Dictionary& a, const Dictionary& b) {
        return merge(a, b);
      }, py::arg("other"))
      .def("__len__", &Dictionary::form_count)
      .def(py::self == py::self);

  py::class_<DictionaryBuilder>(m, "DictionaryBuilder")
      .def(py::init<>())
      .def("add_lexeme",
           [](DictionaryBuilder& b, const std::string& lemma,
              const std::string& type_id, const ParadigmSet& set) {
             b.add_lexeme(Lexeme{lemma, type_id}, set);
           },
           py::arg("lemma"), py::arg("type_id"), py::arg("paradigms"))
      .def("scan_bgoffice",
           [](DictionaryBuilder& b, const std::filesystem::path& dir,
              const ParadigmSet& set, bool strict, const std::string& enc) {
             BgofficeOptions opt;
             opt.encoding = enc;
             return report_dict(
                 scan_bgoffice(dir, b, set, ScanPolicy{strict}, opt));
           },
           py::arg("dir"), py::arg("paradigms"), py::arg("strict") = false,
           py::arg("encoding") = "utf-8")
      .def("scan_wiktionary",
           [](DictionaryBuilder& b, const std::filesystem::path& dump,
              const ParadigmSet& set, bool strict,
              std::optional<std::vector<std::string>> templates) {
             WiktionaryOptions opt;
             if (templates) opt.template_names = *templates;
             return report_dict(
                 scan_wiktionary(dump, b, set, ScanPolicy{strict}, opt));
           },
           py::arg("dump"), py::arg("paradigms"), py::arg("strict") = false,
           py::arg("templates") = py::none())
      .def("stats",
           [](const DictionaryBuilder& b) { return stats_dict(b.stats()); })
      .def("freeze", [](DictionaryBuilder& b) {
        Dictionary d = std::move(b).freeze();
        return d;
      });

  m.def("lemmatize",
        [](const Dictionary& d, const std::string& surface,
           const py::object& tag, bool sentence_initial, bool fallback) {
          TokenRecord t{surface, tag.is_none() ? GramFeatures{} : tag_arg(tag),
                        sentence_initial};
          const LemmaResult r = lemmatize(d, t, LemmatizerOptions{fallback});
          py::dict out;
          out["lemma"] = r.lemma;
          out["matched_tag"] =
              r.matched_tag
                  ? py::cast(format_tag_string(decode_tag(*r.matched_tag)))
                  : py::none();
          out["candidate_count"] = r.candidate_count;
          out["oov"] = r.oov;
          return out;
        },
        py::arg("dict"), py::arg("surface"), py::arg("tag") = py::none(),
        py::arg("sentence_initial") = false, py::arg("fallback") = true);

  m.def("lemmatize_tsv",
        [](const Dictionary& d, const std::string& text, bool fallback) {
          std::istringstream in(text);
          std::ostringstream out;
          annotate_stream(d, in, out, LemmatizerOptions{fallback});
          return out.str();
        },
        py::arg("dict"), py::arg("text"), py::arg("fallback") = true,
        "Annotate a TSV token stream; returns the annotated stream.");

  m.def("evaluate",
        [](const Dictionary& d, const std::filesystem::path& corpus,
           bool fallback) {
          const EvalMetrics e =
              evaluate(d, corpus, LemmatizerOptions{fallback});
          py::dict out;
          out["tokens"] = e.tokens;
          out["correct"] = e.correct;
          out["accuracy"] = e.accuracy;
          out["covered"] = e.covered;
          out["accuracy_on_covered"] = e.accuracy_on_covered;
          out["oov_rate"] = e.oov_rate;
          return out;
        },
        py::arg("dict"), py::arg("corpus"), py::arg("fallback") = true);

  m.def("make_synthetic_corpus", &make_synthetic_corpus, py::arg("dict"),
        py::arg("seed"), py::arg("n"));

  m.def("builtin_dictionary_path", &builtin_dictionary_path);
  m.def("load_builtin", py::overload_cast<>(&load_builtin));
  m.def("load_builtin",
        py::overload_cast<const std::filesystem::path&>(&load_builtin),
        py::arg("asset"));
}
