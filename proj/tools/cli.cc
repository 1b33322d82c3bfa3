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

#include "cli.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "bglemma/dictionary.h"
#include "bglemma/error.h"
#include "bglemma/eval.h"
#include "bglemma/ingest.h"
#include "bglemma/lemmatizer.h"
#include "bglemma/paradigms.h"
#include "bglemma/tagset.h"
#include "bglemma/unicode.h"
#include "bglemma/version.h"

namespace bglemma::cli {
namespace {

struct BuildArgs {
  std::vector<std::string> bgoffice;
  std::vector<std::string> wiktionary;
  std::string paradigms;
  std::string out;
  std::string manifest;
  bool strict = false;
  std::string encoding = "utf-8";
  std::vector<std::string> templates;
};

struct FormsArgs {
  std::string lemma;
  std::string type;
  std::string paradigms;
};

struct DictArgs {
  std::string dict;  // empty: the bundled dictionary
  std::string input;
  std::string corpus;
  std::string json;
  std::string out;
  bool no_fallback = false;
  std::uint64_t seed = 1;
  std::size_t count = 0;
};

Dictionary open_dictionary(const std::string& path) {
  return path.empty() ? load_builtin() : load_dictionary(path);
}

void print_stats(std::ostream& out, const DictionaryStats& st) {
  out << "lemma_count=" << st.lemma_count << '\n'
      << "form_count=" << st.form_count << '\n'
      << "ambiguous_surface_count=" << st.ambiguous_surface_count << '\n';
}

void print_report(std::ostream& out, const std::string& source,
                  const ScanReport& r) {
  out << source << ": files=" << r.files_processed
      << " records=" << r.lines_scanned << " added=" << r.lexemes_added
      << " skipped=" << r.lines_skipped;
  if (r.pages_seen > 0) {
    out << " pages=" << r.pages_seen << " ignored=" << r.pages_ignored
        << " unmarked=" << r.pages_without_marker;
  }
  out << '\n';
  for (const auto& [type, n] : r.unknown_types) {
    out << "  unknown type " << type << ": " << n << '\n';
  }
}

int cmd_build(const BuildArgs& a, CLI::App& sub, std::ostream& out,
              std::ostream& err) {
  if (a.bgoffice.empty() && a.wiktionary.empty()) {
    err << "build: give at least one --bgoffice or --wiktionary source\n\n"
        << sub.help();
    return kExitUsage;
  }
  try {
    unicode::to_utf8("", a.encoding);
  } catch (const InvalidArgument& e) {
    err << "build: " << e.what() << '\n';
    return kExitUsage;
  }

  ParadigmSet paradigms;
  try {
    paradigms = load_paradigms(a.paradigms);
  } catch (const Error& e) {
    err << "build: " << a.paradigms << ": " << e.what() << '\n';
    return kExitIo;
  }

  const ScanPolicy policy{a.strict};
  BgofficeOptions bg_options;
  bg_options.encoding = a.encoding;
  WiktionaryOptions wiki_options;
  if (!a.templates.empty()) wiki_options.template_names = a.templates;

  Dictionary dict;
  try {
    auto scan_one = [&](const std::string& label, const std::string& src,
                        auto&& scan) {
      DictionaryBuilder builder;
      const ScanReport r = scan(src, builder);
      print_report(out, label + " " + src, r);
      dict = merge(dict, std::move(builder).freeze());
    };
    for (const auto& dir : a.bgoffice) {
      scan_one("bgoffice", dir, [&](const std::string& p, DictionaryBuilder& b) {
        return scan_bgoffice(p, b, paradigms, policy, bg_options);
      });
    }
    for (const auto& dump : a.wiktionary) {
      scan_one("wiktionary", dump,
               [&](const std::string& p, DictionaryBuilder& b) {
                 return scan_wiktionary(p, b, paradigms, policy, wiki_options);
               });
    }
  } catch (const UnknownType& e) {
    err << "build: strict scan failed: " << e.what() << '\n';
    return kExitStrict;
  } catch (const LemmaTooShort& e) {
    err << "build: strict scan failed: " << e.what() << '\n';
    return kExitStrict;
  } catch (const ParseError& e) {
    err << "build: strict scan failed: " << e.what() << '\n';
    return kExitStrict;
  } catch (const Error& e) {
    err << "build: " << e.what() << '\n';
    return kExitIo;
  }

  const DictionaryStats st = dict.stats();
  try {
    save(dict, a.out);
    if (!a.manifest.empty()) {
      std::ofstream m(a.manifest, std::ios::trunc);
      const nlohmann::json j = {
          {"lemma_count", st.lemma_count},
          {"form_count", st.form_count},
          {"ambiguous_surface_count", st.ambiguous_surface_count},
      };
      m << j.dump(2) << '\n';
      if (!m) throw IoError("cannot write " + a.manifest);
    }
  } catch (const Error& e) {
    err << "build: " << e.what() << '\n';
    return kExitIo;
  }
  print_stats(out, st);
  return kExitOk;
}

int cmd_forms(const FormsArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const ParadigmSet paradigms = load_paradigms(a.paradigms);
    for (const WordEntry& e : generate_word_forms(a.lemma, a.type, paradigms)) {
      out << e.surface << '\t' << format_tag_string(decode_tag(e.tag)) << '\t'
          << format_hex(e.tag) << '\n';
    }
  } catch (const InvalidArgument& e) {
    err << "forms: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "forms: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_lemmatize(const DictArgs& a, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  Dictionary dict;
  try {
    dict = open_dictionary(a.dict);
  } catch (const Error& e) {
    err << "lemmatize: " << e.what() << '\n';
    return kExitIo;
  }
  std::ifstream file;
  std::istream* src = &in;
  if (!a.input.empty() && a.input != "-") {
    file.open(a.input, std::ios::binary);
    if (!file) {
      err << "lemmatize: cannot read " << a.input << '\n';
      return kExitIo;
    }
    src = &file;
  }
  try {
    const StreamSummary s =
        annotate_stream(dict, *src, out, LemmatizerOptions{!a.no_fallback});
    err << "tokens=" << s.tokens << " oov=" << s.oov << '\n';
  } catch (const ParseError& e) {
    out.flush();
    err << "lemmatize: malformed input at " << e.what() << '\n';
    return kExitMalformed;
  } catch (const Error& e) {
    err << "lemmatize: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_tag_encode(const std::string& tag, std::ostream& out,
                   std::ostream& err) {
  try {
    out << format_hex(encode_tag(parse_tag_string(tag))) << '\n';
  } catch (const MalformedTag& e) {
    err << "tag encode: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitOk;
}

int cmd_tag_decode(const std::string& hex, std::ostream& out,
                   std::ostream& err) {
  GramFeatures g;
  try {
    g = decode_tag(parse_hex(hex));
  } catch (const Error& e) {
    err << "tag decode: " << e.what() << '\n';
    return kExitMalformed;
  }
  out << format_tag_string(g) << '\n'
      << "pos_class=" << to_string(g.pos_class) << '\n'
      << "gender=" << to_string(g.gender) << '\n'
      << "number=" << to_string(g.number) << '\n'
      << "article=" << to_string(g.article) << '\n'
      << "extended=" << (g.extended ? "yes" : "no") << '\n'
      << "person=" << to_string(g.person) << '\n'
      << "tense=" << to_string(g.tense) << '\n';
  return kExitOk;
}

int cmd_eval(const DictArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const Dictionary dict = open_dictionary(a.dict);
    const EvalMetrics m =
        evaluate(dict, std::filesystem::path(a.corpus),
                 LemmatizerOptions{!a.no_fallback});
    out << format_report(m) << '\n';
    if (!a.json.empty()) {
      std::ofstream j(a.json, std::ios::trunc);
      j << metrics_json(m) << '\n';
      if (!j) throw IoError("cannot write " + a.json);
    }
  } catch (const ParseError& e) {
    err << "eval: malformed corpus at " << e.what() << '\n';
    return kExitMalformed;
  } catch (const Error& e) {
    err << "eval: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_stats(const DictArgs& a, std::ostream& out, std::ostream& err) {
  try {
    print_stats(out, open_dictionary(a.dict).stats());
  } catch (const Error& e) {
    err << "stats: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_synth(const DictArgs& a, std::ostream& out, std::ostream& err) {
  if (a.count == 0) {
    err << "synth: --count must be at least 1\n";
    return kExitUsage;
  }
  try {
    const Dictionary dict = open_dictionary(a.dict);
    if (a.out.empty() || a.out == "-") {
      out << make_synthetic_corpus(dict, a.seed, a.count);
    } else {
      write_synthetic_corpus(dict, a.seed, a.count, a.out);
    }
  } catch (const Error& e) {
    err << "synth: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

CLI::App* add_command(CLI::App& app, const std::string& name,
                      const std::string& description) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->set_version_flag("--version", std::string(kVersion));
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Bulgarian word form generator and lemmatizer", "bglemma"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  BuildArgs build;
  CLI::App* build_cmd =
      add_command(app, "build", "Build a dictionary from lexical resources");
  build_cmd->add_option("--bgoffice", build.bgoffice,
                        "BG Office data directory (repeatable)");
  build_cmd->add_option("--wiktionary", build.wiktionary,
                        "Wiktionary XML dump, optionally bzip2 (repeatable)");
  build_cmd->add_option("--paradigms", build.paradigms,
                        "Paradigm definition file")
      ->required();
  build_cmd->add_option("--out", build.out, "Output dictionary file")
      ->required();
  build_cmd->add_flag("--strict", build.strict,
                      "Fail on unknown types and malformed records");
  build_cmd->add_option("--encoding", build.encoding,
                        "Encoding of BG Office .dat files")
      ->capture_default_str();
  build_cmd->add_option("--template", build.templates,
                        "Wiktionary template naming the paradigm type "
                        "(repeatable)");
  build_cmd->add_option("--manifest", build.manifest,
                        "Write dictionary statistics as JSON");

  FormsArgs forms;
  CLI::App* forms_cmd =
      add_command(app, "forms", "Print all word forms of a lemma");
  forms_cmd->add_option("lemma", forms.lemma, "Lemma")->required();
  forms_cmd->add_option("type", forms.type, "Paradigm type")->required();
  forms_cmd->add_option("--paradigms", forms.paradigms,
                        "Paradigm definition file")
      ->required();

  DictArgs lem;
  CLI::App* lem_cmd =
      add_command(app, "lemmatize", "Annotate a TSV token stream with lemmas");
  lem_cmd->add_option("--dict", lem.dict,
                      "Dictionary file (default: the bundled dictionary)");
  lem_cmd->add_option("--input", lem.input, "Token stream (default: stdin)");
  lem_cmd->add_flag("--no-fallback", lem.no_fallback,
                    "Report tokens with no compatible candidate as OOV");

  std::string tag_value;
  CLI::App* tag_cmd =
      add_command(app, "tag", "Convert between tag strings and packed tags");
  tag_cmd->require_subcommand(1);
  CLI::App* encode_cmd =
      add_command(*tag_cmd, "encode", "Tag string to packed hex");
  encode_cmd->add_option("tag", tag_value, "Positional tag string")
      ->required();
  CLI::App* decode_cmd =
      add_command(*tag_cmd, "decode", "Packed hex to tag string and fields");
  decode_cmd->add_option("hex", tag_value, "Packed tag, e.g. 0x000006a2")
      ->required();

  DictArgs ev;
  CLI::App* eval_cmd =
      add_command(app, "eval", "Measure lemmatization accuracy on a corpus");
  eval_cmd->add_option("--dict", ev.dict,
                       "Dictionary file (default: the bundled dictionary)");
  eval_cmd->add_option("--corpus", ev.corpus, "Gold TSV corpus")->required();
  eval_cmd->add_option("--json", ev.json, "Also write metrics as JSON");
  eval_cmd->add_flag("--no-fallback", ev.no_fallback,
                     "Disable query relaxation");

  DictArgs st;
  CLI::App* stats_cmd = add_command(app, "stats", "Print dictionary counts");
  stats_cmd->add_option("--dict", st.dict,
                        "Dictionary file (default: the bundled dictionary)");

  DictArgs syn;
  CLI::App* synth_cmd = add_command(
      app, "synth", "Sample a synthetic gold corpus from a dictionary");
  synth_cmd->add_option("--dict", syn.dict,
                        "Dictionary file (default: the bundled dictionary)");
  synth_cmd->add_option("--seed", syn.seed, "Random seed")
      ->capture_default_str();
  synth_cmd->add_option("-n,--count", syn.count, "Number of records")
      ->required();
  synth_cmd->add_option("--out", syn.out, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  if (build_cmd->parsed()) return cmd_build(build, *build_cmd, out, err);
  if (forms_cmd->parsed()) return cmd_forms(forms, out, err);
  if (lem_cmd->parsed()) return cmd_lemmatize(lem, in, out, err);
  if (encode_cmd->parsed()) return cmd_tag_encode(tag_value, out, err);
  if (decode_cmd->parsed()) return cmd_tag_decode(tag_value, out, err);
  if (eval_cmd->parsed()) return cmd_eval(ev, out, err);
  if (stats_cmd->parsed()) return cmd_stats(st, out, err);
  if (synth_cmd->parsed()) return cmd_synth(syn, out, err);
  err << app.help();
  return kExitUsage;
}

}  // namespace bglemma::cli
