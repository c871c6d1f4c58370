// Copyright 2026 The bensumm Authors.
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

#pragma once

// `bensumm` command line: summarize | evaluate | stats.
//
// Exit codes: 0 success, 1 input parse or I/O failure, 2 bad arguments.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bensumm/bensumm.hpp"

namespace bensumm::cli {

struct CliConfig {
  std::string input;
  std::string lexicon;
  std::string stopwords;
  std::string vectors;
  std::string mode = "abs";
  std::size_t budget = 3;
  std::uint64_t seed = 0;
  std::size_t fusion_m = 50;
  std::size_t min_length = 8;
  bool no_verb_check = false;
  bool dump_graph = false;
  std::vector<std::string> systems;
  std::string out;
};

/// Raised for semantically invalid arguments (exit 2).
struct UsageError : Error {
  using Error::Error;
};

namespace detail {

inline Preprocessor make_preprocessor(const CliConfig& c) {
  TagLexicon lex = c.lexicon.empty() ? TagLexicon{} : load_tag_lexicon(c.lexicon);
  StopwordSet stop = c.stopwords.empty() ? StopwordSet{} : load_stopwords(c.stopwords);
  return Preprocessor(std::move(lex), std::move(stop));
}

inline std::optional<WordVectorTable> load_vectors(const CliConfig& c, std::ostream& err) {
  if (c.vectors.empty()) {
    err << "warning: no --vectors given; clustering with term-frequency sentence vectors\n";
    return std::nullopt;
  }
  return load_word_vectors(c.vectors);
}

inline FusionConfig fusion_config(const CliConfig& c) {
  FusionConfig f;
  f.max_paths = c.fusion_m;
  f.min_length = c.min_length;
  f.require_verb = !c.no_verb_check;
  return f;
}

inline std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

inline void add_resource_options(CLI::App* cmd, CliConfig& c) {
  cmd->add_option("--lexicon", c.lexicon, "word<TAB>POS tag lexicon")->check(CLI::ExistingFile);
  cmd->add_option("--stopwords", c.stopwords, "stopword list, one per line")->check(CLI::ExistingFile);
}

inline void add_summary_options(CLI::App* cmd, CliConfig& c) {
  cmd->add_option("--vectors", c.vectors, "word vectors in word2vec text format")->check(CLI::ExistingFile);
  cmd->add_option("--budget", c.budget, "maximum summary sentences")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--fusion-m", c.fusion_m, "number of shortest paths per cluster")->check(CLI::PositiveNumber);
  cmd->add_option("--min-length", c.min_length, "minimum fused sentence length in tokens")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-verb-check", c.no_verb_check, "accept fused sentences without a verb");
}

inline int run_summarize(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const auto pre = make_preprocessor(c);
  const std::filesystem::path input(c.input);
  Document doc;
  if (input.extension() == ".conll") {
    doc = load_pretagged(input, pre.stopwords());
  } else {
    std::ifstream in(input);
    if (!in) throw Error("cannot open " + c.input);
    std::stringstream buf;
    buf << in.rdbuf();
    doc = pre.document(input.stem().string(), buf.str());
  }
  const auto vectors = load_vectors(c, err);

  SummaryParams p;
  p.mode = c.mode == "ext" ? SummaryMode::extractive : SummaryMode::abstractive;
  p.budget = c.budget;
  p.fusion = fusion_config(c);
  p.vectors = vectors ? &*vectors : nullptr;

  GraphObserver observer;
  if (c.dump_graph) {
    observer = [&](std::size_t label, const WordGraph& g) {
      const auto path = c.input + ".cluster" + std::to_string(label) + ".dot";
      std::ofstream dot(path);
      if (!dot) throw Error("cannot write " + path);
      write_dot(dot, g);
    };
  }
  const auto summary = summarize(doc, p, observer);

  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw Error("cannot write " + c.out);
  }
  std::ostream& dest = c.out.empty() ? out : file;
  for (const auto& s : summary.sentences) dest << s.sentence.raw << '\n';
  return 0;
}

inline int run_evaluate(const CliConfig& c, std::ostream& out, std::ostream& err) {
  auto names = split_list(c.systems);
  if (names.empty()) {
    for (const auto& [sys, name] : kSystemNames) names.emplace_back(name);
  }
  std::vector<System> systems;
  try {
    for (const auto& n : names) systems.push_back(parse_system(n));
  } catch (const UnknownSystem& e) {
    throw UsageError(e.what());
  }
  const auto pre = make_preprocessor(c);
  const auto corpus = load_corpus(c.input, pre);

  const bool needs_vectors = std::any_of(systems.begin(), systems.end(), [](System s) {
    return s == System::bensumm_abs || s == System::bensumm_ext;
  });
  std::optional<WordVectorTable> vectors;
  if (needs_vectors) vectors = load_vectors(c, err);

  EvalParams p;
  p.budget = c.budget;
  p.seed = c.seed;
  p.summary.fusion = fusion_config(c);
  p.summary.vectors = vectors ? &*vectors : nullptr;

  std::vector<EvalReport> reports;
  for (auto s : systems) reports.push_back(evaluate_corpus(corpus, s, p));
  out << "samples: " << corpus.size() << '\n';
  write_report_table(out, reports);
  if (!c.out.empty()) {
    std::ofstream rec(c.out);
    if (!rec) throw Error("cannot write " + c.out);
    write_report_records(rec, reports);
  }
  return 0;
}

inline int run_stats(const CliConfig& c, std::ostream& out) {
  const auto pre = make_preprocessor(c);
  const auto corpus = load_corpus(c.input, pre);
  const auto st = corpus_stats(corpus);
  const auto flags = out.flags();
  out << std::fixed << std::setprecision(2);
  out << "samples:               " << st.samples << '\n'
      << "avg document tokens:   " << st.mean_document_tokens << '\n'
      << "avg reference tokens:  " << st.mean_reference_tokens << '\n'
      << "summary copy rate:     " << 100.0 * st.mean_copy_rate << "%\n";
  out.flags(flags);
  return 0;
}

}  // namespace detail

/// Runs the CLI on `args` (program name excluded).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unsupervised single-document summarization", "bensumm"};
  app.require_subcommand(1);
  CliConfig c;

  auto* summarize_cmd = app.add_subcommand("summarize", "summarize one document");
  summarize_cmd->add_option("input", c.input, "raw text, or .conll pre-tagged rows")
      ->required()
      ->check(CLI::ExistingFile);
  summarize_cmd->add_option("--mode", c.mode, "abs or ext")->check(CLI::IsMember({"abs", "ext"}));
  summarize_cmd->add_flag("--dump-graph", c.dump_graph, "write each cluster's word graph as DOT beside the input");
  summarize_cmd->add_option("--out", c.out, "write the summary here instead of standard output");
  detail::add_resource_options(summarize_cmd, c);
  detail::add_summary_options(summarize_cmd, c);

  auto* evaluate_cmd = app.add_subcommand("evaluate", "ROUGE of systems over a corpus");
  evaluate_cmd->add_option("corpus", c.input, "JSON-lines corpus")->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--systems", c.systems, "comma-separated system names (default: all)")
      ->delimiter(',');
  evaluate_cmd->add_option("--out", c.out, "write tab-separated report records here");
  detail::add_resource_options(evaluate_cmd, c);
  detail::add_summary_options(evaluate_cmd, c);

  auto* stats_cmd = app.add_subcommand("stats", "corpus statistics");
  stats_cmd->add_option("corpus", c.input, "JSON-lines corpus")->required()->check(CLI::ExistingFile);
  detail::add_resource_options(stats_cmd, c);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "bensumm: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*summarize_cmd) return detail::run_summarize(c, out, err);
    if (*evaluate_cmd) return detail::run_evaluate(c, out, err);
    return detail::run_stats(c, out);
  } catch (const UsageError& e) {
    err << "bensumm: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "bensumm: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bensumm::cli
