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

// ROUGE-1/2/L, copy rate, corpus statistics and the system benchmark harness.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iomanip>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "bensumm/baselines.hpp"
#include "bensumm/corpus.hpp"
#include "bensumm/error.hpp"
#include "bensumm/summarizer.hpp"

namespace bensumm {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

inline RougeScore make_rouge(double matched, double cand_total, double ref_total) {
  RougeScore s;
  s.precision = cand_total > 0 ? matched / cand_total : 0.0;
  s.recall = ref_total > 0 ? matched / ref_total : 0.0;
  const double pr = s.precision + s.recall;
  s.f1 = pr > 0 ? 2.0 * s.precision * s.recall / pr : 0.0;
  return s;
}

/// Clipped n-gram overlap.
inline RougeScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference,
                          std::size_t n) {
  if (n == 0) throw Error("rouge_n: n must be at least 1");
  auto grams = [n](std::span<const std::string> seq) {
    std::map<std::vector<std::string>, std::size_t> out;
    for (std::size_t i = 0; i + n <= seq.size(); ++i) ++out[{seq.begin() + i, seq.begin() + i + n}];
    return out;
  };
  const auto c = grams(candidate);
  const auto r = grams(reference);
  std::size_t matched = 0, ctotal = 0, rtotal = 0;
  for (const auto& [g, k] : c) {
    ctotal += k;
    if (auto it = r.find(g); it != r.end()) matched += std::min(k, it->second);
  }
  for (const auto& [g, k] : r) rtotal += k;
  return make_rouge(static_cast<double>(matched), static_cast<double>(ctotal), static_cast<double>(rtotal));
}

inline std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/// LCS over the whole token sequences.
inline RougeScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  return make_rouge(static_cast<double>(lcs_length(candidate, reference)),
                    static_cast<double>(candidate.size()), static_cast<double>(reference.size()));
}

/// Normalized, punctuation-free token sequence of a list of sentences.
inline std::vector<std::string> rouge_tokens(std::span<const Sentence> sentences) {
  std::vector<std::string> out;
  for (const auto& s : sentences)
    for (const auto& t : s.tokens)
      if (!t.is_punct) out.push_back(t.normalized);
  return out;
}

/// Share of the summary's non-punctuation tokens whose normalized form occurs
/// in the document. Counted per occurrence.
inline double copy_rate(const Document& document, const Document& summary) {
  std::unordered_set<std::string> vocab;
  for (const auto& s : document.sentences)
    for (const auto& t : s.tokens) vocab.insert(t.normalized);
  std::size_t total = 0, copied = 0;
  for (const auto& s : summary.sentences) {
    for (const auto& t : s.tokens) {
      if (t.is_punct) continue;
      ++total;
      copied += vocab.contains(t.normalized);
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(copied) / static_cast<double>(total);
}

struct CorpusStats {
  std::size_t samples = 0;
  double mean_document_tokens = 0.0;   // punctuation tokens included
  double mean_reference_tokens = 0.0;
  double mean_copy_rate = 0.0;
};

inline std::size_t token_count(const Document& d) {
  std::size_t n = 0;
  for (const auto& s : d.sentences) n += s.tokens.size();
  return n;
}

inline CorpusStats corpus_stats(std::span<const CorpusSample> corpus) {
  if (corpus.empty()) throw EmptyCorpus("corpus_stats: empty corpus");
  CorpusStats st;
  st.samples = corpus.size();
  for (const auto& s : corpus) {
    st.mean_document_tokens += static_cast<double>(token_count(s.document));
    st.mean_reference_tokens += static_cast<double>(token_count(s.reference_summary));
    st.mean_copy_rate += copy_rate(s.document, s.reference_summary);
  }
  const auto n = static_cast<double>(corpus.size());
  st.mean_document_tokens /= n;
  st.mean_reference_tokens /= n;
  st.mean_copy_rate /= n;
  return st;
}

enum class System { bensumm_abs, bensumm_ext, textrank, lexrank, sumbasic, greedykl, random };

inline constexpr std::array<std::pair<System, std::string_view>, 7> kSystemNames{{
    {System::bensumm_abs, "bensumm-abs"},
    {System::bensumm_ext, "bensumm-ext"},
    {System::textrank, "textrank"},
    {System::lexrank, "lexrank"},
    {System::sumbasic, "sumbasic"},
    {System::greedykl, "greedykl"},
    {System::random, "random"},
}};

inline std::string_view to_string(System s) {
  for (const auto& [sys, name] : kSystemNames)
    if (sys == s) return name;
  return "?";
}

inline System parse_system(std::string_view name) {
  for (const auto& [sys, n] : kSystemNames)
    if (n == name) return sys;
  throw UnknownSystem("unknown system '" + std::string(name) + "'");
}

struct EvalParams {
  std::size_t budget = 3;
  std::uint64_t seed = 0;
  SummaryParams summary;  // mode and budget are overridden per system
};

/// Seed of the random baseline for sample `i`.
inline std::uint64_t sample_seed(std::uint64_t seed, std::size_t i) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(i) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Summary sentences produced by `system` for one document.
inline std::vector<Sentence> system_summary(const Document& d, System system, const EvalParams& p,
                                            std::size_t sample_index = 0) {
  switch (system) {
    case System::bensumm_abs:
    case System::bensumm_ext: {
      SummaryParams sp = p.summary;
      sp.budget = p.budget;
      sp.mode = system == System::bensumm_abs ? SummaryMode::abstractive : SummaryMode::extractive;
      return summarize(d, sp).plain();
    }
    case System::textrank: return top_sentences(d, textrank(d), p.budget);
    case System::lexrank: return top_sentences(d, lexrank(d), p.budget);
    case System::sumbasic: return top_sentences(d, sumbasic(d), p.budget);
    case System::greedykl: return top_sentences(d, greedykl(d), p.budget);
    case System::random:
      return top_sentences(d, random_baseline(d, sample_seed(p.seed, sample_index)), p.budget);
  }
  throw UnknownSystem("unhandled system");
}

struct SampleScores {
  RougeScore rouge1, rouge2, rougeL;
};

inline SampleScores score_summary(std::span<const Sentence> summary, const Document& reference) {
  const auto cand = rouge_tokens(summary);
  const auto ref = rouge_tokens(reference.sentences);
  return {rouge_n(cand, ref, 1), rouge_n(cand, ref, 2), rouge_l(cand, ref)};
}

struct EvalReport {
  std::string system;
  std::size_t samples = 0;
  double rouge1 = 0.0;  // mean F1
  double rouge2 = 0.0;
  double rougeL = 0.0;
};

/// Macro-averaged ROUGE F1 of `system` over the corpus, summed in sample order.
inline EvalReport evaluate_corpus(std::span<const CorpusSample> corpus, System system, const EvalParams& p) {
  if (corpus.empty()) throw EmptyCorpus("evaluate_corpus: empty corpus");
  EvalReport r;
  r.system = std::string(to_string(system));
  r.samples = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto summary = system_summary(corpus[i].document, system, p, i);
    const auto sc = score_summary(summary, corpus[i].reference_summary);
    r.rouge1 += sc.rouge1.f1;
    r.rouge2 += sc.rouge2.f1;
    r.rougeL += sc.rougeL.f1;
  }
  const auto n = static_cast<double>(corpus.size());
  r.rouge1 /= n;
  r.rouge2 /= n;
  r.rougeL /= n;
  return r;
}

/// Aligned text table, F1 as percentages.
inline void write_report_table(std::ostream& out, std::span<const EvalReport> reports) {
  std::size_t width = 6;
  for (const auto& r : reports) width = std::max(width, r.system.size());
  const auto flags = out.flags();
  out << std::left << std::setw(static_cast<int>(width)) << "system" << std::right << std::setw(9) << "R-1"
      << std::setw(9) << "R-2" << std::setw(9) << "R-L" << '\n';
  out << std::fixed << std::setprecision(2);
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(width)) << r.system << std::right << std::setw(9)
        << 100.0 * r.rouge1 << std::setw(9) << 100.0 * r.rouge2 << std::setw(9) << 100.0 * r.rougeL << '\n';
  }
  out.flags(flags);
}

/// Tab-separated records: header `system R-1 R-2 R-L`, F1 in [0, 1].
inline void write_report_records(std::ostream& out, std::span<const EvalReport> reports) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << "system\tR-1\tR-2\tR-L\n" << std::fixed << std::setprecision(6);
  for (const auto& r : reports)
    out << r.system << '\t' << r.rouge1 << '\t' << r.rouge2 << '\t' << r.rougeL << '\n';
  out.flags(flags);
  out.precision(prec);
}

}  // namespace bensumm
