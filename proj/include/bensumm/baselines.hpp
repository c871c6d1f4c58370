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

// Extractive baselines. Each ranks every sentence of a document; a summary
// takes the top `budget` and restores document order.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "bensumm/corpus.hpp"
#include "bensumm/pagerank.hpp"

namespace bensumm {

struct RankedSentence {
  std::size_t index;
  double score;
};

/// Descending score; a permutation of the document's sentence indices.
using RankedSentences = std::vector<RankedSentence>;

namespace detail {

/// Greedy picks treat scores this close as tied; the lower index wins.
inline constexpr double kTieEpsilon = 1e-12;

inline std::vector<std::string> content_words(const Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) {
    if (t.is_content()) out.push_back(t.normalized);
  }
  return out;
}

inline RankedSentences rank_by_score(const std::vector<double>& scores) {
  RankedSentences r;
  for (std::size_t i = 0; i < scores.size(); ++i) r.push_back({i, scores[i]});
  std::stable_sort(r.begin(), r.end(),
                   [](const RankedSentence& a, const RankedSentence& b) { return a.score > b.score; });
  return r;
}

/// Ranking from a greedy pick order: first pick gets score n.
inline RankedSentences rank_by_order(const std::vector<std::size_t>& order) {
  RankedSentences r;
  const auto n = static_cast<double>(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) r.push_back({order[k], n - static_cast<double>(k)});
  return r;
}

}  // namespace detail

/// Sentence graph weighted by |shared content words| / (log|s_i| + log|s_j|).
inline double textrank_similarity(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double denom = std::log(static_cast<double>(a.size())) + std::log(static_cast<double>(b.size()));
  if (denom <= 0.0) return 0.0;
  const std::set<std::string> sa(a.begin(), a.end());
  const std::set<std::string> sb(b.begin(), b.end());
  std::size_t shared = 0;
  for (const auto& w : sa) shared += sb.count(w);
  return static_cast<double>(shared) / denom;
}

inline std::vector<double> textrank_scores(const Document& d, const PageRankOptions& opt = {}) {
  const std::size_t n = d.size();
  std::vector<std::vector<std::string>> words;
  for (const auto& s : d.sentences) words.push_back(detail::content_words(s));
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w[i][j] = w[j][i] = textrank_similarity(words[i], words[j]);
  return pagerank(w, opt);
}

inline RankedSentences textrank(const Document& d) { return detail::rank_by_score(textrank_scores(d)); }

struct LexRankOptions {
  double threshold = 0.1;
  PageRankOptions pagerank;
};

/// TF-IDF vectors with idf = 1 + ln(N / df), over the document's sentences.
inline std::vector<std::map<std::string, double>> tfidf_vectors(const Document& d) {
  std::map<std::string, std::size_t> df;
  std::vector<std::map<std::string, double>> tf(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (const auto& w : detail::content_words(d.sentences[i])) tf[i][w] += 1.0;
    for (const auto& [w, c] : tf[i]) ++df[w];
  }
  const auto n = static_cast<double>(d.size());
  for (auto& vec : tf)
    for (auto& [w, x] : vec) x *= 1.0 + std::log(n / static_cast<double>(df[w]));
  return tf;
}

inline double sparse_cosine(const std::map<std::string, double>& a, const std::map<std::string, double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [w, x] : a) {
    na += x * x;
    if (auto it = b.find(w); it != b.end()) dot += x * it->second;
  }
  for (const auto& [w, y] : b) nb += y * y;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

/// Thresholded LexRank: arcs where cosine exceeds the threshold (self arcs
/// included), row-normalized by PageRank.
inline std::vector<double> lexrank_scores(const Document& d, const LexRankOptions& opt = {}) {
  const auto vecs = tfidf_vectors(d);
  const std::size_t n = d.size();
  std::vector<std::vector<double>> adj(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = sparse_cosine(vecs[i], vecs[j]) > opt.threshold;
  return pagerank(adj, opt.pagerank);
}

inline RankedSentences lexrank(const Document& d) { return detail::rank_by_score(lexrank_scores(d)); }

/// Greedy: highest mean word probability first, squaring the probabilities
/// of each picked sentence's words.
inline RankedSentences sumbasic(const Document& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<std::string>> words;
  std::unordered_map<std::string, double> prob;
  double total = 0.0;
  for (const auto& s : d.sentences) {
    words.push_back(detail::content_words(s));
    for (const auto& w : words.back()) {
      prob[w] += 1.0;
      total += 1.0;
    }
  }
  for (auto& [w, p] : prob) p /= total;

  std::vector<bool> used(n, false);
  RankedSentences ranked;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    double best_score = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      double score = 0.0;
      for (const auto& w : words[i]) score += prob[w];
      if (!words[i].empty()) score /= static_cast<double>(words[i].size());
      if (score > best_score + detail::kTieEpsilon) {
        best_score = score;
        best = i;
      }
    }
    used[best] = true;
    ranked.push_back({best, best_score});
    for (const auto& w : std::set<std::string>(words[best].begin(), words[best].end()))
      prob[w] *= prob[w];
  }
  return ranked;
}

/// KL(P_doc || Q) with Q the add-one smoothed unigram distribution of `summary_counts`.
inline double kl_to_document(const std::map<std::string, double>& doc_counts, double doc_total,
                             const std::map<std::string, double>& summary_counts, double summary_total) {
  const auto vocab = static_cast<double>(doc_counts.size());
  double kl = 0.0;
  for (const auto& [w, c] : doc_counts) {
    const double p = c / doc_total;
    auto it = summary_counts.find(w);
    const double q = ((it == summary_counts.end() ? 0.0 : it->second) + 1.0) / (summary_total + vocab);
    kl += p * std::log(p / q);
  }
  return kl;
}

/// Greedy: add the sentence that minimizes KL(P_doc || P_summary).
inline RankedSentences greedykl(const Document& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<std::string>> words;
  std::map<std::string, double> doc_counts;
  double doc_total = 0.0;
  for (const auto& s : d.sentences) {
    words.push_back(detail::content_words(s));
    for (const auto& w : words.back()) {
      doc_counts[w] += 1.0;
      doc_total += 1.0;
    }
  }
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  std::map<std::string, double> summary;
  double summary_total = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    double best_kl = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      double kl = 0.0;
      if (doc_total > 0.0) {
        auto trial = summary;
        for (const auto& w : words[i]) trial[w] += 1.0;
        kl = kl_to_document(doc_counts, doc_total, trial, summary_total + static_cast<double>(words[i].size()));
      }
      if (best == n || kl < best_kl - detail::kTieEpsilon) {
        best = i;
        best_kl = kl;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (const auto& w : words[best]) summary[w] += 1.0;
    summary_total += static_cast<double>(words[best].size());
  }
  return detail::rank_by_order(order);
}

namespace detail {

/// Unbiased draw in [0, bound) by rejection; stable across standard libraries.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace detail

/// Fisher-Yates shuffle of the sentence indices seeded by `seed`.
inline RankedSentences random_baseline(const Document& d, std::uint64_t seed) {
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[detail::bounded(rng, i)]);
  return detail::rank_by_order(order);
}

/// Top `budget` ranked sentences in document order.
inline std::vector<Sentence> top_sentences(const Document& d, const RankedSentences& ranked, std::size_t budget) {
  std::vector<std::size_t> picked;
  for (std::size_t k = 0; k < ranked.size() && k < budget; ++k) picked.push_back(ranked[k].index);
  std::sort(picked.begin(), picked.end());
  std::vector<Sentence> out;
  for (auto i : picked) out.push_back(d.sentences[i]);
  return out;
}

}  // namespace bensumm
