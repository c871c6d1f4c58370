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

// Document summarization: embed sentences, cluster them, then emit one
// sentence per cluster, either fused from the cluster (abstractive) or picked
// from it (extractive), in document order.

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bensumm/cluster.hpp"
#include "bensumm/corpus.hpp"
#include "bensumm/embed.hpp"
#include "bensumm/error.hpp"
#include "bensumm/fusion.hpp"

namespace bensumm {

enum class SummaryMode { abstractive, extractive };

inline std::string_view to_string(SummaryMode m) {
  return m == SummaryMode::abstractive ? "abs" : "ext";
}

struct SummaryParams {
  SummaryMode mode = SummaryMode::abstractive;
  std::size_t budget = 3;
  FusionConfig fusion;
  const WordVectorTable* vectors = nullptr;  // null selects term-frequency vectors
};

struct SummarySentence {
  Sentence sentence;
  std::size_t cluster = 0;             // label in the document clustering
  std::vector<std::size_t> members;    // sentence indices of the cluster
  SummaryMode mode = SummaryMode::extractive;
  FusionOutcome outcome = FusionOutcome::verbatim;
};

struct Summary {
  std::vector<SummarySentence> sentences;
  Clustering clustering;

  std::vector<Sentence> plain() const {
    std::vector<Sentence> out;
    for (const auto& s : sentences) out.push_back(s.sentence);
    return out;
  }
};

/// Called with (cluster label, graph) for every word graph built.
using GraphObserver = std::function<void(std::size_t, const WordGraph&)>;

inline std::vector<SentenceVector> document_vectors(const Document& d, const WordVectorTable* table) {
  return table ? table_sentence_vectors(d, *table) : tf_sentence_vectors(d);
}

/// Member closest (cosine) to the cluster centroid; ties go to the smaller index.
inline std::size_t select_representative(std::span<const std::size_t> members,
                                         std::span<const SentenceVector> vectors) {
  if (members.empty()) throw EmptyInput("select_representative: empty cluster");
  const std::size_t dim = vectors[members.front()].dim();
  std::vector<double> centroid(dim, 0.0);
  for (auto m : members) {
    const auto v = vectors[m].values();
    for (std::size_t i = 0; i < dim; ++i) centroid[i] += v[i];
  }
  for (auto& c : centroid) c /= static_cast<double>(members.size());
  const SentenceVector center(std::move(centroid));

  std::size_t best = members.front();
  double best_sim = -2.0;
  for (auto m : members) {
    const double sim = cosine_similarity(vectors[m], center);
    if (sim > best_sim || (sim == best_sim && m < best)) {
      best_sim = sim;
      best = m;
    }
  }
  return best;
}

inline Summary summarize(const Document& d, const SummaryParams& p,
                         const GraphObserver& observer = {}) {
  if (d.sentences.empty()) throw EmptyDocument("document has no sentences");
  if (p.budget == 0) throw Error("summary budget must be at least 1");

  Summary out;
  if (d.size() == 1) {
    out.clustering = {1, {0}};
    out.sentences.push_back({d.sentences.front(), 0, {0}, p.mode, FusionOutcome::verbatim});
    return out;
  }

  const auto vectors = document_vectors(d, p.vectors);
  out.clustering = select_clustering(std::span<const SentenceVector>(vectors));
  auto groups = out.clustering.groups();  // label order == order of minimum member

  std::vector<std::size_t> keep(groups.size());
  std::iota(keep.begin(), keep.end(), 0);
  if (keep.size() > p.budget) {
    std::stable_sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
      if (groups[a].size() != groups[b].size()) return groups[a].size() > groups[b].size();
      return groups[a].front() < groups[b].front();
    });
    keep.resize(p.budget);
    std::sort(keep.begin(), keep.end());
  }

  for (auto label : keep) {
    const auto& members = groups[label];
    SummarySentence ss;
    ss.cluster = label;
    ss.members = members;
    ss.mode = p.mode;
    if (p.mode == SummaryMode::abstractive) {
      std::vector<Sentence> cluster;
      for (auto m : members) cluster.push_back(d.sentences[m]);
      auto fused = fuse_cluster_detailed(cluster, p.fusion);
      if (observer && members.size() > 1) observer(label, fused.graph);
      ss.sentence = std::move(fused.sentence);
      ss.outcome = fused.outcome;
    } else {
      ss.sentence = d.sentences[select_representative(members, vectors)];
      ss.outcome = FusionOutcome::verbatim;
    }
    out.sentences.push_back(std::move(ss));
  }
  return out;
}

}  // namespace bensumm
