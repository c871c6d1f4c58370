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

// Sentence clustering: Ward agglomeration over cosine distances, tree cuts,
// silhouette scoring and silhouette-driven choice of the cluster count.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bensumm/embed.hpp"
#include "bensumm/error.hpp"

namespace bensumm {

/// Symmetric, zero-diagonal, entries in [0, 2].
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v) {
    d_[i * n_ + j] = v;
    d_[j * n_ + i] = v;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

/// d(i, j) = 1 - cos(v_i, v_j), clamped to [0, 2].
inline DistanceMatrix pairwise_distances(std::span<const SentenceVector> vectors) {
  DistanceMatrix m(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const double d = 1.0 - cosine_similarity(vectors[i], vectors[j]);
      m.set(i, j, std::clamp(d, 0.0, 2.0));
    }
  }
  return m;
}

struct MergeStep {
  std::size_t left;   // smaller cluster id
  std::size_t right;  // larger cluster id
  double cost;        // Ward distance between the merged clusters
  std::size_t id;     // n + step index
};

/// Merge sequence over n leaves. Leaves are ids 0..n-1; step t creates id n+t.
struct MergeTree {
  std::size_t leaves = 0;
  std::vector<MergeStep> merges;
};

struct Clustering {
  std::size_t k = 0;
  std::vector<std::size_t> labels;

  /// Members of each cluster, ascending.
  std::vector<std::vector<std::size_t>> groups() const {
    std::vector<std::vector<std::size_t>> g(k);
    for (std::size_t i = 0; i < labels.size(); ++i) g[labels[i]].push_back(i);
    return g;
  }
};

/// Ward linkage on a precomputed distance matrix via the Lance-Williams
/// update. Ties go to the lexicographically smallest (left, right) id pair.
inline MergeTree ward_agglomerate(const DistanceMatrix& m) {
  const std::size_t n = m.size();
  MergeTree tree;
  tree.leaves = n;
  if (n < 2) return tree;

  // Slot s holds cluster ids[s]; squared distances between live slots.
  std::vector<std::size_t> ids(n), sizes(n, 1);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<bool> alive(n, true);
  std::vector<double> d2(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d2[i * n + j] = m(i, j) * m(i, j);

  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    std::pair<std::size_t, std::size_t> best_ids{std::numeric_limits<std::size_t>::max(), 0};
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        const double c = d2[i * n + j];
        const std::pair<std::size_t, std::size_t> key = std::minmax(ids[i], ids[j]);
        if (c < best || (c == best && key < best_ids)) {
          best = c;
          best_ids = key;
          bi = i;
          bj = j;
        }
      }
    }

    const double ni = static_cast<double>(sizes[bi]);
    const double nj = static_cast<double>(sizes[bj]);
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k] || k == bi || k == bj) continue;
      const double nk = static_cast<double>(sizes[k]);
      const double v = ((ni + nk) * d2[k * n + bi] + (nj + nk) * d2[k * n + bj] -
                        nk * d2[bi * n + bj]) /
                       (ni + nj + nk);
      d2[k * n + bi] = d2[bi * n + k] = std::max(v, 0.0);
    }
    tree.merges.push_back({best_ids.first, best_ids.second, std::sqrt(best), n + step});
    alive[bj] = false;
    sizes[bi] += sizes[bj];
    ids[bi] = n + step;
  }
  return tree;
}

/// Applies all but the last k-1 merges. Labels follow ascending minimum member.
inline Clustering cut_tree(const MergeTree& t, std::size_t k) {
  const std::size_t n = t.leaves;
  if (k < 1 || k > n)
    throw InvalidK("cut_tree: k=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");

  std::vector<std::size_t> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < n - k; ++s) {
    const auto& mg = t.merges[s];
    parent[find(mg.left)] = mg.id;
    parent[find(mg.right)] = mg.id;
  }

  Clustering c;
  c.k = k;
  c.labels.assign(n, 0);
  std::vector<std::size_t> label_of_root(2 * n, std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  // Scanning leaves in index order assigns labels by minimum member.
  for (std::size_t i = 0; i < n; ++i) {
    auto& lbl = label_of_root[find(i)];
    if (lbl == std::numeric_limits<std::size_t>::max()) lbl = next++;
    c.labels[i] = lbl;
  }
  return c;
}

struct SilhouetteReport {
  std::vector<double> intra;    // y: mean distance to the sample's co-members
  std::vector<double> nearest;  // x: mean distance to the nearest other cluster
  std::vector<double> scores;
  double mean_score = 0.0;
};

/// Silhouette (x - y) / max(x, y) per sample; members of singleton clusters score 0.
inline SilhouetteReport silhouette(const Clustering& c, const DistanceMatrix& m) {
  const std::size_t n = m.size();
  if (c.labels.size() != n) throw InvalidK("silhouette: label count differs from matrix size");
  if (n < 3 || c.k < 2 || c.k > n - 1)
    throw InvalidK("silhouette needs 2 <= k <= n-1, got k=" + std::to_string(c.k) +
                   ", n=" + std::to_string(n));

  std::vector<std::size_t> sizes(c.k, 0);
  for (auto l : c.labels) ++sizes[l];

  SilhouetteReport r;
  r.intra.resize(n);
  r.nearest.resize(n);
  r.scores.resize(n);
  std::vector<double> sums(c.k);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sums[c.labels[j]] += m(i, j);
    }
    const std::size_t own = c.labels[i];
    const double y = sizes[own] > 1 ? sums[own] / static_cast<double>(sizes[own] - 1) : 0.0;
    double x = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < c.k; ++l) {
      if (l != own && sizes[l] > 0) x = std::min(x, sums[l] / static_cast<double>(sizes[l]));
    }
    r.intra[i] = y;
    r.nearest[i] = x;
    const double denom = std::max(x, y);
    r.scores[i] = (sizes[own] <= 1 || denom <= 0.0) ? 0.0 : (x - y) / denom;
  }
  r.mean_score = std::accumulate(r.scores.begin(), r.scores.end(), 0.0) / static_cast<double>(n);
  return r;
}

/// Mean silhouette for each candidate k in [2, n-1], paired with the cut.
struct ClusterSelection {
  Clustering best;
  std::vector<std::pair<std::size_t, double>> scores_by_k;
};

inline ClusterSelection select_clustering_detailed(const DistanceMatrix& m) {
  const std::size_t n = m.size();
  ClusterSelection sel;
  if (n <= 2) {
    sel.best.k = n;
    sel.best.labels.resize(n);
    std::iota(sel.best.labels.begin(), sel.best.labels.end(), 0);
    return sel;
  }
  const auto tree = ward_agglomerate(m);
  if (n == 3) {
    sel.best = cut_tree(tree, 2);
    return sel;
  }
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 2; k + 1 <= n; ++k) {
    auto c = cut_tree(tree, k);
    const double s = silhouette(c, m).mean_score;
    sel.scores_by_k.emplace_back(k, s);
    // Strictly greater: equal scores keep the smaller k.
    if (s > best) {
      best = s;
      sel.best = std::move(c);
    }
  }
  return sel;
}

inline Clustering select_clustering(const DistanceMatrix& m) {
  return select_clustering_detailed(m).best;
}

inline Clustering select_clustering(std::span<const SentenceVector> vectors) {
  return select_clustering(pairwise_distances(vectors));
}

}  // namespace bensumm
