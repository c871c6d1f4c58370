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

// Loopless k-shortest paths (Yen's deviation algorithm) on a small weighted
// digraph with strictly positive arc weights.
//
// Output order is (total weight, node sequence) ascending. Spur paths are the
// lexicographically smallest among equal-weight shortest paths, which makes
// the enumeration agree with a sort of all simple paths under that order.

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "bensumm/error.hpp"

namespace bensumm {

class WeightedDigraph {
 public:
  struct Arc {
    std::size_t to;
    double weight;
  };

  explicit WeightedDigraph(std::size_t n) : out_(n) {}

  std::size_t size() const { return out_.size(); }

  /// Adds or overwrites the arc u -> v. Weights must be positive.
  void set_arc(std::size_t u, std::size_t v, double w) {
    for (auto& a : out_[u]) {
      if (a.to == v) {
        a.weight = w;
        return;
      }
    }
    out_[u].push_back({v, w});
    std::sort(out_[u].begin(), out_[u].end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }

  const std::vector<Arc>& out(std::size_t u) const { return out_[u]; }

  double weight(std::size_t u, std::size_t v) const {
    for (const auto& a : out_[u]) {
      if (a.to == v) return a.weight;
    }
    return std::numeric_limits<double>::infinity();
  }

 private:
  std::vector<std::vector<Arc>> out_;
};

struct WeightedPath {
  std::vector<std::size_t> nodes;
  double weight = 0.0;

  friend bool operator<(const WeightedPath& a, const WeightedPath& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.nodes < b.nodes;
  }
  friend bool operator==(const WeightedPath& a, const WeightedPath& b) {
    return a.nodes == b.nodes;
  }
};

/// Sum of arc weights in path order, starting from the first node.
inline double path_weight(const WeightedDigraph& g, const std::vector<std::size_t>& nodes) {
  double w = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) w += g.weight(nodes[i], nodes[i + 1]);
  return w;
}

namespace detail {

/// Lexicographically smallest shortest path source -> target avoiding
/// `blocked_nodes` and the arcs in `blocked_arcs`. Empty when unreachable.
inline std::vector<std::size_t> lexmin_shortest_path(
    const WeightedDigraph& g, std::size_t source, std::size_t target,
    const std::vector<bool>& blocked_nodes,
    const std::set<std::pair<std::size_t, std::size_t>>& blocked_arcs) {
  const std::size_t n = g.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<std::vector<std::pair<std::size_t, double>>> in(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (blocked_nodes[u]) continue;
    for (const auto& a : g.out(u)) {
      if (!blocked_nodes[a.to] && !blocked_arcs.contains({u, a.to})) in[a.to].push_back({u, a.weight});
    }
  }

  // Distances to target over reversed arcs.
  std::vector<double> dist(n, kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[target] = 0.0;
  pq.push({0.0, target});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (auto [u, w] : in[v]) {
      const double nd = w + dist[v];
      if (nd < dist[u]) {
        dist[u] = nd;
        pq.push({nd, u});
      }
    }
  }
  if (dist[source] == kInf) return {};

  std::vector<std::size_t> path{source};
  std::size_t u = source;
  while (u != target) {
    std::size_t next = n;
    for (const auto& a : g.out(u)) {  // arcs are sorted by target
      if (blocked_nodes[a.to] || blocked_arcs.contains({u, a.to}) || dist[a.to] == kInf) continue;
      if (a.weight + dist[a.to] == dist[u]) {
        next = a.to;
        break;
      }
    }
    if (next == n) {
      // Rounding made no arc tight; take the arc closest to tight.
      double best = kInf;
      for (const auto& a : g.out(u)) {
        if (blocked_nodes[a.to] || blocked_arcs.contains({u, a.to}) || dist[a.to] >= dist[u]) continue;
        const double gap = a.weight + dist[a.to] - dist[u];
        if (gap < best) {
          best = gap;
          next = a.to;
        }
      }
      if (next == n) return {};
    }
    path.push_back(next);
    u = next;
  }
  return path;
}

}  // namespace detail

/// Up to `m` loopless source -> target paths, ordered by (weight, node sequence).
inline std::vector<WeightedPath> yen_k_shortest_paths(const WeightedDigraph& g, std::size_t source,
                                                      std::size_t target, std::size_t m) {
  std::vector<WeightedPath> accepted;
  if (m == 0) return accepted;
  const std::size_t n = g.size();
  std::vector<bool> none(n, false);
  auto first = detail::lexmin_shortest_path(g, source, target, none, {});
  if (first.empty()) return accepted;
  accepted.push_back({first, path_weight(g, first)});

  std::set<WeightedPath> candidates;
  std::set<std::vector<std::size_t>> seen{first};
  while (accepted.size() < m) {
    const auto prev = accepted.back().nodes;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
      const std::size_t spur = prev[i];
      const std::vector<std::size_t> root(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(i) + 1);

      std::set<std::pair<std::size_t, std::size_t>> blocked_arcs;
      for (const auto& p : accepted) {
        if (p.nodes.size() > i + 1 && std::equal(root.begin(), root.end(), p.nodes.begin()))
          blocked_arcs.insert({p.nodes[i], p.nodes[i + 1]});
      }
      std::vector<bool> blocked_nodes(n, false);
      for (std::size_t r = 0; r < i; ++r) blocked_nodes[root[r]] = true;

      auto tail = detail::lexmin_shortest_path(g, spur, target, blocked_nodes, blocked_arcs);
      if (tail.empty()) continue;
      std::vector<std::size_t> full = root;
      full.insert(full.end(), tail.begin() + 1, tail.end());
      if (seen.insert(full).second) candidates.insert({full, path_weight(g, full)});
    }
    if (candidates.empty()) break;
    accepted.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return accepted;
}

}  // namespace bensumm
