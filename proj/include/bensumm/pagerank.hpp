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

#include <cmath>
#include <vector>

namespace bensumm {

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-6;  // L1 change between iterations
  int max_iterations = 100;
};

/// Weighted PageRank over a dense n x n matrix (`weights[i][j]` is the arc
/// i -> j). Rows with zero total weight spread their mass uniformly. The
/// result sums to 1.
inline std::vector<double> pagerank(const std::vector<std::vector<double>>& weights,
                                    const PageRankOptions& opt = {}) {
  const std::size_t n = weights.size();
  if (n == 0) return {};
  const double nn = static_cast<double>(n);
  std::vector<double> out_sum(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (double w : weights[i]) out_sum[i] += w;

  std::vector<double> pr(n, 1.0 / nn), next(n);
  for (int it = 0; it < opt.max_iterations; ++it) {
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (out_sum[i] <= 0.0) dangling += pr[i];
    }
    const double base = (1.0 - opt.damping) / nn + opt.damping * dangling / nn;
    std::fill(next.begin(), next.end(), base);
    for (std::size_t i = 0; i < n; ++i) {
      if (out_sum[i] <= 0.0) continue;
      const double share = opt.damping * pr[i] / out_sum[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (weights[i][j] != 0.0) next[j] += share * weights[i][j];
      }
    }
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - pr[i]);
    pr.swap(next);
    if (delta < opt.tolerance) break;
  }
  return pr;
}

}  // namespace bensumm
