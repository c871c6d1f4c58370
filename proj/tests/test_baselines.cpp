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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "bensumm/baselines.hpp"
#include "oracles.hpp"

using namespace bensumm;
using oracle::tok;

namespace {

Document doc(const std::vector<std::vector<std::string>>& sentences) {
  Document d;
  for (const auto& words : sentences) {
    Sentence s;
    s.index = d.sentences.size();
    for (const auto& w : words) s.tokens.push_back(tok(w));
    d.sentences.push_back(std::move(s));
  }
  return d;
}

std::vector<std::size_t> order(const RankedSentences& r) {
  std::vector<std::size_t> out;
  for (const auto& x : r) out.push_back(x.index);
  return out;
}

bool is_permutation_of_indices(const RankedSentences& r, std::size_t n) {
  auto o = order(r);
  std::sort(o.begin(), o.end());
  std::vector<std::size_t> want(n);
  std::iota(want.begin(), want.end(), 0);
  return o == want;
}

const std::vector<std::vector<std::vector<double>>>& fixed_graphs() {
  static const std::vector<std::vector<std::vector<double>>> g{
      {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
      {{0, 2, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {1, 1, 1, 0}},
      {{0, 0.3, 0.7, 0.1, 0.0}, {0.3, 0, 0.2, 0, 0.9}, {0.7, 0.2, 0, 0.4, 0}, {0.1, 0, 0.4, 0, 0.5},
       {0, 0.9, 0, 0.5, 0}}};
  return g;
}

}  // namespace

TEST(PageRank, SumsToOneAndMatchesPowerIteration) {
  for (const auto& w : fixed_graphs()) {
    const auto pr = pagerank(w);
    EXPECT_NEAR(std::accumulate(pr.begin(), pr.end(), 0.0), 1.0, 1e-6);
    const auto want = oracle::power_iteration(w);
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(pr[i], want[i], 1e-5);
    const auto tight = pagerank(w, {0.85, 1e-14, 10000});
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(tight[i], want[i], 1e-10);
  }
}

TEST(PageRank, EmptyAndIsolated) {
  EXPECT_TRUE(pagerank({}).empty());
  const auto pr = pagerank({{0, 0}, {0, 0}});
  EXPECT_DOUBLE_EQ(pr[0], 0.5);
  EXPECT_DOUBLE_EQ(pr[1], 0.5);
}

TEST(TextRank, SimilarityCases) {
  EXPECT_DOUBLE_EQ(textrank_similarity({"a", "b", "c"}, {"a", "b", "d", "e"}), 2.0 / (std::log(3.0) + std::log(4.0)));
  EXPECT_EQ(textrank_similarity({"a"}, {"a"}), 0.0);
  EXPECT_EQ(textrank_similarity({}, {"a", "b"}), 0.0);
}

TEST(TextRank, SingleSentence) {
  const auto r = textrank(doc({{"a", "b"}}));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].index, 0u);
  EXPECT_DOUBLE_EQ(r[0].score, 1.0);
}

TEST(TextRank, DisjointSentencesTie) {
  const auto s = textrank_scores(doc({{"a", "b"}, {"c", "d"}}));
  EXPECT_DOUBLE_EQ(s[0], s[1]);
}

TEST(TextRank, OverlappingPairOutranksOutsider) {
  const auto d = doc({{"a", "b", "c"}, {"a", "b", "c", "d"}, {"e", "f"}});
  const auto s = textrank_scores(d);
  const double x = 3.0 / (std::log(3.0) + std::log(4.0));
  const auto want = oracle::power_iteration({{0, x, 0}, {x, 0, 0}, {0, 0, 0}});
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(s[i], want[i], 1e-5);
  EXPECT_GT(s[0], s[2]);
  EXPECT_GT(s[1], s[2]);
  EXPECT_NEAR(std::accumulate(s.begin(), s.end(), 0.0), 1.0, 1e-6);
}

TEST(LexRank, DuplicatesTie) {
  const auto d = doc({{"a", "b"}, {"c", "d", "e"}, {"a", "b"}});
  const auto r = lexrank(d);
  const auto s = lexrank_scores(d);
  EXPECT_DOUBLE_EQ(s[0], s[2]);
  EXPECT_EQ(r[0].index, 0u);
  EXPECT_EQ(r[1].index, 2u);
}

TEST(LexRank, SingleSentence) {
  const auto r = lexrank(doc({{"a"}}));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_DOUBLE_EQ(r[0].score, 1.0);
}

TEST(LexRank, FourSentencesMatchDenseRecomputation) {
  const std::vector<std::vector<std::string>> words{{"a", "b", "b"}, {"b", "c"}, {"c", "d", "a"}, {"e"}};
  const auto d = doc(words);
  // Dense TF-IDF over the vocabulary a..e, idf = 1 + ln(4 / df).
  const std::vector<std::string> vocab{"a", "b", "c", "d", "e"};
  std::vector<std::vector<double>> v(4, std::vector<double>(5, 0.0));
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& w : words[i]) v[i][std::find(vocab.begin(), vocab.end(), w) - vocab.begin()] += 1;
  for (std::size_t k = 0; k < 5; ++k) {
    double df = 0;
    for (std::size_t i = 0; i < 4; ++i) df += v[i][k] > 0;
    for (std::size_t i = 0; i < 4; ++i) v[i][k] *= 1 + std::log(4 / df);
  }
  std::vector<std::vector<double>> adj(4, std::vector<double>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      double dot = 0, ni = 0, nj = 0;
      for (std::size_t k = 0; k < 5; ++k) dot += v[i][k] * v[j][k], ni += v[i][k] * v[i][k], nj += v[j][k] * v[j][k];
      adj[i][j] = dot / std::sqrt(ni * nj) > 0.1 ? 1.0 : 0.0;
    }
  }
  const auto want = oracle::power_iteration(adj);
  const auto got = lexrank_scores(d);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(got[i], want[i], 1e-5);
  EXPECT_NEAR(std::accumulate(got.begin(), got.end(), 0.0), 1.0, 1e-6);
}

TEST(SumBasic, PickOrderMatchesHandSimulation) {
  // p: a=2/7 b=2/7 c=d=e=1/7. Means: s0 2/7, s1 3/14, s2 1/7 -> pick s0.
  // Then a, b -> 4/49: s1 = 11/98, s2 = 1/7 -> pick s2, then s1.
  const auto d = doc({{"a", "a", "b"}, {"b", "c"}, {"d", "e"}});
  const auto r = sumbasic(d);
  EXPECT_EQ(order(r), (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(order(r), oracle::sumbasic_order(d));
  EXPECT_DOUBLE_EQ(r[0].score, 2.0 / 7.0);
  EXPECT_DOUBLE_EQ(r[1].score, 1.0 / 7.0);
  EXPECT_DOUBLE_EQ(r[2].score, 11.0 / 98.0);
}

TEST(SumBasic, MostFrequentWordFirstAndNoRepeat) {
  const auto r = sumbasic(doc({{"x", "y"}, {"w", "w", "w"}, {"w", "z"}, {"q", "x"}}));
  EXPECT_EQ(r[0].index, 1u);
  EXPECT_TRUE(is_permutation_of_indices(r, 4));
}

TEST(GreedyKL, ToysMatchExhaustiveEvaluation) {
  const std::vector<Document> toys{doc({{"a", "b"}, {"a"}, {"c"}}), doc({{"a", "a", "b"}, {"b", "c"}, {"d", "e"}}),
                                   doc({{"x"}, {"x", "y", "z"}, {"y", "y"}})};
  for (const auto& d : toys) EXPECT_EQ(order(greedykl(d)), oracle::greedykl_order(d));
}

TEST(GreedyKL, RandomDocsMatchExhaustiveEvaluation) {
  std::mt19937 rng(4);
  const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), len(1, 5), n(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<std::string>> s(n(rng));
    for (auto& x : s)
      for (std::size_t k = len(rng); k > 0; --k) x.push_back(pool[pick(rng)]);
    const auto d = doc(s);
    const auto r = greedykl(d);
    EXPECT_EQ(order(r), oracle::greedykl_order(d)) << "trial " << trial;
    for (std::size_t k = 1; k < r.size(); ++k) EXPECT_GT(r[k - 1].score, r[k].score);
  }
}

TEST(SumBasic, RandomDocsMatchRecomputation) {
  std::mt19937 rng(6);
  const std::vector<std::string> pool{"a", "b", "c", "d", "e"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), len(1, 5), n(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<std::string>> s(n(rng));
    for (auto& x : s)
      for (std::size_t k = len(rng); k > 0; --k) x.push_back(pool[pick(rng)]);
    const auto d = doc(s);
    EXPECT_EQ(order(sumbasic(d)), oracle::sumbasic_order(d)) << "trial " << trial;
  }
}

TEST(GreedyKL, RepeatedSentenceAnyCopyFirst) {
  const auto r = greedykl(doc({{"a", "b"}, {"a", "b"}, {"a", "b"}}));
  EXPECT_TRUE(is_permutation_of_indices(r, 3));
  EXPECT_EQ(r[0].index, 0u);
}

TEST(RandomBaseline, DeterministicPermutation) {
  const auto d = doc(std::vector<std::vector<std::string>>(10, {"w"}));
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    const auto a = random_baseline(d, seed), b = random_baseline(d, seed);
    EXPECT_EQ(order(a), order(b));
    EXPECT_TRUE(is_permutation_of_indices(a, 10));
  }
  EXPECT_EQ(order(random_baseline(doc({{"w"}}), 5)), (std::vector<std::size_t>{0}));
}

TEST(Baselines, AllRankingsArePermutations) {
  std::mt19937 rng(12);
  const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f", "g"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), len(0, 6), n(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<std::string>> s(n(rng));
    for (auto& x : s)
      for (std::size_t k = len(rng); k > 0; --k) x.push_back(pool[pick(rng)]);
    const auto d = doc(s);
    for (const auto& r : {textrank(d), lexrank(d), sumbasic(d), greedykl(d), random_baseline(d, trial)}) {
      EXPECT_TRUE(is_permutation_of_indices(r, d.size()));
      for (const auto& x : r) EXPECT_TRUE(std::isfinite(x.score));
      for (std::size_t k = 1; k < r.size(); ++k) EXPECT_GE(r[k - 1].score + 1e-12, r[k].score);
    }
  }
}

TEST(TopSentences, BudgetAndDocumentOrder) {
  const auto d = doc({{"a"}, {"b"}, {"c"}, {"d"}});
  const RankedSentences r{{3, 4}, {1, 3}, {0, 2}, {2, 1}};
  const auto top = top_sentences(d, r, 2);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0].index, 1u);
  EXPECT_EQ(top[1].index, 3u);
  EXPECT_EQ(top_sentences(d, r, 10).size(), 4u);
}
