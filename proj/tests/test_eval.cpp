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
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "bensumm/eval.hpp"
#include "oracles.hpp"

using namespace bensumm;
using oracle::tok;
using Seq = std::vector<std::string>;

namespace {

/// Longest common subsequence by trying every subsequence of `a`.
std::size_t brute_lcs(const Seq& a, const Seq& b) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
    Seq sub;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mask >> i & 1u) sub.push_back(a[i]);
    std::size_t j = 0;
    for (std::size_t k = 0; k < b.size() && j < sub.size(); ++k) j += b[k] == sub[j];
    if (j == sub.size()) best = std::max(best, sub.size());
  }
  return best;
}

/// Clipped matches by greedily pairing each candidate n-gram with an unused
/// reference n-gram.
std::size_t brute_matches(const Seq& c, const Seq& r, std::size_t n) {
  if (c.size() < n || r.size() < n) return 0;
  std::vector<bool> used(r.size() - n + 1, false);
  std::size_t m = 0;
  for (std::size_t i = 0; i + n <= c.size(); ++i) {
    for (std::size_t j = 0; j + n <= r.size(); ++j) {
      if (!used[j] && std::equal(c.begin() + i, c.begin() + i + n, r.begin() + j)) {
        used[j] = true;
        ++m;
        break;
      }
    }
  }
  return m;
}

Document words_doc(const std::vector<Seq>& sentences) {
  Document d;
  for (const auto& s : sentences) {
    Sentence x;
    x.index = d.sentences.size();
    for (const auto& w : s) x.tokens.push_back(w == "." ? tok(w, Pos::PUNCT) : tok(w));
    d.sentences.push_back(std::move(x));
  }
  return d;
}

std::vector<CorpusSample> small_corpus() {
  std::istringstream in(
      R"({"id":"a","document":"river rises fast. boats wait here. the rain stops. farmers plant rice.","summary":"river rises fast. farmers plant rice."})"
      "\n"
      R"({"id":"b","document":"school opens today. children run in. teachers ring bells. school opens early.","summary":"school opens today."})"
      "\n"
      R"({"id":"c","document":"market sells fish. fish come fresh. buyers pay cash.","summary":"fish come fresh. buyers pay cash."})"
      "\n");
  return parse_corpus(in, Preprocessor{});
}

}  // namespace

TEST(Rouge, HandCountedPair) {
  const Seq c{"a", "b", "d"}, r{"a", "b", "c"};
  const auto r1 = rouge_n(c, r, 1);
  EXPECT_DOUBLE_EQ(r1.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r1.recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r1.f1, 2.0 / 3.0);
  const auto r2 = rouge_n(c, r, 2);
  EXPECT_DOUBLE_EQ(r2.precision, 0.5);
  EXPECT_DOUBLE_EQ(r2.recall, 0.5);
  EXPECT_DOUBLE_EQ(r2.f1, 0.5);
  const auto rl = rouge_l(Seq{"a", "c", "b"}, r);
  EXPECT_DOUBLE_EQ(rl.recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(rl.precision, 2.0 / 3.0);
}

TEST(Rouge, IdenticalAndDisjoint) {
  const Seq s{"x", "y", "z"};
  for (std::size_t n : {1u, 2u, 3u}) EXPECT_DOUBLE_EQ(rouge_n(s, s, n).f1, 1.0);
  EXPECT_DOUBLE_EQ(rouge_l(s, s).f1, 1.0);
  const Seq t{"p", "q"};
  EXPECT_EQ(rouge_n(s, t, 1).f1, 0.0);
  EXPECT_EQ(rouge_l(s, t).f1, 0.0);
}

TEST(Rouge, ClippingAndEmptySets) {
  const auto r = rouge_n(Seq{"a", "a", "a"}, Seq{"a", "b"}, 1);
  EXPECT_DOUBLE_EQ(r.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.recall, 0.5);
  EXPECT_DOUBLE_EQ(r.f1, 0.4);
  const auto empty = rouge_n(Seq{"a"}, Seq{"a", "b"}, 2);
  EXPECT_EQ(empty.precision, 0.0);
  EXPECT_DOUBLE_EQ(empty.recall, 0.0);
  EXPECT_EQ(rouge_l(Seq{}, Seq{"a"}).f1, 0.0);
  EXPECT_THROW(rouge_n(Seq{"a"}, Seq{"a"}, 0), Error);
}

TEST(Rouge, MatchesBruteForce) {
  std::mt19937 rng(31);
  const Seq pool{"a", "b", "c", "d"};
  std::uniform_int_distribution<std::size_t> pick(0, 3), len(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    Seq c, r;
    for (std::size_t k = len(rng); k > 0; --k) c.push_back(pool[pick(rng)]);
    for (std::size_t k = len(rng); k > 0; --k) r.push_back(pool[pick(rng)]);
    EXPECT_EQ(lcs_length(c, r), brute_lcs(c, r));
    for (std::size_t n : {1u, 2u, 3u}) {
      const auto s = rouge_n(c, r, n);
      const double m = static_cast<double>(brute_matches(c, r, n));
      const double nc = c.size() >= n ? static_cast<double>(c.size() - n + 1) : 0.0;
      const double nr = r.size() >= n ? static_cast<double>(r.size() - n + 1) : 0.0;
      EXPECT_DOUBLE_EQ(s.precision, nc > 0 ? m / nc : 0.0);
      EXPECT_DOUBLE_EQ(s.recall, nr > 0 ? m / nr : 0.0);
      EXPECT_GE(s.f1, std::min(s.precision, s.recall) - 1e-15);
      EXPECT_LE(s.f1, std::max(s.precision, s.recall) + 1e-15);
      // Swapping roles swaps precision and recall.
      const auto t = rouge_n(r, c, n);
      EXPECT_DOUBLE_EQ(s.precision, t.recall);
      EXPECT_DOUBLE_EQ(s.f1, t.f1);
    }
    const auto l = rouge_l(c, r), lt = rouge_l(r, c);
    EXPECT_DOUBLE_EQ(l.precision, lt.recall);
  }
}

TEST(Rouge, TokensDropPunctuation) {
  const auto d = words_doc({{"A", "b", "."}, {"c", "."}});
  EXPECT_EQ(rouge_tokens(d.sentences), (Seq{"a", "b", "c"}));
}

TEST(CopyRate, Cases) {
  const auto d = words_doc({{"a", "b", "c", "."}});
  EXPECT_DOUBLE_EQ(copy_rate(d, words_doc({{"a", "c", "."}})), 1.0);
  EXPECT_EQ(copy_rate(d, words_doc({{"x", "y"}})), 0.0);
  // Occurrence counted: two of three summary tokens are copied.
  EXPECT_DOUBLE_EQ(copy_rate(d, words_doc({{"a", "a", "z", "."}})), 2.0 / 3.0);
}

TEST(CopyRate, GrowsWithDocumentVocabulary) {
  std::mt19937 rng(2);
  const Seq pool{"a", "b", "c", "d", "e", "f"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    Seq doc_words, sum_words;
    for (int k = 0; k < 3; ++k) doc_words.push_back(pool[pick(rng)]);
    for (int k = 0; k < 5; ++k) sum_words.push_back(pool[pick(rng)]);
    const auto summary = words_doc({sum_words});
    const double before = copy_rate(words_doc({doc_words}), summary);
    doc_words.push_back(pool[pick(rng)]);
    const double after = copy_rate(words_doc({doc_words}), summary);
    EXPECT_GE(after, before);
    EXPECT_GE(before, 0.0);
    EXPECT_LE(after, 1.0);
  }
}

TEST(CorpusStats, OneSample) {
  CorpusSample s;
  s.document = words_doc({{"a", "b", "c", "d", "e", "."}, {"f", "g", "h", "."}});
  s.reference_summary = words_doc({{"a", "x", "y", "."}});
  const std::vector<CorpusSample> c{s};
  const auto st = corpus_stats(c);
  EXPECT_EQ(st.samples, 1u);
  EXPECT_DOUBLE_EQ(st.mean_document_tokens, 10.0);
  EXPECT_DOUBLE_EQ(st.mean_reference_tokens, 4.0);
  EXPECT_DOUBLE_EQ(st.mean_copy_rate, 1.0 / 3.0);
  EXPECT_THROW(corpus_stats(std::vector<CorpusSample>{}), EmptyCorpus);
}

TEST(Systems, NamesRoundTrip) {
  for (const auto& [sys, name] : kSystemNames) EXPECT_EQ(parse_system(name), sys);
  EXPECT_THROW(parse_system("pegasus"), UnknownSystem);
}

TEST(Evaluate, WholeDocumentReferenceScoresOne) {
  auto corpus = small_corpus();
  for (auto& s : corpus) s.reference_summary = s.document;
  EvalParams p;
  p.budget = 10;
  for (auto sys : {System::textrank, System::lexrank, System::sumbasic, System::greedykl, System::random}) {
    const auto r = evaluate_corpus(corpus, sys, p);
    EXPECT_EQ(r.samples, 3u);
    EXPECT_DOUBLE_EQ(r.rouge1, 1.0) << to_string(sys);
    EXPECT_DOUBLE_EQ(r.rouge2, 1.0);
    EXPECT_DOUBLE_EQ(r.rougeL, 1.0);
  }
}

TEST(Evaluate, SingleSampleEqualsItsScores) {
  const auto corpus = small_corpus();
  const std::vector<CorpusSample> one{corpus[0]};
  const EvalParams p;
  const auto r = evaluate_corpus(one, System::lexrank, p);
  const auto sc = score_summary(system_summary(corpus[0].document, System::lexrank, p), corpus[0].reference_summary);
  EXPECT_DOUBLE_EQ(r.rouge1, sc.rouge1.f1);
  EXPECT_DOUBLE_EQ(r.rouge2, sc.rouge2.f1);
  EXPECT_DOUBLE_EQ(r.rougeL, sc.rougeL.f1);
}

TEST(Evaluate, DeterministicAndOrderFree) {
  const auto corpus = small_corpus();
  auto reversed = corpus;
  std::reverse(reversed.begin(), reversed.end());
  const EvalParams p;
  for (const auto& [sys, name] : kSystemNames) {
    const auto a = evaluate_corpus(corpus, sys, p), b = evaluate_corpus(corpus, sys, p);
    EXPECT_EQ(a.rouge1, b.rouge1) << name;
    EXPECT_EQ(a.rougeL, b.rougeL) << name;
    if (sys == System::random) continue;
    const auto c = evaluate_corpus(reversed, sys, p);
    EXPECT_NEAR(a.rouge1, c.rouge1, 1e-12) << name;
    EXPECT_NEAR(a.rouge2, c.rouge2, 1e-12) << name;
  }
  EXPECT_THROW(evaluate_corpus(std::vector<CorpusSample>{}, System::random, p), EmptyCorpus);
}

TEST(Evaluate, SampleSeedsDiffer) {
  EXPECT_NE(sample_seed(0, 0), sample_seed(0, 1));
  EXPECT_NE(sample_seed(0, 0), sample_seed(1, 0));
  EXPECT_EQ(sample_seed(7, 3), sample_seed(7, 3));
}

TEST(Report, RecordsAndTable) {
  const std::vector<EvalReport> reports{{"textrank", 2, 0.5, 0.25, 0.125}, {"random", 2, 1.0 / 3.0, 0.0, 1.0}};
  std::ostringstream rec, tab;
  write_report_records(rec, reports);
  EXPECT_EQ(rec.str(), "system\tR-1\tR-2\tR-L\ntextrank\t0.500000\t0.250000\t0.125000\nrandom\t0.333333\t0.000000\t1.000000\n");
  write_report_table(tab, reports);
  EXPECT_NE(tab.str().find("textrank    50.00    25.00    12.50"), std::string::npos) << tab.str();
}
