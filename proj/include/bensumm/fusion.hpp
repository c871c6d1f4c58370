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

// Multi-sentence compression over a word graph.
//
// Sentences of one cluster are merged into a directed graph whose nodes are
// (normalized word, POS) pairs, bracketed by dummy START and END nodes. Each
// start->end path is a candidate compression; candidates come from a
// loopless k-shortest-path search and are re-ranked by the keyphrases they
// cover.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bensumm/corpus.hpp"
#include "bensumm/error.hpp"
#include "bensumm/ksp.hpp"
#include "bensumm/pagerank.hpp"

namespace bensumm {

enum class NodeKind { start, end, word };

struct Occurrence {
  std::size_t sentence;  // position of the sentence within the cluster
  long offset;           // token offset; -1 for START, sentence length for END
};

struct WGNode {
  NodeKind kind = NodeKind::word;
  std::string word;  // normalized; empty for START/END
  Pos pos = Pos::OTHER;
  Token token;       // first mapped token, used for output surfaces
  std::vector<Occurrence> occurrences;

  std::size_t frequency() const { return occurrences.size(); }

  std::optional<long> offset_in(std::size_t sentence) const {
    for (const auto& o : occurrences) {
      if (o.sentence == sentence) return o.offset;
    }
    return std::nullopt;
  }

  bool hosts(std::size_t sentence) const {
    return !occurrences.empty() && occurrences.back().sentence == sentence;
  }
};

struct WGEdge {
  std::size_t from;
  std::size_t to;
  std::size_t count = 0;
  double weight = 1.0;
};

struct WordGraph {
  static constexpr std::size_t kStart = 0;
  static constexpr std::size_t kEnd = 1;

  std::vector<WGNode> nodes;
  std::vector<WGEdge> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  std::vector<Sentence> sentences;
  std::vector<std::vector<std::size_t>> mapping;  // per sentence, node of each token

  const WGEdge* find_edge(std::size_t from, std::size_t to) const {
    auto it = edge_index.find({from, to});
    return it == edge_index.end() ? nullptr : &edges[it->second];
  }

  void add_edge(std::size_t from, std::size_t to) {
    auto [it, fresh] = edge_index.try_emplace({from, to}, edges.size());
    if (fresh) edges.push_back({from, to, 0, 1.0});
    ++edges[it->second].count;
  }
};

struct FusionConfig {
  std::size_t max_paths = 50;  // M
  std::size_t min_length = 8;
  bool require_verb = true;
};

struct FusionPath {
  std::vector<std::size_t> nodes;  // WORD nodes only
  std::size_t token_length = 0;
  double total_weight = 0.0;
  double score = 0.0;
};

/// Normalized word sequence -> score.
using KeyphraseTable = std::map<std::vector<std::string>, double>;

namespace detail {

/// Count of occurrence contexts of `node` whose left/right neighbour matches
/// the neighbour of token `p` in `tokens`. With `content_only`, only matches
/// on non-stopword, non-punctuation neighbours count.
inline std::size_t context_overlap(const WordGraph& g, const std::vector<Token>& tokens,
                                   std::size_t p, const WGNode& node, bool content_only) {
  std::size_t overlap = 0;
  for (const auto& occ : node.occurrences) {
    const auto& other = g.sentences[occ.sentence].tokens;
    for (long side : {-1L, 1L}) {
      const long q = static_cast<long>(p) + side;
      const long q2 = occ.offset + side;
      if (q < 0 || q >= static_cast<long>(tokens.size())) continue;
      if (q2 < 0 || q2 >= static_cast<long>(other.size())) continue;
      const auto& mine = tokens[static_cast<std::size_t>(q)];
      if (content_only && !mine.is_content()) continue;
      if (mine.normalized == other[static_cast<std::size_t>(q2)].normalized) ++overlap;
    }
  }
  return overlap;
}

}  // namespace detail

/// Builds the word graph of a cluster. The first sentence becomes a fresh
/// chain; later sentences map content words first (unambiguous, then
/// ambiguous by context overlap, frequency and node id), then stopwords and
/// punctuation, which only merge when they share a content-word neighbour.
inline WordGraph build_word_graph(std::span<const Sentence> cluster) {
  WordGraph g;
  g.nodes.resize(2);
  g.nodes[WordGraph::kStart].kind = NodeKind::start;
  g.nodes[WordGraph::kEnd].kind = NodeKind::end;
  g.sentences.assign(cluster.begin(), cluster.end());

  std::map<std::pair<std::string, Pos>, std::vector<std::size_t>> by_key;

  for (std::size_t s = 0; s < g.sentences.size(); ++s) {
    const auto& tokens = g.sentences[s].tokens;
    std::vector<std::optional<std::size_t>> mapped(tokens.size());

    auto assign = [&](std::size_t p, std::size_t id) {
      mapped[p] = id;
      g.nodes[id].occurrences.push_back({s, static_cast<long>(p)});
    };
    auto create = [&](std::size_t p) {
      WGNode node;
      node.word = tokens[p].normalized;
      node.pos = tokens[p].pos;
      node.token = tokens[p];
      const std::size_t id = g.nodes.size();
      g.nodes.push_back(std::move(node));
      by_key[{tokens[p].normalized, tokens[p].pos}].push_back(id);
      assign(p, id);
    };
    auto candidates = [&](std::size_t p) {
      std::vector<std::size_t> out;
      auto it = by_key.find({tokens[p].normalized, tokens[p].pos});
      if (it == by_key.end()) return out;
      for (auto id : it->second) {
        if (!g.nodes[id].hosts(s)) out.push_back(id);
      }
      return out;
    };
    // Best candidate by (overlap desc, frequency desc, id asc).
    auto pick = [&](std::size_t p, const std::vector<std::size_t>& cands, bool content_only,
                    std::size_t min_overlap) -> std::optional<std::size_t> {
      std::optional<std::size_t> best;
      std::tuple<std::size_t, std::size_t> best_key{0, 0};
      for (auto id : cands) {
        const auto ov = detail::context_overlap(g, tokens, p, g.nodes[id], content_only);
        if (ov < min_overlap) continue;
        const std::tuple<std::size_t, std::size_t> key{ov, g.nodes[id].frequency()};
        if (!best || key > best_key) {
          best = id;
          best_key = key;
        }
      }
      return best;
    };

    if (s == 0) {
      for (std::size_t p = 0; p < tokens.size(); ++p) create(p);
    } else {
      std::vector<std::size_t> ambiguous;
      for (std::size_t p = 0; p < tokens.size(); ++p) {
        if (!tokens[p].is_content()) continue;
        const auto c = candidates(p);
        if (c.empty()) {
          create(p);
        } else if (c.size() == 1) {
          assign(p, c.front());
        } else {
          ambiguous.push_back(p);
        }
      }
      for (auto p : ambiguous) {
        const auto c = candidates(p);
        if (auto id = pick(p, c, false, 0)) {
          assign(p, *id);
        } else {
          create(p);
        }
      }
      for (std::size_t p = 0; p < tokens.size(); ++p) {
        if (tokens[p].is_content()) continue;
        const auto c = candidates(p);
        if (auto id = pick(p, c, true, 1)) {
          assign(p, *id);
        } else {
          create(p);
        }
      }
    }

    std::vector<std::size_t> seq;
    seq.reserve(tokens.size());
    for (const auto& m : mapped) seq.push_back(*m);
    g.nodes[WordGraph::kStart].occurrences.push_back({s, -1});
    g.nodes[WordGraph::kEnd].occurrences.push_back({s, static_cast<long>(tokens.size())});
    std::size_t prev = WordGraph::kStart;
    for (auto id : seq) {
      g.add_edge(prev, id);
      prev = id;
    }
    g.add_edge(prev, WordGraph::kEnd);
    g.mapping.push_back(std::move(seq));
  }
  return g;
}

/// (f_i + f_j) / sum(1 / distance), divided by f_i * f_j. An empty distance
/// list counts as a sum of 1.
inline double edge_weight(std::size_t freq_from, std::size_t freq_to,
                          std::span<const long> distances) {
  double inv = 0.0;
  for (long d : distances) inv += 1.0 / static_cast<double>(d);
  if (distances.empty()) inv = 1.0;
  const double fi = static_cast<double>(freq_from);
  const double fj = static_cast<double>(freq_to);
  return (fi + fj) / inv / (fi * fj);
}

inline void weight_edges(WordGraph& g) {
  std::vector<long> distances;
  for (auto& e : g.edges) {
    distances.clear();
    const auto& from = g.nodes[e.from];
    const auto& to = g.nodes[e.to];
    for (const auto& occ : from.occurrences) {
      if (auto off = to.offset_in(occ.sentence); off && *off > occ.offset)
        distances.push_back(*off - occ.offset);
    }
    e.weight = edge_weight(from.frequency(), to.frequency(), distances);
  }
}

/// Up to `max_paths` loopless START -> END paths in nondecreasing weight.
inline std::vector<FusionPath> k_shortest_paths(const WordGraph& g, std::size_t max_paths) {
  WeightedDigraph dg(g.nodes.size());
  for (const auto& e : g.edges) dg.set_arc(e.from, e.to, e.weight);
  const auto paths = yen_k_shortest_paths(dg, WordGraph::kStart, WordGraph::kEnd, max_paths);
  if (paths.empty() && max_paths > 0) throw NoPath("word graph has no START->END path");
  std::vector<FusionPath> out;
  out.reserve(paths.size());
  for (const auto& p : paths) {
    FusionPath fp;
    fp.nodes.assign(p.nodes.begin() + 1, p.nodes.end() - 1);
    fp.token_length = fp.nodes.size();
    fp.total_weight = p.weight;
    fp.score = p.weight;
    out.push_back(std::move(fp));
  }
  return out;
}

inline bool has_verb(const WordGraph& g, const FusionPath& p) {
  return std::any_of(p.nodes.begin(), p.nodes.end(),
                     [&](std::size_t id) { return g.nodes[id].pos == Pos::VERB; });
}

inline std::vector<FusionPath> filter_paths(const WordGraph& g, const std::vector<FusionPath>& paths,
                                            const FusionConfig& cfg) {
  std::vector<FusionPath> out;
  for (const auto& p : paths) {
    if (p.token_length < cfg.min_length) continue;
    if (cfg.require_verb && !has_verb(g, p)) continue;
    out.push_back(p);
  }
  return out;
}

inline bool is_keyphrase_word(const Token& t) {
  return t.is_content() && (t.pos == Pos::NOUN || t.pos == Pos::PROPN || t.pos == Pos::ADJ);
}

/// TextRank over nouns, proper nouns and adjectives (co-occurrence window 2
/// over each sentence's candidate words). Scores are scaled so they average
/// 1. Adjacent candidate words that both score above the mean join into a
/// phrase scored by the sum of its words.
inline KeyphraseTable extract_keyphrases(std::span<const Sentence> cluster,
                                         const PageRankOptions& opt = {}) {
  std::map<std::string, std::size_t> index;
  std::vector<std::string> words;
  for (const auto& s : cluster) {
    for (const auto& t : s.tokens) {
      if (is_keyphrase_word(t) && index.try_emplace(t.normalized, words.size()).second)
        words.push_back(t.normalized);
    }
  }
  KeyphraseTable table;
  if (words.empty()) return table;

  std::vector<std::vector<double>> w(words.size(), std::vector<double>(words.size(), 0.0));
  for (const auto& s : cluster) {
    std::optional<std::size_t> prev;
    for (const auto& t : s.tokens) {
      if (!is_keyphrase_word(t)) continue;
      const auto cur = index.at(t.normalized);
      if (prev && *prev != cur) {
        w[*prev][cur] += 1.0;
        w[cur][*prev] += 1.0;
      }
      prev = cur;
    }
  }
  auto pr = pagerank(w, opt);
  double mean = 0.0;
  for (auto& x : pr) {
    x *= static_cast<double>(words.size());
    mean += x;
  }
  mean /= static_cast<double>(pr.size());

  for (const auto& s : cluster) {
    std::vector<std::string> phrase;
    double phrase_score = 0.0;
    bool phrase_strong = false;
    auto flush = [&] {
      if (!phrase.empty()) table[phrase] = phrase_score;
      phrase.clear();
      phrase_score = 0.0;
      phrase_strong = false;
    };
    for (const auto& t : s.tokens) {
      if (!is_keyphrase_word(t)) {
        flush();
        continue;
      }
      const double sc = pr[index.at(t.normalized)];
      const bool strong = sc > mean;
      if (!(strong && phrase_strong)) flush();
      phrase.push_back(t.normalized);
      phrase_score += sc;
      phrase_strong = strong;
    }
    flush();
  }
  return table;
}

namespace detail {

inline bool contains_run(const std::vector<std::string>& hay, const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace detail

/// score = weight / (length * (1 + sum of contained keyphrase scores)).
/// Ascending, stable.
inline std::vector<FusionPath> rank_fusions(const WordGraph& g, std::vector<FusionPath> paths,
                                            const KeyphraseTable& keyphrases) {
  for (auto& p : paths) {
    std::vector<std::string> words;
    words.reserve(p.nodes.size());
    for (auto id : p.nodes) words.push_back(g.nodes[id].word);
    double bonus = 0.0;
    for (const auto& [phrase, score] : keyphrases) {
      if (detail::contains_run(words, phrase)) bonus += score;
    }
    const double len = static_cast<double>(std::max<std::size_t>(p.token_length, 1));
    p.score = p.total_weight / (len * (1.0 + bonus));
  }
  std::stable_sort(paths.begin(), paths.end(),
                   [](const FusionPath& a, const FusionPath& b) { return a.score < b.score; });
  return paths;
}

enum class FusionOutcome { verbatim, fused, relaxed_length, relaxed_verb, longest_original };

inline std::string_view to_string(FusionOutcome o) {
  switch (o) {
    case FusionOutcome::verbatim: return "verbatim";
    case FusionOutcome::fused: return "fused";
    case FusionOutcome::relaxed_length: return "relaxed-length";
    case FusionOutcome::relaxed_verb: return "relaxed-verb";
    case FusionOutcome::longest_original: return "longest-original";
  }
  return "fused";
}

struct FusionResult {
  Sentence sentence;
  FusionOutcome outcome = FusionOutcome::fused;
  WordGraph graph;
  std::vector<FusionPath> ranked;  // surviving candidates, best first
};

inline Sentence path_sentence(const WordGraph& g, const FusionPath& p, std::size_t index) {
  Sentence s;
  s.index = index;
  for (auto id : p.nodes) s.tokens.push_back(g.nodes[id].token);
  s.raw = detokenize(s.tokens);
  return s;
}

inline FusionResult fuse_cluster_detailed(std::span<const Sentence> cluster, const FusionConfig& cfg) {
  if (cluster.empty()) throw EmptyInput("fuse_cluster: empty cluster");
  std::size_t first_index = cluster.front().index;
  for (const auto& s : cluster) first_index = std::min(first_index, s.index);

  FusionResult r;
  if (cluster.size() == 1) {
    r.sentence = cluster.front();
    r.outcome = FusionOutcome::verbatim;
    return r;
  }
  r.graph = build_word_graph(cluster);
  weight_edges(r.graph);
  const auto paths = k_shortest_paths(r.graph, std::max<std::size_t>(cfg.max_paths, 1));
  const auto keyphrases = extract_keyphrases(cluster);

  FusionConfig relaxed = cfg;
  auto survivors = filter_paths(r.graph, paths, relaxed);
  r.outcome = FusionOutcome::fused;
  if (survivors.empty()) {
    relaxed.min_length = 1;
    survivors = filter_paths(r.graph, paths, relaxed);
    r.outcome = FusionOutcome::relaxed_length;
  }
  if (survivors.empty()) {
    relaxed.require_verb = false;
    survivors = filter_paths(r.graph, paths, relaxed);
    r.outcome = FusionOutcome::relaxed_verb;
  }
  if (survivors.empty()) {
    const Sentence* longest = &cluster.front();
    for (const auto& s : cluster) {
      if (s.tokens.size() > longest->tokens.size()) longest = &s;
    }
    r.sentence = *longest;
    r.outcome = FusionOutcome::longest_original;
    return r;
  }
  r.ranked = rank_fusions(r.graph, std::move(survivors), keyphrases);
  r.sentence = path_sentence(r.graph, r.ranked.front(), first_index);
  return r;
}

inline Sentence fuse_cluster(std::span<const Sentence> cluster, const FusionConfig& cfg = {}) {
  return fuse_cluster_detailed(cluster, cfg).sentence;
}

/// Graphviz dump; edge labels show count and weight.
inline void write_dot(std::ostream& out, const WordGraph& g) {
  auto escape = [](const std::string& s) {
    std::string e;
    for (char c : s) {
      if (c == '"' || c == '\\') e += '\\';
      e += c;
    }
    return e;
  };
  out << "digraph word_graph {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    std::string label = n.kind == NodeKind::start ? "START"
                        : n.kind == NodeKind::end ? "END"
                                                  : n.token.surface + "/" + std::string(to_string(n.pos));
    label += " (" + std::to_string(n.frequency()) + ")";
    out << "  n" << i << " [label=\"" << escape(label) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    std::ostringstream w;
    w.precision(4);
    w << e.weight;
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.count << " / " << w.str()
        << "\"];\n";
  }
  out << "}\n";
}

}  // namespace bensumm
