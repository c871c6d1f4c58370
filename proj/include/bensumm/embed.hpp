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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "bensumm/corpus.hpp"
#include "bensumm/error.hpp"

namespace bensumm {

class SentenceVector {
 public:
  SentenceVector() = default;
  explicit SentenceVector(std::vector<double> values) : values_(std::move(values)) {}

  static SentenceVector zero(std::size_t dim) { return SentenceVector(std::vector<double>(dim, 0.0)); }

  std::span<const double> values() const { return values_; }
  std::size_t dim() const { return values_.size(); }

  bool is_zero() const {
    for (double v : values_) {
      if (v != 0.0) return false;
    }
    return true;
  }

  SentenceVector scaled(double alpha) const {
    auto v = values_;
    for (auto& x : v) x *= alpha;
    return SentenceVector(std::move(v));
  }

 private:
  std::vector<double> values_;
};

/// Word -> dense vector, all of one dimension. Keys are normalized forms.
class WordVectorTable {
 public:
  explicit WordVectorTable(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DimensionMismatch("word vector dimension must be positive");
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }

  /// Returns false (and keeps the old entry) when `word` is already present.
  bool insert(const std::string& word, std::vector<double> vec) {
    if (vec.size() != dim_)
      throw DimensionMismatch("expected " + std::to_string(dim_) + " components, got " +
                              std::to_string(vec.size()));
    return entries_.try_emplace(word, std::move(vec)).second;
  }

  const std::vector<double>* find(const std::string& word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
  }

 private:
  std::size_t dim_;
  std::unordered_map<std::string, std::vector<double>> entries_;
};

/// word2vec text format: optional `count dim` header, then `word v1 .. vdim`.
inline WordVectorTable parse_word_vectors(std::istream& in) {
  std::optional<WordVectorTable> table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(line);
    std::string word;
    if (!(row >> word)) continue;
    std::vector<double> vec;
    std::string field;
    while (row >> field) {
      try {
        std::size_t used = 0;
        vec.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw ParseError("non-numeric component '" + field + "'", lineno);
      }
    }
    if (!table) {
      // `count dim` header: two integers and nothing else.
      if (vec.size() == 1 && word.find_first_not_of("0123456789") == std::string::npos &&
          vec[0] == std::floor(vec[0]) && vec[0] >= 1) {
        table.emplace(static_cast<std::size_t>(vec[0]));
        continue;
      }
      if (vec.empty()) throw ParseError("word without components", lineno);
      table.emplace(vec.size());
    }
    if (vec.size() != table->dim())
      throw DimensionMismatch("expected " + std::to_string(table->dim()) + " components, got " +
                                  std::to_string(vec.size()),
                              lineno);
    table->insert(unicode::normalize(word), std::move(vec));
  }
  if (!table) throw ParseError("empty word-vector file");
  return std::move(*table);
}

inline WordVectorTable load_word_vectors(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return parse_word_vectors(in);
}

/// Mean of the content-word vectors found in the table; if none, mean over
/// every in-table token; otherwise the zero vector.
inline SentenceVector sentence_vector(const Sentence& s, const WordVectorTable& table) {
  auto mean_of = [&](bool content_only) -> std::optional<SentenceVector> {
    std::vector<double> acc(table.dim(), 0.0);
    std::size_t found = 0;
    for (const auto& t : s.tokens) {
      if (content_only && !t.is_content()) continue;
      if (const auto* v = table.find(t.normalized)) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += (*v)[i];
        ++found;
      }
    }
    if (found == 0) return std::nullopt;
    for (auto& x : acc) x /= static_cast<double>(found);
    return SentenceVector(std::move(acc));
  };
  if (auto v = mean_of(true)) return *v;
  if (auto v = mean_of(false)) return *v;
  return SentenceVector::zero(table.dim());
}

/// Cosine similarity; 0 when either side is the zero vector.
inline double cosine_similarity(const SentenceVector& a, const SentenceVector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("cosine of vectors with dims " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  double dot = 0.0, na = 0.0, nb = 0.0;
  const auto x = a.values();
  const auto y = b.values();
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x[i] * y[i];
    na += x[i] * x[i];
    nb += y[i] * y[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double c = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(c, -1.0, 1.0);
}

/// Term-count vectors over the document's content vocabulary, in first-occurrence order.
inline std::vector<SentenceVector> tf_sentence_vectors(const Document& d) {
  std::unordered_map<std::string, std::size_t> vocab;
  for (const auto& s : d.sentences) {
    for (const auto& t : s.tokens) {
      if (t.is_content()) vocab.try_emplace(t.normalized, vocab.size());
    }
  }
  std::vector<SentenceVector> out;
  out.reserve(d.size());
  for (const auto& s : d.sentences) {
    std::vector<double> v(vocab.size(), 0.0);
    for (const auto& t : s.tokens) {
      if (t.is_content()) v[vocab.at(t.normalized)] += 1.0;
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

inline std::vector<SentenceVector> table_sentence_vectors(const Document& d,
                                                          const WordVectorTable& table) {
  std::vector<SentenceVector> out;
  out.reserve(d.size());
  for (const auto& s : d.sentences) out.push_back(sentence_vector(s, table));
  return out;
}

}  // namespace bensumm
