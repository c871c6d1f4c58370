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

// Text ingestion: sentence segmentation, tokenization, lexicon tagging and the
// on-disk formats (pre-tagged rows, tag lexicon, stopword list, JSON-lines
// corpus).

#include <array>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bensumm/error.hpp"
#include "bensumm/unicode.hpp"

namespace bensumm {

enum class Pos { NOUN, PROPN, VERB, ADJ, ADV, PRON, ADP, CONJ, PART, NUM, PUNCT, OTHER };

inline constexpr std::array<std::pair<Pos, std::string_view>, 12> kPosNames{{
    {Pos::NOUN, "NOUN"},
    {Pos::PROPN, "PROPN"},
    {Pos::VERB, "VERB"},
    {Pos::ADJ, "ADJ"},
    {Pos::ADV, "ADV"},
    {Pos::PRON, "PRON"},
    {Pos::ADP, "ADP"},
    {Pos::CONJ, "CONJ"},
    {Pos::PART, "PART"},
    {Pos::NUM, "NUM"},
    {Pos::PUNCT, "PUNCT"},
    {Pos::OTHER, "OTHER"},
}};

inline std::string_view to_string(Pos pos) {
  for (const auto& [p, name] : kPosNames) {
    if (p == pos) return name;
  }
  return "OTHER";
}

/// Unknown tag strings map to OTHER.
inline Pos parse_pos(std::string_view name) {
  for (const auto& [p, n] : kPosNames) {
    if (n == name) return p;
  }
  return Pos::OTHER;
}

struct Token {
  std::string surface;
  std::string normalized;
  Pos pos = Pos::NOUN;
  bool is_stopword = false;
  bool is_punct = false;

  /// Neither punctuation nor a stopword.
  bool is_content() const { return !is_punct && !is_stopword; }
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;
  std::string raw;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
};

struct CorpusSample {
  std::string id;
  Document document;
  Document reference_summary;
};

using StopwordSet = std::unordered_set<std::string>;

class TagLexicon {
 public:
  TagLexicon() = default;
  explicit TagLexicon(Pos default_tag) : default_tag_(default_tag) {}

  /// `word` is normalized before insertion. Later entries overwrite earlier ones.
  void add(std::string_view word, Pos pos) { tags_[unicode::normalize(word)] = pos; }

  /// Lookup by normalized form; total through the default tag.
  Pos lookup(const std::string& normalized) const {
    auto it = tags_.find(normalized);
    return it == tags_.end() ? default_tag_ : it->second;
  }

  Pos default_tag() const { return default_tag_; }
  std::size_t size() const { return tags_.size(); }

 private:
  std::unordered_map<std::string, Pos> tags_;
  Pos default_tag_ = Pos::NOUN;
};

namespace detail {

inline bool is_terminator(char32_t c) {
  return c == U'\u0964' || c == U'?' || c == U'!' || c == U'.';
}

inline bool is_line_break(char32_t c) {
  return c == U'\n' || c == U'\r' || c == U'\u0085' || c == U'\u2028' || c == U'\u2029';
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab == std::string_view::npos ? line.npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cols;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace detail

/// Splits on danda, '?', '!' and '.' (a run of terminators stays attached to
/// its sentence) and on line breaks. Throws EmptyInput when nothing remains.
inline std::vector<std::string> segment_sentences(std::string_view raw_text) {
  std::vector<std::string> out;
  const auto cps = unicode::decode(raw_text);
  std::size_t begin = 0;
  auto emit = [&](std::size_t end) {
    if (end > begin) {
      auto piece = unicode::trim(raw_text.substr(begin, end - begin));
      if (!piece.empty()) out.emplace_back(piece);
    }
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const auto& cp = cps[i];
    if (detail::is_line_break(cp.value)) {
      emit(cp.offset);
      begin = cp.offset + cp.length;
    } else if (detail::is_terminator(cp.value)) {
      std::size_t j = i;
      while (j + 1 < cps.size() && detail::is_terminator(cps[j + 1].value)) ++j;
      const std::size_t end = cps[j].offset + cps[j].length;
      emit(end);
      begin = end;
      i = j;
    }
  }
  emit(raw_text.size());
  if (out.empty()) throw EmptyInput("no sentences in input text");
  return out;
}

/// Whitespace split; every punctuation code point becomes its own token.
inline std::vector<std::string> tokenize(std::string_view raw_sentence) {
  std::vector<std::string> out;
  std::string current;
  for (const auto& cp : unicode::decode(raw_sentence)) {
    const auto bytes = raw_sentence.substr(cp.offset, cp.length);
    if (unicode::is_space(cp.value)) {
      if (!current.empty()) out.push_back(std::exchange(current, {}));
    } else if (unicode::is_punct(cp.value)) {
      if (!current.empty()) out.push_back(std::exchange(current, {}));
      out.emplace_back(bytes);
    } else {
      current.append(bytes);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

/// Canonical single-space join; tokenize(join_tokens(t)) == t for tokenizer output.
inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

/// Display form: single spaces, no space before punctuation tokens.
inline std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty() && !t.is_punct) out += ' ';
    out += t.surface;
  }
  return out;
}

inline std::vector<Token> tag_tokens(const std::vector<std::string>& surfaces,
                                     const TagLexicon& lexicon, const StopwordSet& stopwords) {
  std::vector<Token> out;
  out.reserve(surfaces.size());
  for (const auto& s : surfaces) {
    Token t;
    t.surface = s;
    t.normalized = unicode::normalize(s);
    t.pos = unicode::is_punct_string(s) ? Pos::PUNCT : lexicon.lookup(t.normalized);
    t.is_punct = t.pos == Pos::PUNCT;
    t.is_stopword = stopwords.contains(t.normalized);
    out.push_back(std::move(t));
  }
  return out;
}

/// Raw text -> tagged Document with the lexicon tagger.
class Preprocessor {
 public:
  Preprocessor() = default;
  Preprocessor(TagLexicon lexicon, StopwordSet stopwords)
      : lexicon_(std::move(lexicon)), stopwords_(std::move(stopwords)) {}

  Document document(std::string id, std::string_view raw_text) const {
    Document doc;
    doc.id = std::move(id);
    for (auto& raw : segment_sentences(raw_text)) {
      auto surfaces = tokenize(raw);
      if (surfaces.empty()) continue;
      Sentence s;
      s.index = doc.sentences.size();
      s.tokens = tag_tokens(surfaces, lexicon_, stopwords_);
      s.raw = std::move(raw);
      doc.sentences.push_back(std::move(s));
    }
    if (doc.sentences.empty()) throw EmptyInput("no tokens in input text");
    return doc;
  }

  const TagLexicon& lexicon() const { return lexicon_; }
  const StopwordSet& stopwords() const { return stopwords_; }

 private:
  TagLexicon lexicon_;
  StopwordSet stopwords_;
};

/// `word<TAB>POS` rows; blank and `#` lines skipped.
inline TagLexicon parse_tag_lexicon(std::istream& in) {
  TagLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto row = detail::strip_cr(line);
    if (unicode::trim(row).empty() || row.front() == '#') continue;
    const auto cols = detail::split_tabs(row);
    if (cols.size() != 2 || cols[0].empty())
      throw ParseError("expected word<TAB>POS", lineno);
    lex.add(cols[0], parse_pos(unicode::trim(cols[1])));
  }
  return lex;
}

inline TagLexicon load_tag_lexicon(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return parse_tag_lexicon(in);
}

inline StopwordSet parse_stopwords(std::istream& in) {
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    const auto w = unicode::trim(line);
    if (!w.empty()) words.insert(unicode::normalize(w));
  }
  return words;
}

inline StopwordSet load_stopwords(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return parse_stopwords(in);
}

/// `surface<TAB>POS` rows, blank line between sentences, `#` comments.
/// Tags are used verbatim; stopword flags come from `stopwords`.
inline Document parse_pretagged(std::istream& in, std::string id = {},
                                const StopwordSet& stopwords = {}) {
  Document doc;
  doc.id = std::move(id);
  std::vector<Token> current;
  auto flush = [&] {
    if (current.empty()) return;
    Sentence s;
    s.index = doc.sentences.size();
    s.tokens = std::move(current);
    current.clear();
    std::vector<std::string> surfaces;
    for (const auto& t : s.tokens) surfaces.push_back(t.surface);
    s.raw = join_tokens(surfaces);
    doc.sentences.push_back(std::move(s));
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto row = detail::strip_cr(line);
    if (unicode::trim(row).empty()) {
      flush();
      continue;
    }
    if (row.front() == '#') continue;
    const auto cols = detail::split_tabs(row);
    if (cols.size() != 2) throw ParseError("expected surface<TAB>POS", lineno);
    const auto surface = unicode::trim(cols[0]);
    if (surface.empty()) throw ParseError("empty surface", lineno);
    Token t;
    t.surface = std::string(surface);
    t.normalized = unicode::normalize(surface);
    t.pos = parse_pos(unicode::trim(cols[1]));
    t.is_punct = t.pos == Pos::PUNCT;
    t.is_stopword = stopwords.contains(t.normalized);
    current.push_back(std::move(t));
  }
  flush();
  if (doc.sentences.empty()) throw EmptyInput("pre-tagged input has no sentences");
  return doc;
}

inline Document load_pretagged(const std::filesystem::path& path,
                               const StopwordSet& stopwords = {}) {
  auto in = detail::open_input(path);
  return parse_pretagged(in, path.stem().string(), stopwords);
}

/// JSON-lines corpus: one {"id","document","summary"} object per line.
inline std::vector<CorpusSample> parse_corpus(std::istream& in, const Preprocessor& pre) {
  std::vector<CorpusSample> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (unicode::trim(line).empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), lineno);
    }
    if (!rec.is_object()) throw ParseError("record is not an object", lineno);
    for (const char* field : {"id", "document", "summary"}) {
      if (!rec.contains(field) || !rec[field].is_string())
        throw ParseError(std::string("missing string field \"") + field + "\"", lineno);
    }
    CorpusSample sample;
    sample.id = rec["id"].get<std::string>();
    try {
      sample.document = pre.document(sample.id, rec["document"].get<std::string>());
      sample.reference_summary = pre.document(sample.id, rec["summary"].get<std::string>());
    } catch (const EmptyInput& e) {
      throw ParseError(e.what(), lineno);
    }
    out.push_back(std::move(sample));
  }
  if (out.empty()) throw EmptyCorpus("corpus has no records");
  return out;
}

inline std::vector<CorpusSample> load_corpus(const std::filesystem::path& path,
                                             const Preprocessor& pre) {
  auto in = detail::open_input(path);
  return parse_corpus(in, pre);
}

}  // namespace bensumm
