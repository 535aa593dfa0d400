#ifndef SHIFTREP_WORDS_HPP_
#define SHIFTREP_WORDS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shiftrep/error.hpp"
#include "shiftrep/graph.hpp"

namespace shiftrep {

using Word = std::vector<VertexLabel>;

// Builds a word from single-character names, e.g. "abacbc".
inline Word word_from_chars(std::string_view letters) {
  Word w;
  for (char c : letters) w.push_back(VertexLabel::name(std::string(1, c)));
  return w;
}

inline std::set<VertexLabel> alphabet(const Word& w) { return {w.begin(), w.end()}; }

// True iff the subsequence of w restricted to {x, y} is xyxy... or yxyx...
inline bool alternates(const Word& w, const VertexLabel& x, const VertexLabel& y) {
  if (x == y) throw ParameterError("alternates: letters must differ");
  bool saw_x = false;
  bool saw_y = false;
  const VertexLabel* previous = nullptr;
  bool alternating = true;
  for (const auto& letter : w) {
    if (letter != x && letter != y) continue;
    saw_x = saw_x || letter == x;
    saw_y = saw_y || letter == y;
    if (previous != nullptr && *previous == letter) alternating = false;
    previous = &letter;
  }
  if (!saw_x) throw ParameterError("alternates: letter " + x.to_string() + " does not occur");
  if (!saw_y) throw ParameterError("alternates: letter " + y.to_string() + " does not occur");
  return alternating;
}

inline LabeledGraph graph_of_word(const Word& w) {
  const auto letters = alphabet(w);
  std::vector<VertexLabel> vertices(letters.begin(), letters.end());
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (alternates(w, vertices[i], vertices[j])) edges.emplace_back(i, j);
    }
  }
  return LabeledGraph::from_ids(std::move(vertices), edges);
}

// Every vertex must occur in w, isolated ones included.
inline bool represents(const Word& w, const LabeledGraph& g) {
  if (w.empty()) return g.size() == 0;
  const auto letters = alphabet(w);
  if (!std::equal(letters.begin(), letters.end(), g.vertices().begin(), g.vertices().end())) {
    return false;
  }
  return graph_of_word(w) == g;
}

enum class SearchStatus { kFound, kNone, kBudgetExhausted };

struct UniformWordResult {
  SearchStatus status = SearchStatus::kNone;
  Word word;
  std::uint64_t prefixes = 0;  // prefix extensions performed
};

struct UniformWordOptions {
  std::uint64_t budget = 100'000'000;
};

namespace detail {

class UniformWordSearch {
 public:
  UniformWordSearch(const LabeledGraph& g, int k, std::uint64_t budget)
      : g_(g),
        n_(g.size()),
        k_(k),
        budget_(budget),
        count_(n_, 0),
        last_(n_, -1),
        broken_(n_ * n_, 0) {}

  UniformWordResult run() {
    UniformWordResult result;
    word_.reserve(n_ * static_cast<std::size_t>(k_));
    const bool found = extend();
    result.prefixes = prefixes_;
    if (found) {
      result.status = SearchStatus::kFound;
      for (VertexId v : word_) result.word.push_back(g_.label(v));
    } else {
      result.status = exhausted_ ? SearchStatus::kBudgetExhausted : SearchStatus::kNone;
    }
    return result;
  }

 private:
  // Appends letters in increasing order; prunes a prefix as soon as an edge
  // pair stops alternating or a non-edge pair is complete and still
  // alternating.
  bool extend() {
    if (word_.size() == n_ * static_cast<std::size_t>(k_)) return true;
    const long position = static_cast<long>(word_.size());
    std::vector<VertexId> newly_broken;
    for (VertexId x = 0; x < n_; ++x) {
      if (count_[x] == k_) continue;
      if (prefixes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++prefixes_;
      newly_broken.clear();
      bool viable = true;
      for (VertexId y = 0; y < n_; ++y) {
        if (y == x || broken_[x * n_ + y]) continue;
        // x repeats within {x, y} iff x occurred after the last y.
        if (last_[x] >= 0 && last_[x] > last_[y]) {
          newly_broken.push_back(y);
          if (g_.adjacent(x, y)) viable = false;
        }
      }
      const long saved_last = last_[x];
      for (VertexId y : newly_broken) broken_[x * n_ + y] = broken_[y * n_ + x] = 1;
      ++count_[x];
      last_[x] = position;
      word_.push_back(x);
      if (viable && count_[x] == k_) {
        for (VertexId y = 0; y < n_ && viable; ++y) {
          if (y != x && count_[y] == k_ && !g_.adjacent(x, y) && !broken_[x * n_ + y]) {
            viable = false;
          }
        }
      }
      if (viable && extend()) return true;
      word_.pop_back();
      last_[x] = saved_last;
      --count_[x];
      for (VertexId y : newly_broken) broken_[x * n_ + y] = broken_[y * n_ + x] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  const LabeledGraph& g_;
  std::size_t n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t prefixes_ = 0;
  bool exhausted_ = false;
  std::vector<int> count_;
  std::vector<long> last_;
  std::vector<std::uint8_t> broken_;
  std::vector<VertexId> word_;
};

}  // namespace detail

// First k-uniform word (each letter exactly k times) in lexicographic order
// of the canonical vertex order that represents g.
inline UniformWordResult find_uniform_word(const LabeledGraph& g, int k,
                                           UniformWordOptions options = {}) {
  if (g.size() == 0) throw ParameterError("find_uniform_word: graph has no vertices");
  if (k < 1) throw ParameterError("find_uniform_word: k must be positive");
  return detail::UniformWordSearch(g, k, options.budget).run();
}

inline std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += w[i].to_string();
  }
  return out;
}

// Parses a comma-separated word whose letters are rendered labels of g.
// Commas inside parentheses belong to tuple labels; a letter that itself
// contains top-level commas (wide symbol words) is matched greedily.
inline Word parse_word(std::string_view text, const LabeledGraph& g) {
  std::vector<std::pair<std::string, std::size_t>> tokens;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view token = text.substr(start, i - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      if (token.empty()) throw ParseError("word: empty letter", start);
      tokens.emplace_back(std::string(token), start);
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }

  std::unordered_map<std::string, VertexLabel> by_text;
  for (const auto& l : g.vertices()) by_text.emplace(l.to_string(), l);
  Word w;
  for (std::size_t i = 0; i < tokens.size();) {
    bool matched = false;
    for (std::size_t j = tokens.size(); j > i && !matched; --j) {
      std::string joined = tokens[i].first;
      for (std::size_t t = i + 1; t < j; ++t) joined += "," + tokens[t].first;
      auto it = by_text.find(joined);
      if (it != by_text.end()) {
        w.push_back(it->second);
        i = j;
        matched = true;
      }
    }
    if (!matched) {
      throw ParseError("word: unknown letter '" + tokens[i].first + "'", tokens[i].second);
    }
  }
  return w;
}

}  // namespace shiftrep

#endif  // SHIFTREP_WORDS_HPP_
