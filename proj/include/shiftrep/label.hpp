#ifndef SHIFTREP_LABEL_HPP_
#define SHIFTREP_LABEL_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shiftrep/error.hpp"

namespace shiftrep {

enum class LabelKind {
  kIndex,    // plain integer vertex, e.g. K_n and decoded graph6
  kTuple,    // integer tuple such as (1,3,4); shift-family vertices
  kSymbols,  // word over {1..n}; de Bruijn vertices
  kName,     // free-form name (word letters, composite labels)
};

// A vertex label. Labels compare first by kind, then numerically by their
// integer entries, then by name; this is the canonical vertex order.
class VertexLabel {
 public:
  VertexLabel() = default;

  static VertexLabel index(int i) { return VertexLabel(LabelKind::kIndex, {i}, {}); }

  static VertexLabel tuple(std::vector<int> entries) {
    return VertexLabel(LabelKind::kTuple, std::move(entries), {});
  }

  static VertexLabel symbols(std::vector<int> syms) {
    return VertexLabel(LabelKind::kSymbols, std::move(syms), {});
  }

  static VertexLabel name(std::string text) {
    return VertexLabel(LabelKind::kName, {}, std::move(text));
  }

  [[nodiscard]] LabelKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }
  [[nodiscard]] const std::string& text() const noexcept { return name_; }

  [[nodiscard]] int as_index() const {
    if (kind_ != LabelKind::kIndex) {
      throw ParameterError("label " + to_string() + " is not an integer index");
    }
    return values_.front();
  }

  // Tuples render as "(1,2,3)"; symbol words as digit runs, switching to a
  // comma-separated form when any symbol exceeds 9.
  [[nodiscard]] std::string to_string() const {
    switch (kind_) {
      case LabelKind::kIndex:
        return std::to_string(values_.front());
      case LabelKind::kTuple: {
        std::string out = "(";
        for (std::size_t i = 0; i < values_.size(); ++i) {
          if (i > 0) out += ',';
          out += std::to_string(values_[i]);
        }
        return out + ")";
      }
      case LabelKind::kSymbols: {
        bool wide = false;
        for (int s : values_) wide = wide || s > 9 || s < 0;
        std::string out;
        for (std::size_t i = 0; i < values_.size(); ++i) {
          if (wide && i > 0) out += ',';
          out += std::to_string(values_[i]);
        }
        return out;
      }
      case LabelKind::kName:
        return name_;
    }
    return {};
  }

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
  friend std::strong_ordering operator<=>(const VertexLabel&,
                                          const VertexLabel&) = default;

  friend std::ostream& operator<<(std::ostream& os, const VertexLabel& l) {
    return os << l.to_string();
  }

 private:
  VertexLabel(LabelKind kind, std::vector<int> values, std::string name)
      : kind_(kind), values_(std::move(values)), name_(std::move(name)) {}

  LabelKind kind_ = LabelKind::kIndex;
  std::vector<int> values_{0};
  std::string name_;
};

// Parses the textual form produced by to_string(). Text in parentheses is a
// tuple, a run of digits (optionally comma separated) is a symbol word, and
// anything else is a name. Bare integers are never produced here: integer
// labels travel as JSON numbers.
inline VertexLabel parse_label_text(std::string_view text) {
  auto parse_ints = [&](std::string_view body, bool comma_separated) {
    std::vector<int> out;
    if (!comma_separated) {
      for (char c : body) out.push_back(c - '0');
      return out;
    }
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t end = body.find(',', start);
      if (end == std::string_view::npos) end = body.size();
      std::string_view piece = body.substr(start, end - start);
      if (piece.empty()) {
        throw ParseError("empty entry in label '" + std::string(text) + "'",
                         start);
      }
      int value = 0;
      for (char c : piece) {
        if (c < '0' || c > '9') {
          throw ParseError("bad digit in label '" + std::string(text) + "'",
                           start);
        }
        value = value * 10 + (c - '0');
      }
      out.push_back(value);
      start = end + 1;
    }
    return out;
  };

  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    return VertexLabel::tuple(parse_ints(text.substr(1, text.size() - 2), true));
  }
  bool digits_only = !text.empty();
  bool has_comma = false;
  for (char c : text) {
    if (c == ',') {
      has_comma = true;
    } else if (c < '0' || c > '9') {
      digits_only = false;
    }
  }
  if (digits_only && text.front() != ',' && text.back() != ',') {
    return VertexLabel::symbols(parse_ints(text, has_comma));
  }
  return VertexLabel::name(std::string(text));
}

}  // namespace shiftrep

template <>
struct std::hash<shiftrep::VertexLabel> {
  std::size_t operator()(const shiftrep::VertexLabel& l) const noexcept {
    std::size_t h = static_cast<std::size_t>(l.kind());
    for (int v : l.values()) h = h * 1000003u ^ std::hash<int>{}(v);
    return h ^ (std::hash<std::string>{}(l.text()) << 1);
  }
};

#endif  // SHIFTREP_LABEL_HPP_
