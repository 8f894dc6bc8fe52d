#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcx/graph.hpp"

namespace bcx {

using Word = std::vector<Vertex>;

/// A commutation class of repetition-free words over the vertices of a
/// graph, held by its lexicographically least representative. The empty
/// class (rank -1) is representable but is never stored as a cell.
class BooleanElement {
 public:
  BooleanElement() = default;

  const Word& word() const noexcept { return word_; }
  int rank() const noexcept { return static_cast<int>(word_.size()) - 1; }
  std::size_t length() const noexcept { return word_.size(); }
  bool contains(Vertex v) const noexcept;

  friend auto operator<=>(const BooleanElement&, const BooleanElement&) = default;
  friend bool operator==(const BooleanElement&, const BooleanElement&) = default;

 private:
  explicit BooleanElement(Word canonical) : word_(std::move(canonical)) {}
  Word word_;

  friend BooleanElement normalize(std::span<const Vertex> word, const Graph& g);
};

struct BooleanElementHash {
  std::size_t operator()(const BooleanElement& e) const noexcept;
};

/// Trace normal form: repeatedly emit the smallest letter that commutes with
/// every letter still ahead of it. Throws InvalidInput on a repeated letter
/// and UnknownVertex on a letter outside the graph.
BooleanElement normalize(std::span<const Vertex> word, const Graph& g);
inline BooleanElement normalize(std::initializer_list<Vertex> word, const Graph& g) {
  return normalize(std::span<const Vertex>(word.begin(), word.size()), g);
}

/// Partial order on the letters of an element: a precedes b when every
/// representative has a before b. It is the transitive closure of "earlier
/// and adjacent in G" and does not depend on the representative.
class TraceOrder {
 public:
  TraceOrder(const BooleanElement& el, const Graph& g);

  const Word& letters() const noexcept { return letters_; }
  bool precedes(Vertex a, Vertex b) const;
  /// Letters strictly after / before `v` in the order.
  std::vector<Vertex> successors(Vertex v) const;
  std::vector<Vertex> predecessors(Vertex v) const;
  bool is_maximal(Vertex v) const;

 private:
  std::size_t position(Vertex v) const;
  Word letters_;
  std::vector<std::uint64_t> after_;  // bit j of after_[i]: letter i precedes letter j
};

TraceOrder trace_order(const BooleanElement& el, const Graph& g);

/// Membership in the subset written as (alpha s t gamma): s and t both
/// occur, s precedes t, and nothing lies strictly between them.
/// `e` is read as the ordered pair (s, t). Throws InvalidEdge.
bool in_b_e(const BooleanElement& el, EdgeRef e, const Graph& g);

/// The facet obtained by deleting one letter.
BooleanElement delete_letter(const BooleanElement& el, Vertex v, const Graph& g);

/// The element of the word `el` followed by `v`.
BooleanElement append_letter(const BooleanElement& el, Vertex v, const Graph& g);

/// Whether `face` is obtained from `cell` by deleting one letter.
bool is_cover(const BooleanElement& face, const BooleanElement& cell, const Graph& g);

/// Words print as plain digit strings, or hyphen-joined when `hyphenate`.
std::string format_word(const Word& w, bool hyphenate);
std::string format_element(const BooleanElement& el, const Graph& g);
/// Hyphenated iff some label of the graph is >= 10.
bool uses_hyphens(const Graph& g);
/// Throws ParseError.
Word parse_word(std::string_view text, bool hyphenate);
BooleanElement parse_element(std::string_view text, const Graph& g);

}  // namespace bcx
