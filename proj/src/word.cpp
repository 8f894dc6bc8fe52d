#include "bcx/word.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

}  // namespace

bool BooleanElement::contains(Vertex v) const noexcept {
  return std::find(word_.begin(), word_.end(), v) != word_.end();
}

std::size_t BooleanElementHash::operator()(const BooleanElement& e) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Vertex v : e.word()) {
    h ^= v + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

BooleanElement normalize(std::span<const Vertex> word, const Graph& g) {
  std::vector<std::size_t> remaining;
  remaining.reserve(word.size());
  std::uint64_t seen = 0;
  for (Vertex v : word) {
    const std::size_t i = g.index_of(v);
    if (seen & bit(i)) {
      throw InvalidInput("repeated letter " + std::to_string(v) + " in word");
    }
    seen |= bit(i);
    remaining.push_back(i);
  }

  Word out;
  out.reserve(word.size());
  while (!remaining.empty()) {
    std::uint64_t ahead = 0;
    std::size_t best_pos = remaining.size();
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      const std::size_t c = remaining[pos];
      if ((g.neighbors(c) & ahead) == 0 &&
          (best_pos == remaining.size() || c < remaining[best_pos])) {
        best_pos = pos;
      }
      ahead |= bit(c);
    }
    out.push_back(g.label(remaining[best_pos]));
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_pos));
  }
  return BooleanElement(std::move(out));
}

TraceOrder::TraceOrder(const BooleanElement& el, const Graph& g)
    : letters_(el.word()), after_(el.length(), 0) {
  const std::size_t k = letters_.size();
  for (std::size_t i = k; i-- > 0;) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.has_edge(letters_[i], letters_[j])) after_[i] |= bit(j) | after_[j];
    }
  }
}

std::size_t TraceOrder::position(Vertex v) const {
  auto it = std::find(letters_.begin(), letters_.end(), v);
  if (it == letters_.end()) {
    throw UnknownVertex("letter " + std::to_string(v) + " not in element");
  }
  return static_cast<std::size_t>(it - letters_.begin());
}

bool TraceOrder::precedes(Vertex a, Vertex b) const {
  return (after_[position(a)] & bit(position(b))) != 0;
}

std::vector<Vertex> TraceOrder::successors(Vertex v) const {
  std::vector<Vertex> out;
  for (std::uint64_t m = after_[position(v)]; m; m &= m - 1) {
    out.push_back(letters_[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return out;
}

std::vector<Vertex> TraceOrder::predecessors(Vertex v) const {
  const std::size_t p = position(v);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < p; ++i) {
    if (after_[i] & bit(p)) out.push_back(letters_[i]);
  }
  return out;
}

bool TraceOrder::is_maximal(Vertex v) const { return after_[position(v)] == 0; }

TraceOrder trace_order(const BooleanElement& el, const Graph& g) { return TraceOrder(el, g); }

bool in_b_e(const BooleanElement& el, EdgeRef e, const Graph& g) {
  if (!g.has_edge(e.s, e.t)) {
    throw InvalidEdge("not an edge: {" + std::to_string(e.s) + "," + std::to_string(e.t) + "}");
  }
  if (!el.contains(e.s) || !el.contains(e.t)) return false;
  const TraceOrder order(el, g);
  if (!order.precedes(e.s, e.t)) return false;
  for (Vertex u : order.successors(e.s)) {
    if (u != e.t && order.precedes(u, e.t)) return false;
  }
  return true;
}

BooleanElement delete_letter(const BooleanElement& el, Vertex v, const Graph& g) {
  Word w;
  w.reserve(el.length());
  for (Vertex x : el.word()) {
    if (x != v) w.push_back(x);
  }
  if (w.size() == el.length()) {
    throw UnknownVertex("letter " + std::to_string(v) + " not in element");
  }
  return normalize(w, g);
}

BooleanElement append_letter(const BooleanElement& el, Vertex v, const Graph& g) {
  Word w = el.word();
  w.push_back(v);
  return normalize(w, g);
}

bool is_cover(const BooleanElement& face, const BooleanElement& cell, const Graph& g) {
  if (face.length() + 1 != cell.length()) return false;
  for (Vertex v : cell.word()) {
    if (!face.contains(v)) return delete_letter(cell, v, g) == face;
  }
  return false;
}

bool uses_hyphens(const Graph& g) { return !g.empty() && g.vertices().back() >= 10; }

std::string format_word(const Word& w, bool hyphenate) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (hyphenate && i > 0) out += '-';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string format_element(const BooleanElement& el, const Graph& g) {
  return format_word(el.word(), uses_hyphens(g));
}

Word parse_word(std::string_view text, bool hyphenate) {
  Word out;
  if (text.empty()) return out;
  if (!hyphenate) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("bad letter '" + std::string(1, c) + "' in word");
      out.push_back(static_cast<Vertex>(c - '0'));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto dash = text.find('-', start);
    const auto piece = text.substr(start, dash == std::string_view::npos ? dash : dash - start);
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw ParseError("bad word '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }
  return out;
}

BooleanElement parse_element(std::string_view text, const Graph& g) {
  return normalize(parse_word(text, uses_hyphens(g)), g);
}

}  // namespace bcx
