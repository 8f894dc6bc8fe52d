// Canonical keys for small graphs: colour refinement fixes the order of the
// colour classes, then a branch-and-bound search picks the lexicographically
// smallest lower-triangle adjacency string among orderings that respect it.

#include <algorithm>
#include <bit>
#include <map>

#include "bcx/errors.hpp"
#include "bcx/graph.hpp"

namespace bcx {

namespace {

VertexMask bit(std::size_t i) { return VertexMask{1} << i; }

std::vector<std::size_t> refine_colors(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> color(n);
  for (std::size_t i = 0; i < n; ++i) {
    color[i] = static_cast<std::size_t>(std::popcount(g.neighbors(i)));
  }
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Signature> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig[i].first = color[i];
      for (VertexMask m = g.neighbors(i); m; m &= m - 1) {
        sig[i].second.push_back(color[static_cast<std::size_t>(std::countr_zero(m))]);
      }
      std::sort(sig[i].second.begin(), sig[i].second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < n; ++i) {
      color[i] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

class Search {
 public:
  Search(const Graph& g, std::vector<std::size_t> color)
      : g_(g), color_(std::move(color)), n_(g.size()) {
    slot_color_ = color_;
    std::sort(slot_color_.begin(), slot_color_.end());
    order_.resize(n_);
    rows_.resize(n_);
  }

  std::vector<VertexMask> run() {
    descend(0, 0);
    return best_;
  }

 private:
  // Row i holds adjacency of slot i to slots 0..i-1, bit j for slot j.
  VertexMask row_for(std::size_t v, std::size_t depth) const {
    VertexMask row = 0;
    for (std::size_t j = 0; j < depth; ++j) {
      if (g_.neighbors(v) & bit(order_[j])) row |= bit(depth - 1 - j);
    }
    return row;
  }

  // u and v can be swapped by an automorphism that fixes every other vertex.
  bool twins(std::size_t u, std::size_t v) const {
    return (g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u));
  }

  // Compares the current prefix (slots 0..depth) against the best string.
  int compare_prefix(std::size_t depth) const {
    for (std::size_t i = 0; i <= depth; ++i) {
      if (rows_[i] != best_[i]) return rows_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void descend(std::size_t depth, VertexMask placed) {
    if (depth == n_) {
      if (best_.empty() || compare_prefix(n_ - 1) < 0) best_ = rows_;
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if ((placed & bit(v)) || color_[v] != slot_color_[depth]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return twins(u, v); })) {
        continue;
      }
      tried.push_back(v);
      order_[depth] = v;
      rows_[depth] = row_for(v, depth);
      if (!best_.empty() && compare_prefix(depth) > 0) continue;
      descend(depth + 1, placed | bit(v));
    }
  }

  const Graph& g_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> slot_color_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<VertexMask> rows_;
  std::vector<VertexMask> best_;
};

}  // namespace

std::string canonical_key(const Graph& g, std::size_t limit) {
  if (g.size() > limit) {
    throw BudgetExceeded("canonical key limited to " + std::to_string(limit) + " vertices");
  }
  std::string key(1, static_cast<char>(g.size()));
  if (g.empty()) return key;
  auto rows = Search(g, refine_colors(g)).run();
  std::uint8_t acc = 0;
  int filled = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      acc = static_cast<std::uint8_t>((acc << 1) | ((rows[i] >> (i - 1 - j)) & 1));
      if (++filled == 8) {
        key.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) key.push_back(static_cast<char>(acc << (8 - filled)));
  return key;
}

std::vector<Graph> isomorphism_classes(std::size_t n) {
  if (n > 6) throw BudgetExceeded("isomorphism class enumeration limited to 6 vertices");
  std::vector<Vertex> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Vertex>(i + 1);
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) slots.emplace_back(a, b);
  }
  std::map<std::string, Graph> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) edges.push_back(slots[i]);
    }
    Graph g(labels, edges);
    seen.try_emplace(canonical_key(g), std::move(g));
  }
  std::vector<Graph> out;
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return a.edge_count() < b.edge_count();
  });
  return out;
}

}  // namespace bcx
