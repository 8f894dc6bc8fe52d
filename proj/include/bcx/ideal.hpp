#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bcx/graph.hpp"
#include "bcx/word.hpp"

namespace bcx {

/// Default cap on the total number of stored elements.
inline constexpr std::size_t kIdealBudget = 2'000'000;

/// The boolean ideal of a graph as a ranked poset: every nonempty
/// commutation class, grouped by rank and sorted by canonical word, with
/// each element's facets. Immutable after enumeration.
class BooleanIdeal {
 public:
  const Graph& graph() const noexcept { return graph_; }

  /// Highest rank, |G| - 1.
  int top_rank() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
  std::span<const BooleanElement> rank(int r) const { return ranks_.at(static_cast<std::size_t>(r)); }
  std::size_t rank_size(int r) const { return rank(r).size(); }
  std::size_t size() const noexcept;

  /// Position of an element within its rank.
  std::optional<std::size_t> index_of(const BooleanElement& el) const;
  bool contains(const BooleanElement& el) const { return index_of(el).has_value(); }

  /// Indices (into rank r-1) of the facets of element i of rank r >= 1,
  /// in the order of the deleted letter's position in the canonical word.
  std::span<const std::size_t> faces(int r, std::size_t i) const;

 private:
  friend BooleanIdeal enumerate_ideal(const Graph& g, std::size_t budget);

  Graph graph_;
  std::vector<std::vector<BooleanElement>> ranks_;
  std::vector<std::unordered_map<BooleanElement, std::size_t, BooleanElementHash>> index_;
  std::vector<std::vector<std::size_t>> faces_;  // flat, (r, i) -> faces_[r][i*(r+1) ...]
};

/// Throws InvalidInput for the empty graph, BudgetExceeded past `budget`.
BooleanIdeal enumerate_ideal(const Graph& g, std::size_t budget = kIdealBudget);

/// (f_0, ..., f_{|G|-1}).
std::vector<std::uint64_t> rank_sizes(const Graph& g, std::size_t budget = kIdealBudget);
std::vector<std::uint64_t> rank_sizes(const BooleanIdeal& ideal);

std::int64_t euler_characteristic(const Graph& g, std::size_t budget = kIdealBudget);
std::int64_t euler_characteristic(const BooleanIdeal& ideal);

/// Number of boolean elements of length k in type A_n:
/// sum_{i=1..k} C(n+1-i, k+1-i) C(k-1, i-1), and 1 for k = 0.
/// Throws InvalidInput unless n >= 1 and 0 <= k <= n.
std::uint64_t count_rank_path(unsigned n, unsigned k);

}  // namespace bcx
