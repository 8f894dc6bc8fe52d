#include "bcx/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "bcx/errors.hpp"

namespace bcx {

std::size_t BooleanIdeal::size() const noexcept {
  return std::accumulate(ranks_.begin(), ranks_.end(), std::size_t{0},
                         [](std::size_t acc, const auto& r) { return acc + r.size(); });
}

std::optional<std::size_t> BooleanIdeal::index_of(const BooleanElement& el) const {
  const int r = el.rank();
  if (r < 0 || r > top_rank()) return std::nullopt;
  const auto& map = index_[static_cast<std::size_t>(r)];
  auto it = map.find(el);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

std::span<const std::size_t> BooleanIdeal::faces(int r, std::size_t i) const {
  if (r < 1 || r > top_rank()) throw InvalidInput("faces are defined for ranks 1..top");
  const auto width = static_cast<std::size_t>(r) + 1;
  const auto& flat = faces_[static_cast<std::size_t>(r)];
  if ((i + 1) * width > flat.size()) throw InvalidInput("element index out of range");
  return std::span<const std::size_t>(flat).subspan(i * width, width);
}

BooleanIdeal enumerate_ideal(const Graph& g, std::size_t budget) {
  if (g.empty()) throw InvalidInput("the boolean ideal of the empty graph has no cells");
  BooleanIdeal ideal;
  ideal.graph_ = g;
  const std::size_t n = g.size();
  ideal.ranks_.resize(n);
  ideal.index_.resize(n);
  ideal.faces_.resize(n);

  std::size_t total = 0;
  for (Vertex v : g.vertices()) ideal.ranks_[0].push_back(normalize({v}, g));
  total += n;

  for (std::size_t r = 1; r < n; ++r) {
    std::unordered_set<BooleanElement, BooleanElementHash> next;
    for (const auto& el : ideal.ranks_[r - 1]) {
      for (Vertex v : g.vertices()) {
        if (!el.contains(v)) next.insert(append_letter(el, v, g));
      }
      if (total + next.size() > budget) {
        throw BudgetExceeded("boolean ideal exceeds " + std::to_string(budget) + " elements");
      }
    }
    total += next.size();
    ideal.ranks_[r].assign(next.begin(), next.end());
    std::sort(ideal.ranks_[r].begin(), ideal.ranks_[r].end());
  }

  for (std::size_t r = 0; r < n; ++r) {
    auto& map = ideal.index_[r];
    map.reserve(ideal.ranks_[r].size());
    for (std::size_t i = 0; i < ideal.ranks_[r].size(); ++i) map.emplace(ideal.ranks_[r][i], i);
  }
  for (std::size_t r = 1; r < n; ++r) {
    auto& flat = ideal.faces_[r];
    flat.reserve(ideal.ranks_[r].size() * (r + 1));
    for (const auto& el : ideal.ranks_[r]) {
      for (Vertex v : el.word()) {
        flat.push_back(ideal.index_[r - 1].at(delete_letter(el, v, g)));
      }
    }
  }
  return ideal;
}

std::vector<std::uint64_t> rank_sizes(const BooleanIdeal& ideal) {
  std::vector<std::uint64_t> out;
  for (int r = 0; r <= ideal.top_rank(); ++r) out.push_back(ideal.rank_size(r));
  return out;
}

std::vector<std::uint64_t> rank_sizes(const Graph& g, std::size_t budget) {
  return rank_sizes(enumerate_ideal(g, budget));
}

std::int64_t euler_characteristic(const BooleanIdeal& ideal) {
  std::int64_t chi = 0;
  for (int r = 0; r <= ideal.top_rank(); ++r) {
    const auto f = static_cast<std::int64_t>(ideal.rank_size(r));
    chi += (r % 2 == 0) ? f : -f;
  }
  return chi;
}

std::int64_t euler_characteristic(const Graph& g, std::size_t budget) {
  return euler_characteristic(enumerate_ideal(g, budget));
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

std::uint64_t count_rank_path(unsigned n, unsigned k) {
  if (n < 1 || k > n) throw InvalidInput("count_rank_path needs n >= 1 and 0 <= k <= n");
  if (k == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned i = 1; i <= k; ++i) {
    total += binomial(n + 1 - i, k + 1 - i) * binomial(k - 1, i - 1);
  }
  return total;
}

}  // namespace bcx
