#include "bcx/beta.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw BudgetExceeded("boolean number overflows 64 bits");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw BudgetExceeded("boolean number overflows 64 bits");
  return out;
}

// Prefer a leaf edge; otherwise an edge at a vertex of minimum degree, to its
// neighbour of minimum degree.
EdgeRef choose_edge(const Graph& g) {
  std::size_t best = 0;
  int best_degree = 65;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int d = std::popcount(g.neighbors(i));
    if (d > 0 && d < best_degree) {
      best = i;
      best_degree = d;
    }
  }
  std::size_t partner = 0;
  int partner_degree = 65;
  for (VertexMask m = g.neighbors(best); m; m &= m - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(m));
    const int d = std::popcount(g.neighbors(j));
    if (d < partner_degree) {
      partner = j;
      partner_degree = d;
    }
  }
  return {g.label(best), g.label(partner)};
}

class Recursion {
 public:
  std::uint64_t eval(const Graph& g) {
    ++calls_;
    if (g.empty()) return 1;
    if (g.has_isolated_vertex()) return 0;
    if (!g.is_connected()) {
      std::uint64_t product = 1;
      for (const auto& part : components(g)) {
        product = checked_mul(product, eval(part));
        if (product == 0) break;
      }
      return product;
    }
    if (g.size() == 2) return 1;

    std::string key;
    if (g.size() <= kCanonicalLimit) {
      key = canonical_key(g);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const EdgeRef e = choose_edge(g);
    std::uint64_t value = eval(delete_edge(g, e));
    value = checked_add(value, eval(contract_edge_simple(g, e)));
    value = checked_add(value, eval(extract_edge(g, e)));
    if (!key.empty()) memo_.emplace(std::move(key), value);
    return value;
  }

  std::uint64_t calls() const { return calls_; }

 private:
  std::unordered_map<std::string, std::uint64_t> memo_;
  std::uint64_t calls_ = 0;
};

}  // namespace

std::string_view to_string(BetaMethod m) {
  switch (m) {
    case BetaMethod::Recursion: return "recursion";
    case BetaMethod::Euler: return "euler";
    case BetaMethod::SubsetFormula: return "subset_formula";
    case BetaMethod::Homology: return "homology";
    case BetaMethod::Morse: return "morse";
  }
  return "?";
}

BetaMethod parse_beta_method(std::string_view name) {
  if (name == "recursion") return BetaMethod::Recursion;
  if (name == "euler") return BetaMethod::Euler;
  if (name == "subset" || name == "subset_formula") return BetaMethod::SubsetFormula;
  if (name == "homology") return BetaMethod::Homology;
  if (name == "morse") return BetaMethod::Morse;
  throw ParseError("unknown method '" + std::string(name) + "'");
}

BetaResult beta_recursive(const Graph& g) {
  if (g.empty()) throw InvalidInput("the boolean number is defined for nonempty graphs");
  Recursion rec;
  const std::uint64_t value = rec.eval(g);
  return {value, BetaMethod::Recursion, rec.calls()};
}

BetaResult beta_euler(const BooleanIdeal& ideal) {
  const std::int64_t chi = euler_characteristic(ideal);
  const std::int64_t sign = (ideal.top_rank() % 2 == 0) ? 1 : -1;
  const std::int64_t value = sign * (chi - 1);
  if (value < 0) throw CrossCheckMismatch("negative boolean number from Euler characteristic");
  return {static_cast<std::uint64_t>(value), BetaMethod::Euler, 0};
}

BetaResult beta_euler(const Graph& g, std::size_t budget) {
  return beta_euler(enumerate_ideal(g, budget));
}

BetaResult beta_subset_formula(const Graph& g) {
  if (g.empty()) throw InvalidInput("the boolean number is defined for nonempty graphs");
  const auto edges = g.edges();
  if (edges.size() > kSubsetFormulaMaxEdges) {
    throw BudgetExceeded("subset formula limited to " + std::to_string(kSubsetFormulaMaxEdges) +
                         " edges");
  }
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (auto [u, v] : edges) ends.emplace_back(g.index_of(u), g.index_of(v));

  const std::size_t n = g.size();
  const VertexMask all = g.all_mask();
  std::vector<std::size_t> parent(n);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::int64_t total = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << ends.size()); ++subset) {
    VertexMask covered = 0;
    for (std::uint64_t m = subset; m; m &= m - 1) {
      const auto& [a, b] = ends[static_cast<std::size_t>(std::countr_zero(m))];
      covered |= (VertexMask{1} << a) | (VertexMask{1} << b);
    }
    if (covered != all) continue;
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::size_t kappa = n;
    for (std::uint64_t m = subset; m; m &= m - 1) {
      const auto& [a, b] = ends[static_cast<std::size_t>(std::countr_zero(m))];
      const std::size_t ra = find(a), rb = find(b);
      if (ra != rb) {
        parent[ra] = rb;
        --kappa;
      }
    }
    const auto exponent = n + static_cast<std::size_t>(std::popcount(subset)) - kappa;
    total += (exponent % 2 == 0) ? 1 : -1;
  }
  if (total < 0) throw CrossCheckMismatch("negative boolean number from subset formula");
  return {static_cast<std::uint64_t>(total), BetaMethod::SubsetFormula, 0};
}

std::uint64_t beta_complete(unsigned n) {
  if (n < 1) throw InvalidInput("beta_complete needs n >= 1");
  std::uint64_t prev = 0, cur = 1;  // K_1, K_2
  if (n == 1) return prev;
  for (unsigned k = 3; k <= n; ++k) {
    const std::uint64_t next = checked_mul(k - 1, checked_add(cur, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

std::uint64_t fibonacci(unsigned n) {
  std::uint64_t a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t next = checked_add(a, b);
    a = b;
    b = next;
  }
  return a;
}

std::uint64_t lucas(unsigned n) {
  std::uint64_t a = 2, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t next = checked_add(a, b);
    a = b;
    b = next;
  }
  return a;
}

std::uint64_t affine_cycle_count(unsigned n) {
  if (n < 1) throw InvalidInput("c(n) needs n >= 1");
  std::uint64_t c = 1;
  for (unsigned k = 2; k <= n; ++k) c = checked_add(c, checked_add(fibonacci(k), fibonacci(k - 2)));
  return c;
}

std::uint64_t beta_family(const FamilySpec& spec) {
  validate(spec);
  const unsigned n = spec.n;
  switch (spec.family) {
    case Family::A:
    case Family::B:
    case Family::Path: return fibonacci(n - 1);
    case Family::D: return fibonacci(n - 2);
    case Family::E: return n == 6 ? 4 : n == 7 ? 6 : 10;
    case Family::F4: return 2;
    case Family::G2: return 1;
    case Family::H3: return 1;
    case Family::H4: return 2;
    case Family::I2: return 1;
    case Family::AffineA: return affine_cycle_count(n);
    case Family::AffineB: return fibonacci(n - 2);
    case Family::AffineC: return fibonacci(n - 1);
    case Family::AffineD: return fibonacci(n - 3);
    case Family::AffineE: return n == 6 ? 7 : n == 7 ? 9 : 16;
    case Family::AffineF4: return 3;
    case Family::AffineG2: return 1;
    case Family::Complete: return beta_complete(n);
    // A single vertex is isolated, so S_1 is contractible.
    case Family::Star: return n == 1 ? 0 : 1;
    case Family::Edgeless: return 0;
    case Family::Cycle: return affine_cycle_count(n - 1);
  }
  throw InvalidInput("unknown family");
}

std::uint64_t spanning_forest_count(const Graph& tree) {
  if (!tree.is_tree()) throw InvalidInput("spanning_forest_count needs a tree");
  const std::size_t n = tree.size();
  // Iterative DFS order from index 0; children are processed before parents.
  std::vector<std::size_t> order, parent(n, n);
  std::vector<std::size_t> stack{0};
  VertexMask visited = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (VertexMask m = tree.neighbors(v) & ~visited; m; m &= m - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(m));
      visited |= VertexMask{1} << c;
      parent[c] = v;
      stack.push_back(c);
    }
  }
  // uncovered[v] / covered[v]: edge subsets of v's subtree covering every
  // vertex below v, with v itself not covered / covered.
  std::vector<std::uint64_t> uncovered(n, 1), covered(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t c = *it;
    const std::size_t p = parent[c];
    if (p == n) continue;
    const std::uint64_t child_any = checked_add(uncovered[c], covered[c]);
    const std::uint64_t new_uncovered = checked_mul(uncovered[p], covered[c]);
    const std::uint64_t new_covered = checked_add(
        checked_mul(covered[p], checked_add(covered[c], child_any)),
        checked_mul(uncovered[p], child_any));
    uncovered[p] = new_uncovered;
    covered[p] = new_covered;
  }
  return covered[0];
}

}  // namespace bcx
