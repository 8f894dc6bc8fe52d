#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bcx/family.hpp"
#include "bcx/graph.hpp"
#include "bcx/ideal.hpp"

namespace bcx {

enum class BetaMethod { Recursion, Euler, SubsetFormula, Homology, Morse };

std::string_view to_string(BetaMethod m);
/// Accepts "recursion", "euler", "subset", "subset_formula", "homology", "morse".
BetaMethod parse_beta_method(std::string_view name);

/// The number of top-dimensional spheres in the wedge, as found by one method.
struct BetaResult {
  std::uint64_t value = 0;
  BetaMethod method = BetaMethod::Recursion;
  /// Recursive evaluations performed (recursion method only).
  std::uint64_t calls = 0;
};

/// Deletion / simple contraction / extraction recursion, with isolated-vertex,
/// component-product and A2 shortcuts, memoised on canonical keys.
/// Throws InvalidInput for the empty graph.
BetaResult beta_recursive(const Graph& g);

/// (-1)^{n-1} (chi - 1) from the enumerated ideal.
BetaResult beta_euler(const Graph& g, std::size_t budget = kIdealBudget);
BetaResult beta_euler(const BooleanIdeal& ideal);

inline constexpr std::size_t kSubsetFormulaMaxEdges = 24;

/// Signed sum over vertex-covering edge subsets B of (-1)^{|G|+|B|-kappa(B)}.
/// Throws BudgetExceeded above kSubsetFormulaMaxEdges edges.
BetaResult beta_subset_formula(const Graph& g);

/// beta(K_n) = (n-1)(beta(K_{n-1}) + beta(K_{n-2})), beta(K_1) = 0, beta(K_2) = 1.
std::uint64_t beta_complete(unsigned n);

/// Fibonacci numbers with f(0) = 0, f(1) = f(2) = 1.
std::uint64_t fibonacci(unsigned n);
/// c(1) = 1, c(n) = c(n-1) + f(n) + f(n-2).
std::uint64_t affine_cycle_count(unsigned n);
/// Lucas numbers, L(0) = 2, L(1) = 1.
std::uint64_t lucas(unsigned n);

/// Closed-form value from the finite/affine homotopy table, or from the
/// complete/star/edgeless corollaries. Path and cycle use the A and affine A
/// rows. Throws InvalidInput for an invalid spec.
std::uint64_t beta_family(const FamilySpec& spec);

/// Number of edge subsets covering every vertex of a tree, by dynamic
/// programming over the rooted tree. Throws InvalidInput if not a tree.
std::uint64_t spanning_forest_count(const Graph& tree);

}  // namespace bcx
