#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bcx/graph.hpp"
#include "bcx/ideal.hpp"
#include "bcx/word.hpp"

namespace bcx {

struct MatchedPair {
  BooleanElement lower;
  BooleanElement upper;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

/// A partial pairing of cover relations of B(G). The empty element is never
/// matched. `unmatched_rank0` / `unmatched_maximal` are what the builder
/// reports; the verifiers recompute them from `pairs`.
struct Matching {
  Graph graph;
  Vertex at_vertex = 0;
  std::vector<MatchedPair> pairs;
  std::optional<BooleanElement> unmatched_rank0;
  std::vector<BooleanElement> unmatched_maximal;
};

/// The edge operations behind the inductive step for an edge e = (s, t):
/// B(G) splits into the elements that can be written alpha s t gamma and the
/// rest. H = G - e and F = G / e, with x = min(s, t) standing for the edge.
namespace edge_split {

/// pi: B(G) -> B(H), renormalising in the coarser commutation relation.
BooleanElement project(const BooleanElement& el, const Graph& h);

/// Inverse of pi restricted to the complement of B(G)_e. Throws
/// InvalidMatching unless exactly one preimage lies outside B(G)_e.
BooleanElement lift(const BooleanElement& el, const Graph& g, EdgeRef e);

/// phi(alpha s t gamma) = alpha x gamma, from B(G)_e to B(F)_x.
BooleanElement phi(const BooleanElement& el, const Graph& g, EdgeRef e, const Graph& f);

/// phi^{-1}(alpha x gamma) = alpha s t gamma.
BooleanElement phi_inverse(const BooleanElement& el, const Graph& g, EdgeRef e);

}  // namespace edge_split

/// The recursive H-matching at a vertex, evaluated one element at a time.
/// Each node corresponds to one step of the induction (edgeless base case,
/// the A2 example, splitting along an edge at s, or s isolated) and owns the
/// nodes for the smaller graphs it is built from.
class HMatching {
 public:
  /// Throws InvalidInput for the empty graph, UnknownVertex if s is absent.
  HMatching(Graph g, Vertex s);
  ~HMatching();
  HMatching(HMatching&&) noexcept;
  HMatching& operator=(HMatching&&) noexcept;

  const Graph& graph() const noexcept;
  Vertex at_vertex() const noexcept;

  /// Partner of a (canonical) element of B(G), or nullopt if unmatched.
  std::optional<BooleanElement> partner(const BooleanElement& el) const;
  /// The unique unmatched rank-0 element.
  Vertex unmatched_rank0() const;
  /// Number of recursion nodes instantiated so far. Nodes are created on
  /// first use and shared between identical (graph, vertex) pairs.
  std::size_t node_count() const;

 private:
  struct Node;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Builds the full matching on B(G) at s. Every pulled-back pair is checked
/// to be a cover and partners are checked to be mutual. Throws
/// InvalidInput, UnknownVertex, BudgetExceeded, InvalidMatching.
Matching build_h_matching(const Graph& g, Vertex s, std::size_t budget = kIdealBudget);
Matching build_h_matching(const BooleanIdeal& ideal, Vertex s);

/// True iff reversing the matched covers leaves the Hasse diagram without a
/// directed cycle. Cycles can only live in two adjacent ranks, so each rank
/// pair is searched separately. Throws InvalidMatching if a pair is not a
/// cover of the ideal or an element is matched twice.
bool verify_acyclic(const Matching& m, const BooleanIdeal& ideal);

struct HReport {
  bool h1 = false;
  bool h2 = false;
  bool h2_checked = false;  // false when G \ s is empty
  bool h3 = false;
  std::vector<std::string> counterexamples;

  bool ok() const { return h1 && h2 && h3; }
};

/// Checks the three H-matching properties at m.at_vertex:
/// h1: unmatched cells are one rank-0 element and maximal elements only;
/// h2: within elements containing s, exactly beta(G) + beta(G \ s) cells
///      are unmatched and all are maximal;
/// h3: for every pair with s in the upper cell, the upper cell is the lower
///      one followed by s, or the deleted letter can be written left of s.
HReport verify_h_properties(const Matching& m, const BooleanIdeal& ideal);

/// Per-rank data for the skeleta of the complex.
struct SkeletonReport {
  std::vector<std::uint64_t> f;          // cells of rank r
  std::vector<std::uint64_t> spheres;    // r-spheres of the r-skeleton, top down from beta
  std::vector<std::uint64_t> restricted; // unmatched rank-r cells of the restriction to the r-skeleton, excluding the base point
};

/// Sphere counts of every skeleton. `spheres` uses u_top = beta and
/// u_r = f_{r+1} - u_{r+1}; `restricted` counts, for the r-skeleton, the
/// rank-r cells left unmatched once every cell above rank r is dropped.
SkeletonReport skeleton_sphere_counts(const Graph& g, const Matching& m,
                                      std::size_t budget = kIdealBudget);

}  // namespace bcx
