#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bcx/gf2.hpp"
#include "bcx/graph.hpp"
#include "bcx/ideal.hpp"
#include "bcx/word.hpp"

namespace bcx {

/// Default vertex cap for dense Betti computations.
inline constexpr std::size_t kHomologyMaxVertices = 7;

/// Boundary from rank-k cells (columns, canonical order) to rank-(k-1) cells
/// (rows). k = 0 is the augmentation to the single rank -1 cell.
/// Throws InvalidInput for k outside 0..top.
Gf2Matrix boundary_matrix(const BooleanIdeal& ideal, int k);

/// All boundary maps of the augmented complex.
class Gf2ChainComplex {
 public:
  explicit Gf2ChainComplex(const BooleanIdeal& ideal);

  const BooleanIdeal& ideal() const noexcept { return *ideal_; }
  int top() const noexcept { return ideal_->top_rank(); }
  /// k in 0..top.
  const Gf2Matrix& boundary(int k) const;
  /// d_{k-1} d_k = 0 for every k.
  bool squares_to_zero() const;

 private:
  const BooleanIdeal* ideal_;
  std::vector<Gf2Matrix> boundary_;
};

/// A GF(2) chain: a set of cells of one rank.
struct Gf2Chain {
  int dimension = 0;
  std::vector<BooleanElement> support;  // sorted, no repeats

  friend bool operator==(const Gf2Chain&, const Gf2Chain&) = default;
};

/// Sum of chains over GF(2). Throws InvalidInput on a dimension mismatch.
Gf2Chain add(const Gf2Chain& a, const Gf2Chain& b);

/// The boundary chain; for dimension 0 it is empty iff the support has even
/// size (reduced convention), and is returned with dimension -1.
/// Throws InvalidInput if a support cell is not an element over g.
Gf2Chain boundary(const Gf2Chain& c, const Graph& g);

/// True iff the boundary vanishes.
bool verify_cycle(const Graph& g, const Gf2Chain& c);

/// Reduced Betti numbers (b_0, ..., b_top) over GF(2).
/// Throws BudgetExceeded when |G| > max_vertices or the ideal is too large.
std::vector<std::uint64_t> betti_gf2(const Graph& g, std::size_t max_vertices = kHomologyMaxVertices,
                                     std::size_t budget = kIdealBudget);
std::vector<std::uint64_t> betti_gf2(const BooleanIdeal& ideal);

/// Kernel of the top boundary map in reduced row-echelon form under the
/// canonical cell order.
std::vector<Gf2Chain> top_cycle_basis(const Graph& g, std::size_t max_vertices = kHomologyMaxVertices,
                                      std::size_t budget = kIdealBudget);
std::vector<Gf2Chain> top_cycle_basis(const BooleanIdeal& ideal);

/// Coordinates of a chain of top dimension in the cells of that rank.
std::vector<std::uint64_t> chain_vector(const BooleanIdeal& ideal, const Gf2Chain& c);

/// Whether the chains are linearly independent over GF(2).
bool linearly_independent(const BooleanIdeal& ideal, const std::vector<Gf2Chain>& chains);

/// Parses "[12] + [21]" or "y0 + y1" style sums; names refer to `named`.
/// Cells are read with the serialization of `g`. Throws ParseError.
Gf2Chain parse_chain(std::string_view text, const Graph& g,
                     const std::map<std::string, Gf2Chain>& named = {});

std::string format_chain(const Gf2Chain& c, const Graph& g);

/// Generator fixtures for the paths A_n. File format, per block:
///   n <N>
///   <name> := <chain>
///   generator: <chain>
/// Blank lines and '#' comments are ignored; names are local to a block.
struct AnFixture {
  unsigned n = 0;
  std::vector<Gf2Chain> generators;
};
std::vector<AnFixture> parse_an_fixtures(std::string_view text);

struct AnFixtureResult {
  unsigned n = 0;
  std::size_t generators = 0;
  bool all_cycles = false;
  bool independent = false;
  bool count_matches = false;  // generators == f(n-1) == top Betti number
  bool top_cells_covered = false;
  std::vector<std::string> failures;

  bool ok() const { return all_cycles && independent && count_matches && top_cells_covered; }
};

std::vector<AnFixtureResult> an_fixture_suite(std::string_view text);

}  // namespace bcx
