#include "bcx/crosscheck.hpp"

#include "bcx/errors.hpp"
#include "bcx/homology.hpp"
#include "bcx/morse.hpp"

namespace bcx {

CrossCheckReport cross_check(const Graph& g, const CrossCheckOptions& options) {
  if (g.empty()) throw InvalidInput("cross-check needs a nonempty graph");
  CrossCheckReport rep;
  rep.values.push_back({BetaMethod::Recursion, beta_recursive(g).value});

  if (g.edge_count() <= kSubsetFormulaMaxEdges) {
    rep.values.push_back({BetaMethod::SubsetFormula, beta_subset_formula(g).value});
  } else {
    rep.skipped.emplace_back("subset_formula");
  }

  std::optional<BooleanIdeal> ideal;
  try {
    ideal.emplace(enumerate_ideal(g, options.budget));
  } catch (const BudgetExceeded&) {
    rep.skipped.emplace_back("euler");
    rep.skipped.emplace_back("homology");
    rep.skipped.emplace_back("morse");
  }
  if (ideal) {
    rep.values.push_back({BetaMethod::Euler, beta_euler(*ideal).value});
    if (g.size() <= options.homology_max_vertices) {
      const auto betti = betti_gf2(*ideal);
      for (std::size_t k = 0; k + 1 < betti.size(); ++k) {
        if (betti[k] != 0) {
          throw CrossCheckMismatch("reduced Betti number " + std::to_string(k) + " is " +
                                   std::to_string(betti[k]) + ", not 0");
        }
      }
      rep.values.push_back({BetaMethod::Homology, betti.back()});
    } else {
      rep.skipped.emplace_back("homology");
    }
    const Matching m = build_h_matching(*ideal, g.vertices().front());
    rep.values.push_back({BetaMethod::Morse, m.unmatched_maximal.size()});
    rep.matching_acyclic = verify_acyclic(m, *ideal);
    rep.matching_h_properties = verify_h_properties(m, *ideal).ok();
    if (!*rep.matching_acyclic) throw CrossCheckMismatch("H-matching has a cycle");
    if (!*rep.matching_h_properties) throw CrossCheckMismatch("H-matching fails H1-H3");
  }

  rep.agreed_value = rep.values.front().value;
  for (const auto& mv : rep.values) {
    if (mv.value != rep.agreed_value) {
      std::string msg = "methods disagree:";
      for (const auto& x : rep.values) {
        msg += " " + std::string(to_string(x.method)) + "=" + std::to_string(x.value);
      }
      throw CrossCheckMismatch(msg);
    }
  }
  return rep;
}

}  // namespace bcx
