#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcx/beta.hpp"
#include "bcx/graph.hpp"
#include "bcx/homology.hpp"
#include "bcx/ideal.hpp"

namespace bcx {

struct CrossCheckOptions {
  std::size_t budget = kIdealBudget;
  std::size_t homology_max_vertices = kHomologyMaxVertices;
};

struct MethodValue {
  BetaMethod method;
  std::uint64_t value;
};

struct CrossCheckReport {
  std::vector<MethodValue> values;
  /// Methods skipped because the graph exceeds their limits.
  std::vector<std::string> skipped;
  /// H-matching checks at the smallest vertex, when the Morse method ran.
  std::optional<bool> matching_acyclic;
  std::optional<bool> matching_h_properties;
  std::uint64_t agreed_value = 0;
};

/// Runs every method whose limits allow it and compares the values.
/// Throws CrossCheckMismatch if two methods disagree or the matching fails
/// its checks; propagates other errors.
CrossCheckReport cross_check(const Graph& g, const CrossCheckOptions& options = {});

}  // namespace bcx
