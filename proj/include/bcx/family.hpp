#pragma once

#include <string>
#include <string_view>

#include "bcx/graph.hpp"

namespace bcx {

/// Named graph families: the unlabeled Coxeter graphs of the finite and
/// affine irreducible Coxeter systems, plus a few plain graph families.
enum class Family {
  A,
  B,
  D,
  E,
  F4,
  G2,
  H3,
  H4,
  I2,
  AffineA,
  AffineB,
  AffineC,
  AffineD,
  AffineE,
  AffineF4,
  AffineG2,
  Complete,
  Star,
  Edgeless,
  Path,
  Cycle,
};

struct FamilySpec {
  Family family;
  unsigned n;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws InvalidInput if n is outside the family's range.
void validate(const FamilySpec& spec);

/// Parses "NAME:n" (case-insensitive), e.g. "A:5", "affineD:6", "K:4".
/// Fixed-rank types also accept their bare names ("F4", "H3", "G2", "I2").
/// "C:n" is accepted as an alias of "B:n" (same unlabeled graph).
/// Throws ParseError / InvalidInput.
FamilySpec parse_family(std::string_view text);

std::string to_string(const FamilySpec& spec);

/// The unlabeled graph of the family, on vertices 1..N.
Graph family_graph(const FamilySpec& spec);

/// Whether the family is one of the Coxeter types listed in the homotopy
/// table (as opposed to K/S/delta/path/cycle).
bool is_coxeter_type(Family family);

}  // namespace bcx
