#pragma once

#include <vector>

#include "primex/blocks.hpp"
#include "primex/modrep.hpp"
#include "primex/perm.hpp"

namespace primex {

// x -> matrix * x + offset on F_l^n.
struct AffineMap {
  FlMatrix matrix;
  std::vector<int> offset;

  std::vector<int> apply(std::vector<int> const &v) const;
};

// An identification of the permutation domain with F_l^n under which a
// solvable primitive group acts by affine maps: labels[p] is the coordinate
// vector of point p, labels[origin] = 0, and the translations subgroup acts
// by vector addition.
struct AffineStructure {
  int l;
  int n;
  int origin;
  std::vector<std::vector<int>> labels; // indexed by point
  PermutationGroup translations;
};

struct AffineRecovery {
  AffineStructure structure;
  std::vector<AffineMap> generator_maps; // aligned with the group's generators
};

// The unique minimal normal subgroup of a solvable primitive group: the last
// nontrivial derived term, verified elementary abelian, regular and normal.
PermutationGroup minimal_normal_translations(PermutationGroup const &g);

// Recovers the affine structure of a solvable primitive group. The basis of
// the translation lattice is chosen greedily in canonical element order, so
// the output is deterministic. Errors (PRECONDITION) if g is not solvable or
// not primitive.
AffineRecovery recover_affine(PermutationGroup const &g, int origin = 0);

struct IntermediateReport {
  bool solvable;
  bool primitive;
  bool module_simple;
};

// For a group with standard translations <= G <= AGL(n, l) on l^n points
// (points read as base-l digit strings): primitivity of G must coincide with
// simplicity of the conjugation module on the translations. A mismatch is a
// theorem-contradiction defect.
IntermediateReport intermediate_group_tests(int n, int l,
                                            PermutationGroup const &g);

// The group of translations x -> x + v on l^n points.
PermutationGroup standard_translations(int n, int l);

// All of AGL(n, l) on l^n points; order checked against
// l^n * prod_i (l^n - l^i). Guard: l^n <= 512.
PermutationGroup agl_full(int n, int l);

// The translation permutation x -> x + v for the standard point encoding.
Permutation translation_perm(std::vector<int> const &v, int l);

// The linear permutation x -> m x (m invertible).
Permutation linear_perm(FlMatrix const &m);

} // namespace primex
