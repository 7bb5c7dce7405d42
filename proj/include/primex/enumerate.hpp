#pragma once

#include <string>
#include <vector>

#include "primex/modrep.hpp"
#include "primex/perm.hpp"

namespace primex {

// One solvable primitive permutation group of degree l^n, up to permutation
// isomorphism. The label is "A4", "S4" or "AGL(1,l)" for the classically
// named cases and "l{l}n{n}-o{order}-{i}" otherwise. Each entry arises from
// a GL(n,l)-subgroup class acting on the translations; should two classes
// ever meet in one permutation-isomorphism class, all their generator
// matrix lists are kept.
struct ClassificationEntry {
  int l = 0;
  int n = 0;
  Order order = 0;
  std::string label;
  PermutationGroup group;
  std::vector<std::vector<FlMatrix>> reps;
};

// True iff some relabeling of the points carries a onto b. Exhaustive over
// the symmetric group after invariant checks, so the degree is capped at 9.
bool permutation_isomorphic(PermutationGroup const &a,
                            PermutationGroup const &b);

// All solvable primitive permutation groups of degree l^n: the semidirect
// products of the translation group F_l^n with each irreducible solvable
// subgroup of GL(n, l). Sorted by order, then by canonical generator form.
std::vector<ClassificationEntry> solvable_primitive_groups(int l, int n);

} // namespace primex
