#pragma once

#include <vector>

#include "primex/modrep.hpp"
#include "primex/perm.hpp"

namespace primex {

// Semidirect product N x| H on l^n points, where N = F_l^n acts by
// translation and H acts through the given faithful linear representation.
struct SemidirectProduct {
  int l = 0;
  int n = 0;
  PermutationGroup group;        // the product, acting on l^n points
  PermutationGroup translations; // the normal subgroup N inside it
};

SemidirectProduct semidirect(LinearRepresentation const &rep);

// Complements of a normal subgroup N in L: subgroups H with
// |H| * |N| = |L| and H meeting N trivially.
struct ComplementReport {
  bool split = false;
  std::uint64_t complement_count = 0;
  int class_count = 0; // orbits under conjugation by L
  std::vector<PermutationGroup> complements;
};

ComplementReport complements(PermutationGroup const &l_group,
                             PermutationGroup const &n_group);

} // namespace primex
