#pragma once

#include <vector>

#include "primex/perm.hpp"

namespace primex {

// A partition of {0, ..., degree-1}. Parts are sorted internally and the
// list of parts is sorted by smallest member, so equal partitions compare
// equal structurally.
struct Partition {
  int degree;
  std::vector<std::vector<int>> parts;

  // Validates and normalizes; rejects anything that is not a partition of
  // the full point set.
  Partition(int degree, std::vector<std::vector<int>> parts);

  bool operator==(Partition const &other) const
  {
    return degree == other.degree && parts == other.parts;
  }
};

// Partition with more than one part, all parts nonempty, and at least one
// part of size > 1 (i.e. neither the discrete nor the one-part partition).
bool is_essential(Partition const &p);

// True iff every generator of g maps every part onto a part.
bool is_g_stable(PermutationGroup const &g, Partition const &p);

// Smallest block of imprimitivity containing both a and b, for transitive g.
// Returned sorted. The union of its translates is a g-stable partition.
std::vector<int> minimal_block(PermutationGroup const &g, int a, int b);

// The partition formed by the g-translates of a block.
Partition block_system(PermutationGroup const &g, std::vector<int> const &block);

// True iff |g| > 1, g is transitive, and no g-stable essential partition
// exists. Degree must be at least 2.
bool is_primitive(PermutationGroup const &g);

} // namespace primex
