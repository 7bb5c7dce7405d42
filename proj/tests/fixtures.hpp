#pragma once

// Shared permutation group fixtures. Image tables are 0-based.

#include <vector>

#include "primex/perm.hpp"

namespace fixtures {

using primex::Permutation;
using primex::PermutationGroup;

inline PermutationGroup from_tables(std::vector<std::vector<int>> tables)
{
  std::vector<Permutation> gens;
  for (auto &t : tables)
    gens.emplace_back(std::move(t));
  return PermutationGroup(std::move(gens));
}

// degree 2, 3
inline PermutationGroup c2() { return from_tables({{1, 0}}); }
inline PermutationGroup c3() { return from_tables({{1, 2, 0}}); }
inline PermutationGroup s3() { return from_tables({{1, 0, 2}, {1, 2, 0}}); }

// degree 4
inline PermutationGroup c4() { return from_tables({{1, 2, 3, 0}}); }
inline PermutationGroup v4()
{
  return from_tables({{1, 0, 3, 2}, {2, 3, 0, 1}});
}
inline PermutationGroup d4()
{
  return from_tables({{1, 2, 3, 0}, {1, 0, 3, 2}});
}
inline PermutationGroup a4()
{
  return from_tables({{1, 2, 0, 3}, {1, 0, 3, 2}});
}
inline PermutationGroup s4()
{
  return from_tables({{1, 0, 2, 3}, {1, 2, 3, 0}});
}

// degree 5
inline PermutationGroup c5() { return from_tables({{1, 2, 3, 4, 0}}); }
inline PermutationGroup d5()
{
  return from_tables({{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
}
// AGL(1,5): x+1 and 2x on F_5
inline PermutationGroup f20()
{
  return from_tables({{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}});
}
inline PermutationGroup a5()
{
  return from_tables({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
}
inline PermutationGroup s5()
{
  return from_tables({{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}});
}

// degree 6
inline PermutationGroup c6() { return from_tables({{1, 2, 3, 4, 5, 0}}); }
inline PermutationGroup s3_regular()
{
  return from_tables({{1, 2, 0, 4, 5, 3}, {3, 5, 4, 0, 2, 1}});
}
inline PermutationGroup d6()
{
  return from_tables({{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}});
}
// PSL(2,5) acting on the projective line over F_5
inline PermutationGroup psl25()
{
  return from_tables({{1, 2, 3, 4, 0, 5}, {5, 4, 2, 3, 1, 0}});
}

// degree 7
inline PermutationGroup c7() { return from_tables({{1, 2, 3, 4, 5, 6, 0}}); }
// x+1 and 2x on F_7 (2 has multiplicative order 3)
inline PermutationGroup f21()
{
  return from_tables({{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}});
}
// x+1 and 3x on F_7 (3 is a primitive root): AGL(1,7)
inline PermutationGroup f42()
{
  return from_tables({{1, 2, 3, 4, 5, 6, 0}, {0, 3, 6, 2, 5, 1, 4}});
}

// degree 8, regular actions of the two nonabelian order-8 groups
inline PermutationGroup q8_regular()
{
  return from_tables({{1, 4, 3, 6, 5, 0, 7, 2}, {2, 7, 4, 1, 6, 3, 0, 5}});
}
inline PermutationGroup d4_regular()
{
  return from_tables({{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 0, 3, 2, 1}});
}

} // namespace fixtures
