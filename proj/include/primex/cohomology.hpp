#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "primex/modrep.hpp"

namespace primex {

// Incremental row-rank accumulator over F_l. Rows are fed sparsely and
// reduced against the pivot rows collected so far.
class RankEngine {
public:
  virtual ~RankEngine() = default;
  // Returns true when the row was independent and became a pivot.
  virtual bool add_row(std::vector<std::pair<int, int>> const &entries) = 0;
  virtual int rank() const = 0;

  static std::unique_ptr<RankEngine> make(int l, int ncols);
};

struct CohomologyReport {
  int l = 0;
  int n = 0;
  std::uint64_t group_order = 0;
  int h0 = 0;
  int z1 = 0, b1 = 0, h1 = 0;
  int z2 = 0, b2 = 0, h2 = 0;
};

// Coboundary maps of the inhomogeneous bar complex
//   C^0 = M --d0--> C^1 = Map(G, M) --d1--> C^2 --d2--> C^3
// with (d0 m)(g)      = g.m - m
//      (d1 f)(g,h)    = g.f(h) - f(gh) + f(g)
//      (d2 f)(g,h,k)  = g.f(h,k) - f(gh,k) + f(g,hk) - f(g,h).
// Cochains are indexed lexicographically over element tuples in canonical
// element order, coordinate fastest. The matrix for degree i is returned as
// one sparse row per output coordinate.
std::vector<std::vector<std::pair<int, int>>>
coboundary_matrix(LinearRepresentation const &rep, int degree);

// Dimensions of H^0, H^1, H^2 with the intermediate kernel/boundary
// dimensions. Guard: |G| <= 48, n <= 3.
CohomologyReport cohomology(LinearRepresentation const &rep);

struct SweepEntry {
  int n = 0, l = 0;
  std::uint64_t order = 0;
  int h0 = 0, h1 = 0, h2 = 0;
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  bool all_vanish = true;
};

// Runs cohomology over every faithful simple solvable candidate produced by
// irreducible_solvable_subgroups for each (n, l), skipping groups larger
// than order_cap. H^1 and H^2 must vanish throughout.
SweepReport vanishing_sweep(std::vector<std::pair<int, int>> const &nl_pairs,
                            std::uint64_t order_cap = 48);

} // namespace primex
