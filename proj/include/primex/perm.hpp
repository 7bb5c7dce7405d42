#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "primex/error.hpp"

namespace primex {

// Group orders can exceed 64 bits for the largest affine groups the guards
// allow, so orders are carried in 128 bits throughout.
using Order = unsigned __int128;

std::string order_to_string(Order o);

// A permutation of {0, ..., degree-1}, stored as its image table:
// img[i] is the image of point i.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(_img.size()); }
  int operator[](int p) const { return _img[p]; }
  std::vector<int> const &images() const { return _img; }

  bool is_identity() const;

  bool operator==(Permutation const &other) const { return _img == other._img; }
  bool operator!=(Permutation const &other) const { return _img != other._img; }
  bool operator<(Permutation const &other) const { return _img < other._img; }

private:
  std::vector<int> _img;
};

// compose(a, b) maps i to a(b(i)), i.e. b acts first.
Permutation compose(Permutation const &a, Permutation const &b);
Permutation inverse(Permutation const &p);
// conjugate(g, x) = x^-1 g x
Permutation conjugate(Permutation const &g, Permutation const &x);

struct PermHash {
  std::size_t operator()(Permutation const &p) const;
};

// One level of a stabilizer chain: the base point, the orbit of that point
// under the level's generators, and a transversal u_beta with
// u_beta(base) = beta for every orbit point beta.
struct ChainLevel {
  int base_point;
  std::vector<int> orbit; // in discovery order; orbit[0] == base_point
  std::map<int, Permutation> transversal;
  std::vector<Permutation> gens;
};

// A finite permutation group given by generators, with a stabilizer chain
// built eagerly on construction (deterministic base: at each level the
// smallest point moved by the level's generators).
class PermutationGroup {
public:
  explicit PermutationGroup(std::vector<Permutation> generators);

  static PermutationGroup trivial(int degree);

  int degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _gens; }
  std::vector<ChainLevel> const &chain() const { return _chain; }

  Order order() const { return _order; }
  // Convenience for the common case; errors if the order exceeds 2^64-1.
  std::uint64_t order_u64() const;

  bool contains(Permutation const &p) const;

  // All elements, sorted lexicographically by image table. This is the
  // canonical element order used for indexing throughout. Guarded.
  std::vector<Permutation> const &elements() const;

  bool is_trivial() const { return _order == 1; }

private:
  int _degree;
  std::vector<Permutation> _gens;
  std::vector<ChainLevel> _chain;
  Order _order;
  mutable std::vector<Permutation> _elements; // cached, sorted

  void build_chain();
};

// Orbit of a point, sorted ascending.
std::vector<int> orbit(PermutationGroup const &g, int point);

bool is_transitive(PermutationGroup const &g);

// Orbits as a sorted family of sorted point sets.
std::vector<std::vector<int>> orbits(PermutationGroup const &g);

// Derived series G = G(0) >= G(1) >= ..., each term the normal closure in
// its predecessor of the predecessor's generator commutators. The series
// stops when a term repeats (last term perfect) or reaches the trivial
// group. The returned vector always starts with G itself.
std::vector<PermutationGroup> derived_series(PermutationGroup const &g);

bool is_solvable(PermutationGroup const &g);

// Number of strictly decreasing steps in the derived series.
int derived_length(PermutationGroup const &g);

// Stabilizer of a point, generated by Schreier generators.
PermutationGroup point_stabilizer(PermutationGroup const &g, int point);

struct SubgroupList {
  std::vector<PermutationGroup> subgroups; // sorted by order, then element set
  bool up_to_conjugacy;
};

// All subgroups of g (or one representative per conjugacy class), found by
// growing subgroups one adjoined element at a time with element-set
// deduplication. Guard: |g| <= 200.
SubgroupList enumerate_subgroups(PermutationGroup const &g, bool up_to_conjugacy);

// True iff no subgroup K with H < K < G exists. Guard: |g| <= 200.
bool is_maximal(PermutationGroup const &g, PermutationGroup const &h);

// Element-set equality of two subgroups of a common symmetric group.
bool same_group(PermutationGroup const &a, PermutationGroup const &b);

// Normal closure of the subgroup generated by `seed` under conjugation by g.
PermutationGroup normal_closure(PermutationGroup const &g,
                                std::vector<Permutation> const &seed);

bool is_normal_in(PermutationGroup const &g, PermutationGroup const &n);

} // namespace primex
