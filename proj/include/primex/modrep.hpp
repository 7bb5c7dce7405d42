#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "primex/perm.hpp"

namespace primex {

bool is_prime(int p);

// Square matrix over the prime field F_l. Entries are reduced mod l.
class FlMatrix {
public:
  FlMatrix(int l, int n); // zero matrix
  FlMatrix(int l, int n, std::vector<int> row_major);

  static FlMatrix identity_matrix(int l, int n);

  int l() const { return _l; }
  int n() const { return _n; }
  int at(int r, int c) const { return _e[r * _n + c]; }
  void set(int r, int c, int v);

  bool operator==(FlMatrix const &o) const
  {
    return _l == o._l && _n == o._n && _e == o._e;
  }
  bool operator!=(FlMatrix const &o) const { return !(*this == o); }
  bool operator<(FlMatrix const &o) const { return _e < o._e; }

  std::vector<int> apply(std::vector<int> const &v) const; // matrix * column

private:
  int _l, _n;
  std::vector<std::uint8_t> _e;
};

FlMatrix mat_mul(FlMatrix const &a, FlMatrix const &b);
FlMatrix mat_add(FlMatrix const &a, FlMatrix const &b);
FlMatrix mat_scale(int c, FlMatrix const &a);
int mat_det(FlMatrix const &a);
std::optional<FlMatrix> mat_inverse(FlMatrix const &a);

int mod_inverse(int a, int l);

// A subspace of F_l^n, held as a reduced-row-echelon basis so equal
// subspaces compare equal.
class Subspace {
public:
  Subspace(int l, int n); // zero subspace
  Subspace(int l, int n, std::vector<std::vector<int>> spanning_vectors);

  static Subspace full(int l, int n);

  int l() const { return _l; }
  int n() const { return _n; }
  int dim() const { return static_cast<int>(_basis.size()); }
  std::vector<std::vector<int>> const &basis() const { return _basis; }

  bool contains(std::vector<int> const &v) const;
  bool operator==(Subspace const &o) const
  {
    return _l == o._l && _n == o._n && _basis == o._basis;
  }
  bool operator<(Subspace const &o) const
  {
    if (dim() != o.dim())
      return dim() < o.dim();
    return _basis < o._basis;
  }

  Subspace sum(Subspace const &o) const;
  Subspace intersect(Subspace const &o) const;

private:
  int _l, _n;
  std::vector<std::vector<int>> _basis; // RREF rows
};

// A representation of a permutation group on F_l^n: one matrix per
// generator. Construction verifies that the generator images extend to a
// homomorphism on the whole (small) group and caches the element/matrix map.
class LinearRepresentation {
public:
  LinearRepresentation(PermutationGroup group, std::vector<FlMatrix> images);

  PermutationGroup const &group() const { return _group; }
  std::vector<FlMatrix> const &images() const { return _images; }
  int l() const { return _l; }
  int n() const { return _n; }

  FlMatrix const &matrix_of(Permutation const &g) const;
  // Matrices aligned with group().elements().
  std::vector<FlMatrix> const &element_matrices() const { return _elem_mats; }

private:
  PermutationGroup _group;
  std::vector<FlMatrix> _images;
  int _l, _n;
  std::vector<FlMatrix> _elem_mats;
  std::unordered_map<Permutation, int, PermHash> _index;
};

// Restriction of a representation to a subgroup of its group.
LinearRepresentation restrict_representation(LinearRepresentation const &rep,
                                             PermutationGroup const &sub);

struct ConjugationModule {
  PermutationGroup quotient; // L/N acting on the cosets of N
  LinearRepresentation rep;  // conjugation action of L's generators on N
};

// The F_l[L/N]-module structure on an elementary abelian normal subgroup N
// of L: N is identified with F_l^a via a greedy basis in canonical element
// order, and each generator of L acts by conjugation.
ConjugationModule module_from_conjugation(PermutationGroup const &l_group,
                                          PermutationGroup const &n_group);

// All invariant subspaces, sorted by dimension then basis. Guard: l^n <= 10^4.
std::vector<Subspace> invariant_subspaces(LinearRepresentation const &rep);

// Exactly the two trivial invariant subspaces.
bool is_simple(LinearRepresentation const &rep);

// Only the identity element maps to the identity matrix.
bool is_faithful(LinearRepresentation const &rep);

// For rep simple and N normal in rep.group(): true iff every N-invariant
// subspace has an N-invariant complement (the restriction is semisimple).
bool clifford_restriction_semisimple(LinearRepresentation const &rep,
                                     PermutationGroup const &n_group);

// The idempotent r_N = |N|^-1 * sum of the matrices of N (requires p != l,
// where |N| = p^a), split into its image and the image of 1 - r_N. Both are
// invariant, and they are complementary.
std::pair<Subspace, Subspace> idempotent_split(LinearRepresentation const &rep,
                                               PermutationGroup const &n_group,
                                               int p);

Order gl_order(int n, int l);

// GL(n, l) realized as a permutation group on the l^n - 1 nonzero vectors,
// with vector v encoded as sum v_i * l^i and point v_enc - 1.
struct GlRealization {
  PermutationGroup perm;
  int n, l;
};

GlRealization gl_group(int n, int l); // guard: |GL(n,l)| <= 200

FlMatrix perm_to_matrix(Permutation const &p, int n, int l);
Permutation matrix_to_perm(FlMatrix const &m);

// Conjugacy class representatives of the solvable subgroups of GL(n, l)
// acting irreducibly on F_l^n, as representations on their natural module.
// Sorted by order then canonical form. Guard: |GL(n,l)| <= 200.
std::vector<LinearRepresentation> irreducible_solvable_subgroups(int n, int l);

// A minimal normal subgroup of a solvable group: the p-torsion of the last
// nontrivial derived term for the smallest prime p dividing its order,
// shrunk to a minimal G-normal subgroup by exhaustive scan. Guard: |G| <= 200.
PermutationGroup minimal_normal_subgroup(PermutationGroup const &g);

} // namespace primex
