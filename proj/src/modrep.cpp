#include "primex/modrep.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace primex {

namespace {

constexpr long SUBSPACE_GUARD = 10000;   // on l^n for subspace enumeration
constexpr std::uint64_t GL_GUARD = 200;  // on |GL(n,l)|
constexpr std::uint64_t HOM_GUARD = 4096; // representation well-definedness check

void check_prime(int l)
{
  if (!is_prime(l))
    fail(ErrorCode::Domain, "field size must be prime, got " + std::to_string(l));
}

} // namespace

bool is_prime(int p)
{
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

int mod_inverse(int a, int l)
{
  a %= l;
  if (a < 0)
    a += l;
  if (a == 0)
    fail(ErrorCode::Domain, "mod_inverse: zero is not invertible");
  // extended euclid
  int t = 0, new_t = 1, r = l, new_r = a;
  while (new_r != 0) {
    int q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  assert(r == 1);
  return t < 0 ? t + l : t;
}

FlMatrix::FlMatrix(int l, int n) : _l(l), _n(n), _e(n * n, 0)
{
  check_prime(l);
  if (n < 1)
    fail(ErrorCode::Domain, "matrix: dimension must be positive");
}

FlMatrix::FlMatrix(int l, int n, std::vector<int> row_major) : FlMatrix(l, n)
{
  if (static_cast<int>(row_major.size()) != n * n)
    fail(ErrorCode::Domain, "matrix: expected " + std::to_string(n * n) +
                              " entries, got " + std::to_string(row_major.size()));
  for (int i = 0; i < n * n; ++i) {
    int v = row_major[i] % l;
    if (v < 0)
      v += l;
    _e[i] = static_cast<std::uint8_t>(v);
  }
}

FlMatrix FlMatrix::identity_matrix(int l, int n)
{
  FlMatrix m(l, n);
  for (int i = 0; i < n; ++i)
    m.set(i, i, 1);
  return m;
}

void FlMatrix::set(int r, int c, int v)
{
  v %= _l;
  if (v < 0)
    v += _l;
  _e[r * _n + c] = static_cast<std::uint8_t>(v);
}

std::vector<int> FlMatrix::apply(std::vector<int> const &v) const
{
  if (static_cast<int>(v.size()) != _n)
    fail(ErrorCode::Domain, "matrix apply: dimension mismatch");
  std::vector<int> out(_n, 0);
  for (int r = 0; r < _n; ++r) {
    int acc = 0;
    for (int c = 0; c < _n; ++c)
      acc += at(r, c) * v[c];
    out[r] = acc % _l;
  }
  return out;
}

FlMatrix mat_mul(FlMatrix const &a, FlMatrix const &b)
{
  if (a.l() != b.l() || a.n() != b.n())
    fail(ErrorCode::Domain, "matrix multiply: shape mismatch");
  FlMatrix out(a.l(), a.n());
  for (int r = 0; r < a.n(); ++r)
    for (int c = 0; c < a.n(); ++c) {
      int acc = 0;
      for (int k = 0; k < a.n(); ++k)
        acc += a.at(r, k) * b.at(k, c);
      out.set(r, c, acc % a.l());
    }
  return out;
}

FlMatrix mat_add(FlMatrix const &a, FlMatrix const &b)
{
  if (a.l() != b.l() || a.n() != b.n())
    fail(ErrorCode::Domain, "matrix add: shape mismatch");
  FlMatrix out(a.l(), a.n());
  for (int r = 0; r < a.n(); ++r)
    for (int c = 0; c < a.n(); ++c)
      out.set(r, c, a.at(r, c) + b.at(r, c));
  return out;
}

FlMatrix mat_scale(int c, FlMatrix const &a)
{
  FlMatrix out(a.l(), a.n());
  for (int r = 0; r < a.n(); ++r)
    for (int k = 0; k < a.n(); ++k)
      out.set(r, k, c * a.at(r, k));
  return out;
}

namespace {

// Gaussian elimination returning (rank, det); optionally accumulates the
// inverse when `inv` is non-null (requires full rank).
int eliminate(FlMatrix m, int *det_out, FlMatrix *inv)
{
  int l = m.l(), n = m.n();
  FlMatrix id = FlMatrix::identity_matrix(l, n);
  int det = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (int c = 0; c < n; ++c) {
        int t = m.at(pivot, c);
        m.set(pivot, c, m.at(rank, c));
        m.set(rank, c, t);
        t = id.at(pivot, c);
        id.set(pivot, c, id.at(rank, c));
        id.set(rank, c, t);
      }
      det = (l - det % l) % l;
    }
    int p = m.at(rank, col);
    det = det * p % l;
    int pinv = mod_inverse(p, l);
    for (int c = 0; c < n; ++c) {
      m.set(rank, c, pinv * m.at(rank, c));
      id.set(rank, c, pinv * id.at(rank, c));
    }
    for (int r = 0; r < n; ++r) {
      if (r == rank)
        continue;
      int f = m.at(r, col);
      if (f == 0)
        continue;
      for (int c = 0; c < n; ++c) {
        m.set(r, c, m.at(r, c) + (l - f) * m.at(rank, c));
        id.set(r, c, id.at(r, c) + (l - f) * id.at(rank, c));
      }
    }
    ++rank;
  }
  if (det_out)
    *det_out = (rank == n) ? det : 0;
  if (inv) {
    if (rank != n)
      fail(ErrorCode::Domain, "matrix inverse: matrix is singular");
    *inv = id;
  }
  return rank;
}

} // namespace

int mat_det(FlMatrix const &a)
{
  int det = 0;
  eliminate(a, &det, nullptr);
  return det;
}

std::optional<FlMatrix> mat_inverse(FlMatrix const &a)
{
  FlMatrix inv(a.l(), a.n());
  int det = 0;
  int rank = eliminate(a, &det, nullptr);
  if (rank != a.n())
    return std::nullopt;
  eliminate(a, &det, &inv);
  return inv;
}

Subspace::Subspace(int l, int n) : _l(l), _n(n)
{
  check_prime(l);
  if (n < 1)
    fail(ErrorCode::Domain, "subspace: dimension must be positive");
}

Subspace::Subspace(int l, int n, std::vector<std::vector<int>> vectors)
  : Subspace(l, n)
{
  // row reduce the spanning vectors into RREF
  std::vector<std::vector<int>> rows;
  for (auto v : vectors) {
    if (static_cast<int>(v.size()) != n)
      fail(ErrorCode::Domain, "subspace: vector dimension mismatch");
    for (auto &x : v) {
      x %= l;
      if (x < 0)
        x += l;
    }
    rows.push_back(std::move(v));
  }

  std::vector<std::vector<int>> basis;
  for (auto &row : rows) {
    // reduce by existing pivots
    for (auto const &p : basis) {
      int lead = 0;
      while (lead < n && p[lead] == 0)
        ++lead;
      if (row[lead] != 0) {
        int f = row[lead];
        for (int c = 0; c < n; ++c)
          row[c] = (row[c] + (l - f) * p[c]) % l;
      }
    }
    int lead = 0;
    while (lead < n && row[lead] == 0)
      ++lead;
    if (lead == n)
      continue;
    int inv = mod_inverse(row[lead], l);
    for (int c = 0; c < n; ++c)
      row[c] = row[c] * inv % l;
    // back-substitute into existing basis rows
    for (auto &p : basis)
      if (p[lead] != 0) {
        int f = p[lead];
        for (int c = 0; c < n; ++c)
          p[c] = (p[c] + (l - f) * row[c]) % l;
      }
    basis.push_back(row);
  }
  std::sort(basis.begin(), basis.end(), [n](auto const &a, auto const &b) {
    int la = 0, lb = 0;
    while (la < n && a[la] == 0)
      ++la;
    while (lb < n && b[lb] == 0)
      ++lb;
    return la < lb;
  });
  _basis = std::move(basis);
}

Subspace Subspace::full(int l, int n)
{
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace(l, n, std::move(rows));
}

bool Subspace::contains(std::vector<int> const &v) const
{
  if (static_cast<int>(v.size()) != _n)
    fail(ErrorCode::Domain, "subspace contains: dimension mismatch");
  std::vector<int> row = v;
  for (auto &x : row) {
    x %= _l;
    if (x < 0)
      x += _l;
  }
  for (auto const &p : _basis) {
    int lead = 0;
    while (lead < _n && p[lead] == 0)
      ++lead;
    if (row[lead] != 0) {
      int f = row[lead];
      for (int c = 0; c < _n; ++c)
        row[c] = (row[c] + (_l - f) * p[c]) % _l;
    }
  }
  for (int x : row)
    if (x != 0)
      return false;
  return true;
}

Subspace Subspace::sum(Subspace const &o) const
{
  if (_l != o._l || _n != o._n)
    fail(ErrorCode::Domain, "subspace sum: shape mismatch");
  std::vector<std::vector<int>> rows = _basis;
  rows.insert(rows.end(), o._basis.begin(), o._basis.end());
  return Subspace(_l, _n, std::move(rows));
}

Subspace Subspace::intersect(Subspace const &o) const
{
  if (_l != o._l || _n != o._n)
    fail(ErrorCode::Domain, "subspace intersect: shape mismatch");
  // Zassenhaus: row reduce [A|A; B|0], intersection basis appears in the
  // right half of rows whose left half is zero. Dimensions here are tiny,
  // so a direct approach is fine: enumerate this subspace's vectors and
  // keep those in o. Guard against larger abuse via vector count.
  long count = 1;
  for (int i = 0; i < dim(); ++i) {
    count *= _l;
    if (count > SUBSPACE_GUARD)
      fail(ErrorCode::Guard, "subspace intersect: subspace too large");
  }
  std::vector<std::vector<int>> inside;
  std::vector<int> coeff(dim(), 0);
  for (long k = 0; k < count; ++k) {
    long t = k;
    for (int i = 0; i < dim(); ++i) {
      coeff[i] = static_cast<int>(t % _l);
      t /= _l;
    }
    std::vector<int> v(_n, 0);
    for (int i = 0; i < dim(); ++i)
      for (int c = 0; c < _n; ++c)
        v[c] = (v[c] + coeff[i] * _basis[i][c]) % _l;
    if (o.contains(v))
      inside.push_back(v);
  }
  return Subspace(_l, _n, std::move(inside));
}

LinearRepresentation::LinearRepresentation(PermutationGroup group,
                                           std::vector<FlMatrix> images)
  : _group(std::move(group)), _images(std::move(images))
{
  if (_images.size() != _group.generators().size())
    fail(ErrorCode::Domain,
         "representation: need exactly one matrix per generator");
  _l = _images.front().l();
  _n = _images.front().n();
  for (auto const &m : _images)
    if (m.l() != _l || m.n() != _n)
      fail(ErrorCode::Domain, "representation: matrices of mixed shape");
  for (auto const &m : _images)
    if (mat_det(m) == 0)
      fail(ErrorCode::Domain, "representation: generator image is singular");

  if (_group.order() > HOM_GUARD)
    fail(ErrorCode::Guard, "representation: group order exceeds " +
                             std::to_string(HOM_GUARD));

  // Walk the Cayley graph; a revisited element must receive the same matrix,
  // which makes the generator assignment a homomorphism on all of G.
  auto const &elems = _group.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    _index.emplace(elems[i], static_cast<int>(i));

  std::vector<char> known(elems.size(), 0);
  _elem_mats.assign(elems.size(), FlMatrix::identity_matrix(_l, _n));
  Permutation id = Permutation::identity(_group.degree());
  int id_idx = _index.at(id);
  known[id_idx] = 1;

  std::vector<int> queue = {id_idx};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int cur = queue[qi];
    for (std::size_t gi = 0; gi < _group.generators().size(); ++gi) {
      Permutation next = compose(_group.generators()[gi], elems[cur]);
      FlMatrix next_mat = mat_mul(_images[gi], _elem_mats[cur]);
      int ni = _index.at(next);
      if (!known[ni]) {
        known[ni] = 1;
        _elem_mats[ni] = next_mat;
        queue.push_back(ni);
      } else if (_elem_mats[ni] != next_mat) {
        fail(ErrorCode::Precondition,
             "representation: generator images do not define a homomorphism");
      }
    }
  }
}

FlMatrix const &LinearRepresentation::matrix_of(Permutation const &g) const
{
  auto it = _index.find(g);
  if (it == _index.end())
    fail(ErrorCode::Domain, "matrix_of: element not in group");
  return _elem_mats[it->second];
}

LinearRepresentation restrict_representation(LinearRepresentation const &rep,
                                             PermutationGroup const &sub)
{
  std::vector<FlMatrix> images;
  for (auto const &g : sub.generators())
    images.push_back(rep.matrix_of(g)); // errors if not in the group
  return LinearRepresentation(sub, std::move(images));
}

namespace {

// Coordinates of every element of an elementary abelian group relative to a
// greedy basis picked in canonical element order. Returns the basis
// (as group elements) and the element -> coordinate map.
struct AbelianCoordinates {
  std::vector<Permutation> basis;
  std::map<Permutation, std::vector<int>> coords;
  int l;
};

AbelianCoordinates elementary_abelian_coordinates(PermutationGroup const &n_group)
{
  auto const &elems = n_group.elements();
  Order ord = n_group.order();
  if (ord == 1)
    fail(ErrorCode::Precondition, "elementary abelian: group is trivial");

  // common prime order of all non-identity elements
  int l = 0;
  for (auto const &e : elems) {
    if (e.is_identity())
      continue;
    Permutation pow = e;
    int k = 1;
    while (!pow.is_identity()) {
      pow = compose(pow, e);
      ++k;
    }
    if (l == 0)
      l = k;
    if (k != l || !is_prime(k))
      fail(ErrorCode::Precondition,
           "elementary abelian: element orders are not a fixed prime");
  }
  for (auto const &a : n_group.generators())
    for (auto const &b : n_group.generators())
      if (compose(a, b) != compose(b, a))
        fail(ErrorCode::Precondition, "elementary abelian: group is not abelian");

  AbelianCoordinates out;
  out.l = l;
  std::map<Permutation, std::vector<int>> coords;
  coords.emplace(Permutation::identity(n_group.degree()), std::vector<int>{});

  // grow the basis greedily; after each pick, extend all known coordinates
  for (auto const &e : elems) {
    if (coords.count(e))
      continue;
    out.basis.push_back(e);
    std::map<Permutation, std::vector<int>> bigger;
    for (auto const &[elem, c] : coords) {
      Permutation cur = elem;
      for (int k = 0; k < l; ++k) {
        std::vector<int> cc = c;
        cc.push_back(k);
        bigger.emplace(cur, std::move(cc));
        cur = compose(e, cur);
      }
    }
    coords = std::move(bigger);
  }

  int dim = static_cast<int>(out.basis.size());
  for (auto &[elem, c] : coords)
    c.resize(dim, 0);
  out.coords = std::move(coords);

  if (out.coords.size() != elems.size())
    fail(ErrorCode::Defect, "elementary abelian: coordinate map size mismatch");
  return out;
}

} // namespace

ConjugationModule module_from_conjugation(PermutationGroup const &l_group,
                                          PermutationGroup const &n_group)
{
  if (l_group.degree() != n_group.degree())
    fail(ErrorCode::Domain, "module_from_conjugation: degree mismatch");
  if (!is_normal_in(l_group, n_group))
    fail(ErrorCode::Precondition,
         "module_from_conjugation: N is not a normal subgroup of L");

  AbelianCoordinates ncoords = elementary_abelian_coordinates(n_group);
  int l = ncoords.l;
  int a = static_cast<int>(ncoords.basis.size());

  // quotient on cosets of N, each coset named by its least element
  auto const &lelems = l_group.elements();
  std::map<Permutation, int> coset_of; // element -> coset index
  std::vector<Permutation> coset_min;
  for (auto const &x : lelems) {
    if (coset_of.count(x))
      continue;
    int idx = static_cast<int>(coset_min.size());
    coset_min.push_back(x); // elements() is sorted, so x is the least member
    for (auto const &nn : n_group.elements())
      coset_of.emplace(compose(x, nn), idx);
  }
  int ncosets = static_cast<int>(coset_min.size());

  std::vector<Permutation> quot_gens;
  std::vector<FlMatrix> images;
  for (auto const &g : l_group.generators()) {
    std::vector<int> img(ncosets);
    for (int c = 0; c < ncosets; ++c)
      img[c] = coset_of.at(compose(g, coset_min[c]));
    quot_gens.emplace_back(std::move(img));

    FlMatrix m(l, a);
    Permutation ginv = inverse(g);
    for (int j = 0; j < a; ++j) {
      Permutation conj = compose(compose(g, ncoords.basis[j]), ginv);
      auto it = ncoords.coords.find(conj);
      if (it == ncoords.coords.end())
        fail(ErrorCode::Precondition,
             "module_from_conjugation: conjugation leaves N (not normal)");
      for (int i = 0; i < a; ++i)
        m.set(i, j, it->second[i]);
    }
    images.push_back(std::move(m));
  }

  PermutationGroup quotient(std::move(quot_gens));
  return ConjugationModule{quotient,
                           LinearRepresentation(quotient, std::move(images))};
}

std::vector<Subspace> invariant_subspaces(LinearRepresentation const &rep)
{
  int l = rep.l(), n = rep.n();
  long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= l;
    if (total > SUBSPACE_GUARD)
      fail(ErrorCode::Guard, "invariant_subspaces: l^n exceeds " +
                               std::to_string(SUBSPACE_GUARD));
  }

  // cyclic invariant subspace generated by each vector
  std::set<Subspace> cyclic;
  for (long code = 1; code < total; ++code) {
    std::vector<int> v(n);
    long t = code;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<int>(t % l);
      t /= l;
    }
    std::vector<std::vector<int>> span = {v};
    bool grew = true;
    while (grew) {
      grew = false;
      Subspace s(l, n, span);
      for (auto const &m : rep.images())
        for (auto const &b : s.basis()) {
          auto image = m.apply(b);
          if (!s.contains(image)) {
            span.push_back(image);
            grew = true;
          }
        }
      if (grew)
        span = Subspace(l, n, span).basis();
    }
    cyclic.insert(Subspace(l, n, span));
  }

  // every invariant subspace is a sum of cyclic ones; close under sums
  std::set<Subspace> all;
  all.insert(Subspace(l, n)); // zero subspace
  for (auto const &c : cyclic)
    all.insert(c);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subspace> cur(all.begin(), all.end());
    for (auto const &s : cur)
      for (auto const &c : cyclic) {
        Subspace sum = s.sum(c);
        if (all.insert(sum).second)
          grew = true;
      }
  }

  return std::vector<Subspace>(all.begin(), all.end());
}

bool is_simple(LinearRepresentation const &rep)
{
  // exactly the zero and full subspaces
  return invariant_subspaces(rep).size() == 2;
}

bool is_faithful(LinearRepresentation const &rep)
{
  FlMatrix id = FlMatrix::identity_matrix(rep.l(), rep.n());
  auto const &elems = rep.group().elements();
  auto const &mats = rep.element_matrices();
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (mats[i] == id && !elems[i].is_identity())
      return false;
  return true;
}

bool clifford_restriction_semisimple(LinearRepresentation const &rep,
                                     PermutationGroup const &n_group)
{
  if (!is_simple(rep))
    fail(ErrorCode::Precondition,
         "clifford_restriction_semisimple: representation is not simple");
  if (!is_normal_in(rep.group(), n_group))
    fail(ErrorCode::Precondition,
         "clifford_restriction_semisimple: N is not normal");

  LinearRepresentation res = restrict_representation(rep, n_group);
  auto subs = invariant_subspaces(res);
  for (auto const &w : subs) {
    bool has_complement = false;
    for (auto const &c : subs)
      if (w.dim() + c.dim() == rep.n() && w.intersect(c).dim() == 0) {
        has_complement = true;
        break;
      }
    if (!has_complement)
      return false;
  }
  return true;
}

std::pair<Subspace, Subspace> idempotent_split(LinearRepresentation const &rep,
                                               PermutationGroup const &n_group,
                                               int p)
{
  if (!is_prime(p))
    fail(ErrorCode::Domain, "idempotent_split: p must be prime");
  if (p == rep.l())
    fail(ErrorCode::Precondition,
         "idempotent_split: p must differ from the module characteristic");
  if (!is_normal_in(rep.group(), n_group))
    fail(ErrorCode::Precondition, "idempotent_split: N is not normal");

  auto const &nelems = n_group.elements();
  Order no = n_group.order();
  // |N| must be a power of p
  Order t = no;
  int a = 0;
  while (t % static_cast<Order>(p) == 0) {
    t /= static_cast<Order>(p);
    ++a;
  }
  if (t != 1)
    fail(ErrorCode::Precondition,
         "idempotent_split: |N| is not a power of p");

  int l = rep.l(), n = rep.n();
  FlMatrix sum(l, n);
  for (auto const &x : nelems)
    sum = mat_add(sum, rep.matrix_of(x));
  // 1 / p^a in F_l
  int pa = 1;
  for (int i = 0; i < a; ++i)
    pa = pa * p % l;
  FlMatrix r = mat_scale(mod_inverse(pa, l), sum);

  if (mat_mul(r, r) != r)
    fail(ErrorCode::Defect, "idempotent_split: r_N is not idempotent");

  FlMatrix s = mat_add(FlMatrix::identity_matrix(l, n), mat_scale(l - 1, r));

  auto column_space = [&](FlMatrix const &m) {
    std::vector<std::vector<int>> cols;
    for (int c = 0; c < n; ++c) {
      std::vector<int> v(n);
      for (int rr = 0; rr < n; ++rr)
        v[rr] = m.at(rr, c);
      cols.push_back(std::move(v));
    }
    return Subspace(l, n, std::move(cols));
  };

  Subspace rn = column_space(r);
  Subspace sn = column_space(s);

  if (rn.dim() + sn.dim() != n || rn.intersect(sn).dim() != 0)
    fail(ErrorCode::Defect, "idempotent_split: images are not complementary");
  for (auto const &m : rep.images())
    for (auto const &sub : {rn, sn})
      for (auto const &b : sub.basis())
        if (!sub.contains(m.apply(b)))
          fail(ErrorCode::Defect, "idempotent_split: image is not invariant");

  return {rn, sn};
}

Order gl_order(int n, int l)
{
  check_prime(l);
  if (n < 1)
    fail(ErrorCode::Domain, "gl_order: dimension must be positive");
  Order ln = 1;
  for (int i = 0; i < n; ++i)
    ln *= static_cast<Order>(l);
  Order out = 1;
  Order li = 1;
  for (int i = 0; i < n; ++i) {
    out *= ln - li;
    li *= static_cast<Order>(l);
  }
  return out;
}

namespace {

long pow_long(int base, int exp)
{
  long out = 1;
  for (int i = 0; i < exp; ++i)
    out *= base;
  return out;
}

// vector <-> point encodings for the action on nonzero vectors
std::vector<int> decode_vector(long code, int n, int l)
{
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = static_cast<int>(code % l);
    code /= l;
  }
  return v;
}

long encode_vector(std::vector<int> const &v, int l)
{
  long code = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    code = code * l + v[i];
  return code;
}

} // namespace

FlMatrix perm_to_matrix(Permutation const &p, int n, int l)
{
  FlMatrix m(l, n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = 1;
    long point = encode_vector(e, l) - 1;
    auto img = decode_vector(p[static_cast<int>(point)] + 1, n, l);
    for (int i = 0; i < n; ++i)
      m.set(i, j, img[i]);
  }
  return m;
}

Permutation matrix_to_perm(FlMatrix const &m)
{
  int n = m.n(), l = m.l();
  long npoints = pow_long(l, n) - 1;
  std::vector<int> img(npoints);
  for (long p = 0; p < npoints; ++p) {
    auto v = m.apply(decode_vector(p + 1, n, l));
    long q = encode_vector(v, l) - 1;
    if (q < 0)
      fail(ErrorCode::Domain, "matrix_to_perm: matrix is singular");
    img[p] = static_cast<int>(q);
  }
  return Permutation(std::move(img));
}

GlRealization gl_group(int n, int l)
{
  check_prime(l);
  Order go = gl_order(n, l);
  if (go > static_cast<Order>(GL_GUARD))
    fail(ErrorCode::Guard, "gl_group: |GL(n,l)| exceeds " +
                             std::to_string(GL_GUARD));

  std::vector<FlMatrix> gens;
  // transvections generate SL; one diagonal with a primitive root extends
  // to GL
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      FlMatrix m = FlMatrix::identity_matrix(l, n);
      m.set(i, j, 1);
      gens.push_back(m);
    }
  if (l > 2) {
    int root = 0;
    for (int c = 2; c < l; ++c) {
      // c is primitive iff its order is l-1
      int ordc = 1, x = c;
      while (x != 1) {
        x = x * c % l;
        ++ordc;
      }
      if (ordc == l - 1) {
        root = c;
        break;
      }
    }
    FlMatrix m = FlMatrix::identity_matrix(l, n);
    m.set(0, 0, root);
    gens.push_back(m);
  }
  if (gens.empty()) // GL(1,2) is trivial
    gens.push_back(FlMatrix::identity_matrix(l, n));

  std::vector<Permutation> perms;
  for (auto const &m : gens)
    perms.push_back(matrix_to_perm(m));
  PermutationGroup g(std::move(perms));
  if (g.order() != go)
    fail(ErrorCode::Defect, "gl_group: order does not match the formula");
  return GlRealization{std::move(g), n, l};
}

std::vector<LinearRepresentation> irreducible_solvable_subgroups(int n, int l)
{
  GlRealization gl = gl_group(n, l);
  SubgroupList classes = enumerate_subgroups(gl.perm, true);

  std::vector<LinearRepresentation> out;
  for (auto const &h : classes.subgroups) {
    std::vector<FlMatrix> images;
    for (auto const &g : h.generators())
      images.push_back(perm_to_matrix(g, n, l));
    LinearRepresentation rep(h, std::move(images));
    if (is_simple(rep) && is_solvable(h))
      out.push_back(std::move(rep));
  }

  std::sort(out.begin(), out.end(),
            [](LinearRepresentation const &a, LinearRepresentation const &b) {
              if (a.group().order() != b.group().order())
                return a.group().order() < b.group().order();
              std::vector<Permutation> ga = a.group().generators();
              std::vector<Permutation> gb = b.group().generators();
              std::sort(ga.begin(), ga.end());
              std::sort(gb.begin(), gb.end());
              return ga < gb;
            });
  return out;
}

PermutationGroup minimal_normal_subgroup(PermutationGroup const &g)
{
  if (g.is_trivial())
    fail(ErrorCode::Precondition, "minimal_normal_subgroup: group is trivial");
  if (!is_solvable(g))
    fail(ErrorCode::Precondition, "minimal_normal_subgroup: group is not solvable");
  if (g.order() > 200)
    fail(ErrorCode::Guard, "minimal_normal_subgroup: group order exceeds 200");

  auto series = derived_series(g);
  PermutationGroup const &last = series[series.size() - 2]; // last nontrivial

  // smallest prime dividing |last|
  std::uint64_t ord = last.order_u64();
  int p = 2;
  while (ord % p != 0)
    ++p;

  // p-torsion of the (abelian) last term
  std::vector<Permutation> torsion_gens;
  for (auto const &e : last.elements()) {
    if (e.is_identity())
      continue;
    Permutation pw = e;
    for (int i = 1; i < p; ++i)
      pw = compose(pw, e);
    if (pw.is_identity())
      torsion_gens.push_back(e);
  }
  PermutationGroup torsion =
    torsion_gens.empty() ? PermutationGroup::trivial(g.degree())
                         : PermutationGroup(torsion_gens);

  // minimal nontrivial G-normal subgroup inside the torsion subgroup
  SubgroupList subs = enumerate_subgroups(torsion, false);
  for (auto const &s : subs.subgroups) { // sorted by order ascending
    if (s.is_trivial())
      continue;
    if (is_normal_in(g, s))
      return s;
  }
  fail(ErrorCode::Defect, "minimal_normal_subgroup: no normal torsion subgroup");
}

} // namespace primex
