#include "primex/affine.hpp"

#include <algorithm>
#include <map>

namespace primex {

namespace {

constexpr long AGL_POINT_GUARD = 512;

long pow_long(int base, int exp)
{
  long out = 1;
  for (int i = 0; i < exp; ++i)
    out *= base;
  return out;
}

std::vector<int> decode_point(long code, int n, int l)
{
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = static_cast<int>(code % l);
    code /= l;
  }
  return v;
}

long encode_point(std::vector<int> const &v, int l)
{
  long code = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    code = code * l + (v[i] % l + l) % l;
  return code;
}

} // namespace

std::vector<int> AffineMap::apply(std::vector<int> const &v) const
{
  auto out = matrix.apply(v);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (out[i] + offset[i]) % matrix.l();
  return out;
}

PermutationGroup minimal_normal_translations(PermutationGroup const &g)
{
  if (g.degree() < 2)
    fail(ErrorCode::Domain, "minimal_normal_translations: degree below 2");
  if (!is_solvable(g))
    fail(ErrorCode::Precondition,
         "minimal_normal_translations: group is not solvable");
  if (!is_primitive(g))
    fail(ErrorCode::Precondition,
         "minimal_normal_translations: group is not primitive");

  auto series = derived_series(g);
  PermutationGroup const &last = series[series.size() - 2];

  // The last nontrivial derived term of a solvable primitive group is its
  // unique minimal normal subgroup: elementary abelian and regular.
  if (!is_normal_in(g, last))
    fail(ErrorCode::Defect, "minimal_normal_translations: term not normal");
  if (last.order() != static_cast<Order>(g.degree()))
    fail(ErrorCode::Defect,
         "minimal_normal_translations: translation group is not regular");
  if (!is_transitive(last))
    fail(ErrorCode::Defect,
         "minimal_normal_translations: translation group is not transitive");
  return last;
}

AffineRecovery recover_affine(PermutationGroup const &g, int origin)
{
  if (origin < 0 || origin >= g.degree())
    fail(ErrorCode::Domain, "recover_affine: origin out of range");

  PermutationGroup translations = minimal_normal_translations(g);

  // identify N with F_l^n: greedy basis over canonical element order
  auto const &nelems = translations.elements();
  int l = 0;
  for (auto const &e : nelems)
    if (!e.is_identity()) {
      Permutation pw = e;
      int k = 1;
      while (!pw.is_identity()) {
        pw = compose(pw, e);
        ++k;
      }
      l = k;
      break;
    }
  if (!is_prime(l))
    fail(ErrorCode::Defect, "recover_affine: translation order is not prime");

  int n = 0;
  {
    long d = g.degree();
    while (d % l == 0) {
      d /= l;
      ++n;
    }
    if (d != 1)
      fail(ErrorCode::Defect, "recover_affine: degree is not a power of l");
  }

  // coordinates for each translation: greedy basis, coefficients enumerated
  std::vector<Permutation> basis;
  std::map<Permutation, std::vector<int>> coords;
  coords.emplace(Permutation::identity(g.degree()), std::vector<int>{});
  for (auto const &e : nelems) {
    if (coords.count(e))
      continue;
    basis.push_back(e);
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
  if (static_cast<int>(basis.size()) != n)
    fail(ErrorCode::Defect, "recover_affine: translation rank mismatch");
  for (auto &[elem, c] : coords)
    c.resize(n, 0);

  // label each point by the translation carrying the origin to it
  AffineStructure structure{l, n, origin, {}, translations};
  structure.labels.assign(g.degree(), {});
  for (auto const &t : nelems)
    structure.labels[t[origin]] = coords.at(t);
  for (auto const &lab : structure.labels)
    if (static_cast<int>(lab.size()) != n)
      fail(ErrorCode::Defect, "recover_affine: labeling is not a bijection");

  // matrix part of each generator from its action on origin and the
  // basis-translated points; offset from its action on the origin
  std::vector<AffineMap> maps;
  for (auto const &gen : g.generators()) {
    std::vector<int> offset = structure.labels[gen[origin]];
    FlMatrix m(l, n);
    for (int j = 0; j < n; ++j) {
      auto img = structure.labels[gen[basis[j][origin]]];
      for (int i = 0; i < n; ++i)
        m.set(i, j, img[i] - offset[i]);
    }
    if (mat_det(m) == 0)
      fail(ErrorCode::Defect, "recover_affine: singular matrix part");
    AffineMap am{m, offset};
    for (int p = 0; p < g.degree(); ++p)
      if (am.apply(structure.labels[p]) != structure.labels[gen[p]])
        fail(ErrorCode::Defect,
             "recover_affine: generator does not act affinely");
    maps.push_back(std::move(am));
  }

  return AffineRecovery{std::move(structure), std::move(maps)};
}

Permutation translation_perm(std::vector<int> const &v, int l)
{
  int n = static_cast<int>(v.size());
  long points = pow_long(l, n);
  std::vector<int> img(points);
  for (long p = 0; p < points; ++p) {
    auto x = decode_point(p, n, l);
    for (int i = 0; i < n; ++i)
      x[i] = (x[i] + v[i]) % l;
    img[p] = static_cast<int>(encode_point(x, l));
  }
  return Permutation(std::move(img));
}

Permutation linear_perm(FlMatrix const &m)
{
  int n = m.n(), l = m.l();
  if (mat_det(m) == 0)
    fail(ErrorCode::Domain, "linear_perm: matrix is singular");
  long points = pow_long(l, n);
  std::vector<int> img(points);
  for (long p = 0; p < points; ++p)
    img[p] = static_cast<int>(encode_point(m.apply(decode_point(p, n, l)), l));
  return Permutation(std::move(img));
}

PermutationGroup standard_translations(int n, int l)
{
  if (!is_prime(l) || n < 1)
    fail(ErrorCode::Domain, "standard_translations: need prime l, n >= 1");
  std::vector<Permutation> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    gens.push_back(translation_perm(e, l));
  }
  return PermutationGroup(std::move(gens));
}

PermutationGroup agl_full(int n, int l)
{
  if (!is_prime(l) || n < 1)
    fail(ErrorCode::Domain, "agl_full: need prime l, n >= 1");
  long points = pow_long(l, n);
  if (points > AGL_POINT_GUARD)
    fail(ErrorCode::Guard, "agl_full: l^n exceeds " +
                             std::to_string(AGL_POINT_GUARD));

  std::vector<Permutation> gens;
  PermutationGroup trans = standard_translations(n, l);
  for (auto const &t : trans.generators())
    gens.push_back(t);
  // GL part: transvections plus a primitive-root diagonal
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      FlMatrix m = FlMatrix::identity_matrix(l, n);
      m.set(i, j, 1);
      gens.push_back(linear_perm(m));
    }
  if (l > 2) {
    int root = 0;
    for (int c = 2; c < l && root == 0; ++c) {
      int ordc = 1, x = c;
      while (x != 1) {
        x = x * c % l;
        ++ordc;
      }
      if (ordc == l - 1)
        root = c;
    }
    FlMatrix m = FlMatrix::identity_matrix(l, n);
    m.set(0, 0, root);
    gens.push_back(linear_perm(m));
  }

  PermutationGroup g(std::move(gens));
  Order expect = static_cast<Order>(points) * gl_order(n, l);
  if (g.order() != expect)
    fail(ErrorCode::Defect, "agl_full: order does not match the formula");
  return g;
}

IntermediateReport intermediate_group_tests(int n, int l,
                                            PermutationGroup const &g)
{
  long points = pow_long(l, n);
  if (g.degree() != points)
    fail(ErrorCode::Domain, "intermediate_group_tests: degree is not l^n");

  PermutationGroup translations = standard_translations(n, l);
  for (auto const &t : translations.generators())
    if (!g.contains(t))
      fail(ErrorCode::Precondition,
           "intermediate_group_tests: G does not contain the translations");

  // G must act affinely on the standard labels
  for (auto const &gen : g.generators()) {
    auto offset = decode_point(gen[0], n, l);
    FlMatrix m(l, n);
    for (int j = 0; j < n; ++j) {
      std::vector<int> e(n, 0);
      e[j] = 1;
      auto img = decode_point(gen[static_cast<int>(encode_point(e, l))], n, l);
      for (int i = 0; i < n; ++i)
        m.set(i, j, img[i] - offset[i]);
    }
    AffineMap am{m, offset};
    for (long p = 0; p < points; ++p)
      if (encode_point(am.apply(decode_point(p, n, l)), l) != gen[static_cast<int>(p)])
        fail(ErrorCode::Precondition,
             "intermediate_group_tests: G is not inside AGL(n,l)");
  }

  ConjugationModule mod = module_from_conjugation(g, translations);
  IntermediateReport report{is_solvable(g), is_primitive(g),
                            is_simple(mod.rep)};
  if (report.primitive != report.module_simple)
    fail(ErrorCode::Defect,
         "intermediate_group_tests: primitivity does not match module simplicity");
  return report;
}

} // namespace primex
