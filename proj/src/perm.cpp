#include "primex/perm.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace primex {

namespace {

// Exhaustive element listing is meant for small groups only; anything past
// this is a usage error.
constexpr Order ELEMENTS_GUARD = 100000;
constexpr std::uint64_t SUBGROUP_GUARD = 200;

void check_same_degree(int a, int b, char const *what)
{
  if (a != b)
    fail(ErrorCode::Domain,
         std::string(what) + ": degree mismatch (" + std::to_string(a) +
           " vs " + std::to_string(b) + ")");
}

} // namespace

std::string order_to_string(Order o)
{
  if (o == 0)
    return "0";
  std::string s;
  while (o > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(o % 10)));
    o /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Permutation::Permutation(std::vector<int> images) : _img(std::move(images))
{
  if (_img.empty())
    fail(ErrorCode::Domain, "permutation: empty image table");

  std::vector<bool> seen(_img.size(), false);
  for (int v : _img) {
    if (v < 0 || v >= static_cast<int>(_img.size()) || seen[v])
      fail(ErrorCode::Domain, "permutation: image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree)
{
  if (degree < 1)
    fail(ErrorCode::Domain, "permutation: degree must be positive");
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i)
    img[i] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const
{
  for (int i = 0; i < degree(); ++i)
    if (_img[i] != i)
      return false;
  return true;
}

Permutation compose(Permutation const &a, Permutation const &b)
{
  check_same_degree(a.degree(), b.degree(), "compose");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i)
    img[i] = a[b[i]];
  return Permutation(std::move(img));
}

Permutation inverse(Permutation const &p)
{
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    img[p[i]] = i;
  return Permutation(std::move(img));
}

Permutation conjugate(Permutation const &g, Permutation const &x)
{
  return compose(compose(inverse(x), g), x);
}

std::size_t PermHash::operator()(Permutation const &p) const
{
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

PermutationGroup::PermutationGroup(std::vector<Permutation> generators)
  : _gens(std::move(generators))
{
  if (_gens.empty())
    fail(ErrorCode::Domain, "group: generator list must be nonempty");

  _degree = _gens.front().degree();
  for (auto const &g : _gens)
    check_same_degree(g.degree(), _degree, "group");

  build_chain();
}

PermutationGroup PermutationGroup::trivial(int degree)
{
  return PermutationGroup({Permutation::identity(degree)});
}

namespace {

// Orbit of `point` under `gens` together with a transversal, points explored
// in BFS order with generators applied in listed order.
void orbit_transversal(int degree, std::vector<Permutation> const &gens,
                       int point, std::vector<int> &orb,
                       std::map<int, Permutation> &trans)
{
  orb.clear();
  trans.clear();
  orb.push_back(point);
  trans.emplace(point, Permutation::identity(degree));
  for (std::size_t i = 0; i < orb.size(); ++i) {
    int beta = orb[i];
    for (auto const &g : gens) {
      int img = g[beta];
      if (!trans.count(img)) {
        orb.push_back(img);
        trans.emplace(img, compose(g, trans.at(beta)));
      }
    }
  }
}

int smallest_moved_point(std::vector<Permutation> const &gens, int degree)
{
  for (int p = 0; p < degree; ++p)
    for (auto const &g : gens)
      if (g[p] != p)
        return p;
  return -1;
}

} // namespace

void PermutationGroup::build_chain()
{
  _chain.clear();

  // Level generators; level 0 holds the group's own non-identity generators.
  std::vector<std::vector<Permutation>> level_gens(1);
  for (auto const &g : _gens)
    if (!g.is_identity())
      level_gens[0].push_back(g);

  // A level's base point is frozen when the level is created: generators
  // inserted deeper only fix the bases that exist at insertion time, so a
  // base change after the fact would break the stabilizer invariant.
  auto rebuild_level = [&](std::size_t i) {
    if (i >= _chain.size()) {
      _chain.resize(i + 1);
      _chain[i].base_point = smallest_moved_point(level_gens[i], _degree);
      assert(_chain[i].base_point >= 0);
    }
    _chain[i].gens = level_gens[i];
    orbit_transversal(_degree, level_gens[i], _chain[i].base_point,
                      _chain[i].orbit, _chain[i].transversal);
  };

  // strip: peel transversal factors off g; returns the residue and the level
  // at which stripping stopped (residue not in that level's orbit, or the
  // chain ran out).
  auto strip = [&](Permutation g, std::size_t from) {
    std::size_t i = from;
    for (; i < _chain.size(); ++i) {
      int img = g[_chain[i].base_point];
      auto it = _chain[i].transversal.find(img);
      if (it == _chain[i].transversal.end())
        break;
      g = compose(inverse(it->second), g);
    }
    return std::make_pair(g, i);
  };

  if (level_gens[0].empty()) {
    _order = 1;
    return;
  }
  rebuild_level(0);

  // Deterministic Schreier-Sims: saturate every level with its Schreier
  // generators. A surviving residue fixes every base above the level where
  // stripping stopped, so it is adjoined to every level it was sifted
  // through; adding it only at the stopping level would let that level's
  // group escape the one above it and corrupt the order product.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < _chain.size() && !changed; ++i) {
      for (std::size_t oi = 0; oi < _chain[i].orbit.size() && !changed; ++oi) {
        int beta = _chain[i].orbit[oi];
        Permutation const &u_beta = _chain[i].transversal.at(beta);
        for (auto const &s : _chain[i].gens) {
          Permutation schreier = compose(
            inverse(_chain[i].transversal.at(s[beta])), compose(s, u_beta));
          if (schreier.is_identity())
            continue;
          auto [residue, level] = strip(schreier, i + 1);
          if (residue.is_identity())
            continue;
          if (level >= level_gens.size())
            level_gens.resize(level + 1);
          for (std::size_t j = i + 1; j <= level; ++j) {
            level_gens[j].push_back(residue);
            rebuild_level(j);
          }
          changed = true;
          break;
        }
      }
    }
  }

  _order = 1;
  for (auto const &lvl : _chain)
    _order *= static_cast<Order>(lvl.orbit.size());
}

std::uint64_t PermutationGroup::order_u64() const
{
  if (_order > static_cast<Order>(UINT64_MAX))
    fail(ErrorCode::Guard, "group order exceeds 64 bits");
  return static_cast<std::uint64_t>(_order);
}

bool PermutationGroup::contains(Permutation const &p) const
{
  if (p.degree() != _degree)
    fail(ErrorCode::Domain, "contains: degree mismatch");
  Permutation g = p;
  for (auto const &lvl : _chain) {
    int img = g[lvl.base_point];
    auto it = lvl.transversal.find(img);
    if (it == lvl.transversal.end())
      return false;
    g = compose(inverse(it->second), g);
  }
  return g.is_identity();
}

std::vector<Permutation> const &PermutationGroup::elements() const
{
  if (!_elements.empty())
    return _elements;
  if (_order > ELEMENTS_GUARD)
    fail(ErrorCode::Guard, "elements: group order exceeds " +
                             order_to_string(ELEMENTS_GUARD));

  std::vector<Permutation> out;
  out.push_back(Permutation::identity(_degree));
  // Expand transversals from the deepest level outward.
  for (std::size_t i = _chain.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * _chain[i].orbit.size());
    for (int beta : _chain[i].orbit)
      for (auto const &tail : out)
        next.push_back(compose(_chain[i].transversal.at(beta), tail));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  assert(static_cast<Order>(out.size()) == _order);
  _elements = std::move(out);
  return _elements;
}

std::vector<int> orbit(PermutationGroup const &g, int point)
{
  if (point < 0 || point >= g.degree())
    fail(ErrorCode::Domain, "orbit: point out of range");
  std::vector<int> orb;
  std::map<int, Permutation> trans;
  orbit_transversal(g.degree(), g.generators(), point, orb, trans);
  std::sort(orb.begin(), orb.end());
  return orb;
}

bool is_transitive(PermutationGroup const &g)
{
  return static_cast<int>(orbit(g, 0).size()) == g.degree();
}

std::vector<std::vector<int>> orbits(PermutationGroup const &g)
{
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(g.degree(), false);
  for (int p = 0; p < g.degree(); ++p) {
    if (seen[p])
      continue;
    auto orb = orbit(g, p);
    for (int q : orb)
      seen[q] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

PermutationGroup normal_closure(PermutationGroup const &g,
                                std::vector<Permutation> const &seed)
{
  PermutationGroup closure = PermutationGroup::trivial(g.degree());
  std::vector<Permutation> gens;

  // Adjoin one element at a time: every adoption at least doubles the
  // closure, so the generator list stays logarithmic in the group order.
  std::vector<Permutation> work = seed;
  while (!work.empty()) {
    Permutation cand = std::move(work.back());
    work.pop_back();
    if (cand.is_identity() || closure.contains(cand))
      continue;
    gens.push_back(cand);
    closure = PermutationGroup(gens);
    for (auto const &h : g.generators())
      work.push_back(conjugate(gens.back(), h));
  }
  return closure;
}

std::vector<PermutationGroup> derived_series(PermutationGroup const &g)
{
  std::vector<PermutationGroup> series;
  series.push_back(g);
  while (true) {
    PermutationGroup const &h = series.back();
    if (h.is_trivial())
      break;

    std::vector<Permutation> comms;
    for (auto const &a : h.generators())
      for (auto const &b : h.generators()) {
        Permutation c = compose(compose(inverse(a), inverse(b)), compose(a, b));
        if (!c.is_identity())
          comms.push_back(c);
      }
    PermutationGroup derived = normal_closure(h, comms);
    if (derived.order() == h.order())
      break; // perfect term; series is stable and nontrivial
    series.push_back(std::move(derived));
  }
  return series;
}

bool is_solvable(PermutationGroup const &g)
{
  return derived_series(g).back().is_trivial();
}

int derived_length(PermutationGroup const &g)
{
  return static_cast<int>(derived_series(g).size()) - 1;
}

PermutationGroup point_stabilizer(PermutationGroup const &g, int point)
{
  if (point < 0 || point >= g.degree())
    fail(ErrorCode::Domain, "point_stabilizer: point out of range");

  std::vector<int> orb;
  std::map<int, Permutation> trans;
  orbit_transversal(g.degree(), g.generators(), point, orb, trans);

  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermHash> seen;
  for (int beta : orb)
    for (auto const &s : g.generators()) {
      Permutation schreier =
        compose(inverse(trans.at(s[beta])), compose(s, trans.at(beta)));
      if (!schreier.is_identity() && seen.insert(schreier).second)
        gens.push_back(schreier);
    }

  if (gens.empty())
    return PermutationGroup::trivial(g.degree());
  return PermutationGroup(std::move(gens));
}

namespace {

// Shared machinery for subgroup enumeration: all elements of g, a
// multiplication table over element indices, and closure of index sets.
struct ElementTable {
  std::vector<Permutation> elems; // canonical order; index 0 is the identity
  std::vector<std::uint16_t> mul; // mul[a * n + b] = index of elems[a]*elems[b]
  std::vector<std::uint16_t> inv;
  std::size_t n;

  explicit ElementTable(PermutationGroup const &g)
  {
    elems = g.elements();
    n = elems.size();
    std::unordered_map<Permutation, std::uint16_t, PermHash> index;
    for (std::size_t i = 0; i < n; ++i)
      index.emplace(elems[i], static_cast<std::uint16_t>(i));

    mul.resize(n * n);
    inv.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        mul[a * n + b] = index.at(compose(elems[a], elems[b]));
      inv[a] = index.at(inverse(elems[a]));
    }
  }

  // Closure of a subgroup index-set S (must already be closed) plus one new
  // element, returned sorted.
  std::vector<std::uint16_t> extend(std::vector<std::uint16_t> const &s,
                                    std::uint16_t x) const
  {
    std::vector<bool> in(n, false);
    std::vector<std::uint16_t> members = s;
    for (auto e : s)
      in[e] = true;
    std::vector<std::uint16_t> work;
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      work.push_back(x);
    }
    while (!work.empty()) {
      std::uint16_t w = work.back();
      work.pop_back();
      // products with every current member, both orders
      std::size_t cur = members.size();
      for (std::size_t i = 0; i < cur; ++i) {
        std::uint16_t m = members[i];
        for (std::uint16_t p : {mul[w * n + m], mul[m * n + w]}) {
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
            work.push_back(p);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }
};

struct IndexSetHash {
  std::size_t operator()(std::vector<std::uint16_t> const &v) const
  {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Minimal generating sequence for a subgroup given as a closed index set.
std::vector<Permutation> pick_generators(ElementTable const &t,
                                         std::vector<std::uint16_t> const &set)
{
  if (set.size() == 1)
    return {t.elems[set[0]]};

  std::vector<std::uint16_t> gen_idx;
  std::vector<std::uint16_t> span = {0}; // identity index is always 0
  for (auto e : set) {
    if (std::binary_search(span.begin(), span.end(), e))
      continue;
    gen_idx.push_back(e);
    span = t.extend(span, e);
    if (span.size() == set.size())
      break;
  }
  std::vector<Permutation> gens;
  for (auto i : gen_idx)
    gens.push_back(t.elems[i]);
  return gens;
}

} // namespace

SubgroupList enumerate_subgroups(PermutationGroup const &g, bool up_to_conjugacy)
{
  if (g.order() > SUBGROUP_GUARD)
    fail(ErrorCode::Guard, "enumerate_subgroups: group order exceeds " +
                             std::to_string(SUBGROUP_GUARD));

  ElementTable t(g);

  // Grow subgroups by adjoining one element at a time. Every subgroup is
  // reachable along a chain of one-element extensions, so this is complete.
  std::vector<std::vector<std::uint16_t>> found;
  std::unordered_set<std::vector<std::uint16_t>, IndexSetHash> seen;
  found.push_back({0});
  seen.insert(found.front());
  for (std::size_t qi = 0; qi < found.size(); ++qi) {
    std::vector<std::uint16_t> cur = found[qi];
    for (std::uint16_t x = 1; x < t.n; ++x) {
      if (std::binary_search(cur.begin(), cur.end(), x))
        continue;
      auto ext = t.extend(cur, x);
      if (seen.insert(ext).second)
        found.push_back(std::move(ext));
    }
  }

  if (up_to_conjugacy) {
    // Keep the lexicographically least conjugate of each class.
    std::unordered_set<std::vector<std::uint16_t>, IndexSetHash> keep;
    for (auto const &s : found) {
      std::vector<std::uint16_t> best = s;
      std::vector<std::uint16_t> conj(s.size());
      for (std::size_t x = 0; x < t.n; ++x) {
        // conjugate s by element x: x^-1 * e * x
        for (std::size_t i = 0; i < s.size(); ++i)
          conj[i] = t.mul[t.mul[t.inv[x] * t.n + s[i]] * t.n + x];
        std::sort(conj.begin(), conj.end());
        if (conj < best)
          best = conj;
      }
      keep.insert(best);
    }
    found.assign(keep.begin(), keep.end());
  }

  std::sort(found.begin(), found.end(),
            [](auto const &a, auto const &b) {
              if (a.size() != b.size())
                return a.size() < b.size();
              return a < b;
            });

  SubgroupList out{{}, up_to_conjugacy};
  for (auto const &s : found)
    out.subgroups.emplace_back(pick_generators(t, s));
  return out;
}

bool is_maximal(PermutationGroup const &g, PermutationGroup const &h)
{
  if (h.degree() != g.degree())
    fail(ErrorCode::Domain, "is_maximal: degree mismatch");
  for (auto const &x : h.generators())
    if (!g.contains(x))
      fail(ErrorCode::Precondition, "is_maximal: H is not a subgroup of G");
  if (g.order() > SUBGROUP_GUARD)
    fail(ErrorCode::Guard, "is_maximal: group order exceeds " +
                             std::to_string(SUBGROUP_GUARD));

  auto all = enumerate_subgroups(g, false);
  for (auto const &k : all.subgroups) {
    if (k.order() <= h.order() || k.order() >= g.order())
      continue;
    bool contains_h = true;
    for (auto const &x : h.elements())
      if (!k.contains(x)) {
        contains_h = false;
        break;
      }
    if (contains_h)
      return false;
  }
  return true;
}

bool same_group(PermutationGroup const &a, PermutationGroup const &b)
{
  if (a.degree() != b.degree() || a.order() != b.order())
    return false;
  for (auto const &g : a.generators())
    if (!b.contains(g))
      return false;
  return true;
}

bool is_normal_in(PermutationGroup const &g, PermutationGroup const &n)
{
  for (auto const &x : n.generators())
    if (!g.contains(x))
      return false;
  for (auto const &x : n.generators())
    for (auto const &h : g.generators())
      if (!n.contains(conjugate(x, h)))
        return false;
  return true;
}

} // namespace primex
