#include "primex/extensions.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "primex/affine.hpp"
#include "primex/error.hpp"

namespace primex {

namespace {

constexpr std::uint64_t COMPLEMENT_GUARD = 200;

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i)
    r *= base;
  return r;
}

} // namespace

SemidirectProduct semidirect(LinearRepresentation const &rep) {
  if (!is_faithful(rep))
    fail(ErrorCode::Precondition,
         "semidirect product requires a faithful representation");
  int l = rep.l();
  int n = rep.n();

  PermutationGroup trans = standard_translations(n, l);
  std::vector<Permutation> gens = trans.generators();
  for (auto const &m : rep.images())
    gens.push_back(linear_perm(m));

  SemidirectProduct sp{l, n, PermutationGroup(gens), std::move(trans)};

  Order expect = Order(pow_u64(static_cast<std::uint64_t>(l), n)) *
                 rep.group().order();
  if (sp.group.order() != expect)
    fail(ErrorCode::Defect, "semidirect product has unexpected order");

  // The conjugation module of the translation subgroup must reproduce the
  // input: the greedy basis recovers the standard one, so the translation
  // generators act as the identity and the matrix generators act by their
  // own matrices.
  auto induced = module_from_conjugation(sp.group, sp.translations);
  if (induced.rep.l() != l || induced.rep.n() != n)
    fail(ErrorCode::Defect, "induced module has unexpected parameters");
  auto const &got = induced.rep.images();
  std::size_t n_trans = sp.translations.generators().size();
  if (got.size() != n_trans + rep.images().size())
    fail(ErrorCode::Defect, "induced module has unexpected generator count");
  FlMatrix const eye = FlMatrix::identity_matrix(l, n);
  for (std::size_t i = 0; i < got.size(); ++i) {
    FlMatrix const &want = i < n_trans ? eye : rep.images()[i - n_trans];
    if (got[i] != want)
      fail(ErrorCode::Defect, "induced module does not match the input module");
  }
  return sp;
}

ComplementReport complements(PermutationGroup const &l_group,
                             PermutationGroup const &n_group) {
  if (!is_normal_in(l_group, n_group))
    fail(ErrorCode::Precondition, "subgroup is not normal");
  if (n_group.is_trivial() || n_group.order() == l_group.order())
    fail(ErrorCode::Precondition,
         "complement search needs a nontrivial proper normal subgroup");
  if (l_group.order() > COMPLEMENT_GUARD)
    fail(ErrorCode::Guard, "complement search limited to groups of order <= " +
                               std::to_string(COMPLEMENT_GUARD));

  std::uint64_t target =
      l_group.order_u64() / static_cast<std::uint64_t>(n_group.order_u64());

  std::unordered_set<Permutation, PermHash> n_elems;
  for (auto const &e : n_group.elements())
    n_elems.insert(e);

  ComplementReport report;
  std::map<std::vector<Permutation>, int> seen; // element set -> index
  for (auto const &h : enumerate_subgroups(l_group, false).subgroups) {
    if (h.order_u64() != target)
      continue;
    bool trivial_meet = true;
    for (auto const &e : h.elements()) {
      if (!e.is_identity() && n_elems.count(e)) {
        trivial_meet = false;
        break;
      }
    }
    if (!trivial_meet)
      continue;
    seen.emplace(h.elements(), static_cast<int>(report.complements.size()));
    report.complements.push_back(h);
  }
  report.complement_count = report.complements.size();
  report.split = !report.complements.empty();

  // Conjugation orbits on the set of complements.
  std::vector<int> cls(report.complements.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < report.complements.size(); ++i) {
    if (cls[i] >= 0)
      continue;
    cls[i] = next;
    std::vector<std::size_t> frontier{i};
    while (!frontier.empty()) {
      std::size_t cur = frontier.back();
      frontier.pop_back();
      for (auto const &x : l_group.elements()) {
        std::vector<Permutation> img;
        img.reserve(report.complements[cur].elements().size());
        for (auto const &e : report.complements[cur].elements())
          img.push_back(conjugate(e, x));
        std::sort(img.begin(), img.end());
        int j = seen.at(img);
        if (cls[j] < 0) {
          cls[j] = next;
          frontier.push_back(static_cast<std::size_t>(j));
        }
      }
    }
    ++next;
  }
  report.class_count = next;
  return report;
}

} // namespace primex
