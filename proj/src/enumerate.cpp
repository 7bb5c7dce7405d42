#include "primex/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "primex/blocks.hpp"
#include "primex/error.hpp"
#include "primex/extensions.hpp"
#include "primex/group_io.hpp"
#include "primex/modrep.hpp"

namespace primex {

namespace {

constexpr int ISO_DEGREE_GUARD = 9;

// Multiset of cycle types over all elements, as a sorted list of sorted
// cycle-length vectors. Equal for permutation-isomorphic groups.
std::vector<std::vector<int>> cycle_type_profile(PermutationGroup const &g) {
  std::vector<std::vector<int>> profile;
  for (auto const &e : g.elements()) {
    std::vector<bool> seen(e.degree(), false);
    std::vector<int> type;
    for (int i = 0; i < e.degree(); ++i) {
      if (seen[i])
        continue;
      int len = 0, j = i;
      do {
        seen[j] = true;
        ++len;
        j = e[j];
      } while (j != i);
      type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    profile.push_back(std::move(type));
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

} // namespace

bool permutation_isomorphic(PermutationGroup const &a,
                            PermutationGroup const &b) {
  if (a.degree() != b.degree())
    return false;
  if (a.degree() > ISO_DEGREE_GUARD)
    fail(ErrorCode::Guard, "isomorphism search limited to degree <= 9");
  if (a.order() != b.order())
    return false;
  if (cycle_type_profile(a) != cycle_type_profile(b))
    return false;

  int d = a.degree();
  std::vector<int> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> image(d);
  do {
    bool ok = true;
    for (auto const &g : a.generators()) {
      for (int i = 0; i < d; ++i)
        image[sigma[i]] = sigma[g[i]];
      if (!b.contains(Permutation(image))) {
        ok = false;
        break;
      }
    }
    // Generators land in b and the orders agree, so sigma conjugates a
    // onto all of b.
    if (ok)
      return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

std::vector<ClassificationEntry> solvable_primitive_groups(int l, int n) {
  if (!is_prime(l) || n < 1)
    fail(ErrorCode::Domain, "degree must be a prime power l^n with n >= 1");

  std::vector<ClassificationEntry> entries;
  for (auto const &rep : irreducible_solvable_subgroups(n, l)) {
    SemidirectProduct sp = semidirect(rep);
    if (!is_primitive(sp.group))
      fail(ErrorCode::Defect, "semidirect of an irreducible module must be "
                              "primitive");
    if (!is_solvable(sp.group))
      fail(ErrorCode::Defect, "semidirect of a solvable group must be "
                              "solvable");
    bool duplicate = false;
    for (auto &prev : entries) {
      if (prev.order == sp.group.order() &&
          permutation_isomorphic(prev.group, sp.group)) {
        prev.reps.push_back(rep.images());
        duplicate = true;
        break;
      }
    }
    if (!duplicate)
      entries.push_back({l, n, sp.group.order(), "", sp.group, {rep.images()}});
  }

  std::sort(entries.begin(), entries.end(),
            [](ClassificationEntry const &x, ClassificationEntry const &y) {
              if (x.order != y.order)
                return x.order < y.order;
              return serialize_group(x.group) < serialize_group(y.group);
            });

  // Classical names where they exist, positional labels otherwise.
  std::map<std::pair<int, std::uint64_t>, int> tally;
  for (auto &e : entries) {
    std::uint64_t ord = static_cast<std::uint64_t>(e.order);
    if (l == 2 && n == 2 && ord == 12) {
      e.label = "A4";
    } else if (l == 2 && n == 2 && ord == 24) {
      e.label = "S4";
    } else if (n == 1 && ord == static_cast<std::uint64_t>(l) * (l - 1)) {
      e.label = "AGL(1," + std::to_string(l) + ")";
    } else {
      int i = ++tally[{n, ord}];
      e.label = "l" + std::to_string(l) + "n" + std::to_string(n) + "-o" +
                std::to_string(ord) + "-" + std::to_string(i);
    }
  }
  return entries;
}

} // namespace primex
