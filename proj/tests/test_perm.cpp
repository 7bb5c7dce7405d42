#include <algorithm>
#include <set>

#include "doctest.h"

#include "primex/perm.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace primex;
using testutil::error_code_of;

namespace {

std::vector<oracle::Table> tables_of(PermutationGroup const &g)
{
  std::vector<oracle::Table> out;
  for (auto const &p : g.generators())
    out.push_back(p.images());
  return out;
}

std::vector<oracle::Table> element_tables(PermutationGroup const &g)
{
  std::vector<oracle::Table> out;
  for (auto const &p : g.elements())
    out.push_back(p.images());
  return out;
}

} // namespace

TEST_CASE("permutation composition and inversion")
{
  Permutation swap2({1, 0});
  CHECK(compose(swap2, swap2) == Permutation::identity(2));

  Permutation cyc({1, 2, 0});
  CHECK(compose(cyc, Permutation::identity(3)) == cyc);
  CHECK(compose(Permutation::identity(3), cyc) == cyc);

  // b acts first: (a o b)(i) = a(b(i))
  Permutation a({1, 0, 2});
  Permutation b({1, 2, 0});
  CHECK(compose(a, b) == Permutation({0, 2, 1}));
  CHECK(compose(b, a) == Permutation({2, 1, 0}));

  CHECK(compose(cyc, inverse(cyc)) == Permutation::identity(3));
  CHECK(conjugate(cyc, Permutation::identity(3)) == cyc);

  // x^-1 g x moves relabeled points: conjugating the 3-cycle (0 1 2) by
  // the transposition (0 1) gives (1 0 2) = the cycle through the images.
  Permutation g({1, 2, 0});
  Permutation x({1, 0, 2});
  CHECK(conjugate(g, x) == Permutation({2, 0, 1}));
}

TEST_CASE("permutation validation")
{
  CHECK(error_code_of([] { Permutation p({0, 0}); }) == ErrorCode::Domain);
  CHECK(error_code_of([] { Permutation p({1, 2}); }) == ErrorCode::Domain);
  CHECK(error_code_of([] { Permutation p(std::vector<int>{}); }) ==
        ErrorCode::Domain);
  CHECK(error_code_of([] {
          compose(Permutation({1, 0}), Permutation({1, 2, 0}));
        }) == ErrorCode::Domain);
}

TEST_CASE("group orders match exhaustive closure")
{
  auto check_order = [](PermutationGroup const &g) {
    auto closure = oracle::closure_elements(tables_of(g));
    CHECK(g.order() == Order(closure.size()));
    CHECK(element_tables(g) == closure);
  };
  check_order(fixtures::c2());
  check_order(fixtures::c3());
  check_order(fixtures::s3());
  check_order(fixtures::c4());
  check_order(fixtures::v4());
  check_order(fixtures::d4());
  check_order(fixtures::a4());
  check_order(fixtures::s4());
  check_order(fixtures::c5());
  check_order(fixtures::d5());
  check_order(fixtures::f20());
  check_order(fixtures::a5());
  check_order(fixtures::s5());
  check_order(fixtures::c6());
  check_order(fixtures::s3_regular());
  check_order(fixtures::d6());
  check_order(fixtures::psl25());
  check_order(fixtures::c7());
  check_order(fixtures::f21());
  check_order(fixtures::f42());
  check_order(fixtures::q8_regular());
  check_order(fixtures::d4_regular());

  CHECK(fixtures::a4().order() == 12);
  CHECK(fixtures::s4().order() == 24);
  CHECK(fixtures::a5().order() == 60);
  CHECK(fixtures::s5().order() == 120);
  CHECK(fixtures::psl25().order() == 60);
  CHECK(fixtures::f21().order() == 21);
  CHECK(fixtures::f42().order() == 42);
  CHECK(fixtures::q8_regular().order() == 8);
  CHECK(fixtures::d4_regular().order() == 8);
  CHECK(PermutationGroup::trivial(5).order() == 1);
}

TEST_CASE("membership agrees with the element set")
{
  auto g = fixtures::a4();
  std::set<std::vector<int>> members;
  for (auto const &e : g.elements())
    members.insert(e.images());

  // every element of S4 is either in A4 or correctly rejected
  auto s4 = fixtures::s4();
  for (auto const &e : s4.elements())
    CHECK(g.contains(e) == (members.count(e.images()) != 0));

  CHECK(error_code_of([&] { g.contains(Permutation({1, 0})); }) ==
        ErrorCode::Domain);
}

TEST_CASE("orbits and transitivity")
{
  PermutationGroup cyc = fixtures::c3();
  CHECK(orbit(cyc, 0) == std::vector<int>{0, 1, 2});

  PermutationGroup fix2({Permutation({1, 0, 2})});
  CHECK(orbit(fix2, 2) == std::vector<int>{2});
  CHECK_FALSE(is_transitive(fix2));

  PermutationGroup pairs({Permutation({1, 0, 3, 2})});
  CHECK(orbit(pairs, 0) == std::vector<int>{0, 1});
  CHECK(orbits(pairs) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  CHECK(is_transitive(fixtures::a4()));
  CHECK(error_code_of([&] { orbit(cyc, 3); }) == ErrorCode::Domain);

  // orbit sizes always partition the degree
  for (auto const &g : {fixtures::d4(), fix2, pairs, fixtures::psl25()}) {
    int total = 0;
    for (auto const &o : orbits(g))
      total += static_cast<int>(o.size());
    CHECK(total == g.degree());
  }
}

TEST_CASE("orbit-stabilizer identity at every point")
{
  for (auto const &g : {fixtures::s4(), fixtures::d4(), fixtures::f20(),
                        fixtures::psl25(), fixtures::s3_regular()}) {
    for (int p = 0; p < g.degree(); ++p) {
      auto stab = point_stabilizer(g, p);
      CHECK(g.order() ==
            Order(orbit(g, p).size()) * stab.order());
    }
  }
}

TEST_CASE("point stabilizers by exhaustive filter")
{
  auto brute_stab = [](PermutationGroup const &g, int p) {
    std::set<std::vector<int>> out;
    for (auto const &e : g.elements())
      if (e[p] == p)
        out.insert(e.images());
    return out;
  };
  for (auto const &g : {fixtures::s4(), fixtures::a4(), fixtures::d5()}) {
    auto stab = point_stabilizer(g, 0);
    std::set<std::vector<int>> got;
    for (auto const &e : stab.elements())
      got.insert(e.images());
    CHECK(got == brute_stab(g, 0));
  }
  CHECK(point_stabilizer(fixtures::s4(), 0).order() == 6);
  CHECK(point_stabilizer(fixtures::a4(), 0).order() == 3);

  PermutationGroup fix2({Permutation({1, 0, 2})});
  CHECK(point_stabilizer(fix2, 2).order() == fix2.order());
}

TEST_CASE("derived series and solvability")
{
  auto series_orders = [](PermutationGroup const &g) {
    std::vector<std::uint64_t> out;
    for (auto const &term : derived_series(g))
      out.push_back(term.order_u64());
    return out;
  };

  CHECK(series_orders(fixtures::s4()) ==
        std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(series_orders(fixtures::a4()) == std::vector<std::uint64_t>{12, 4, 1});
  CHECK(series_orders(fixtures::c3()) == std::vector<std::uint64_t>{3, 1});
  // S5's series stabilizes at the perfect group A5
  CHECK(series_orders(fixtures::s5()) ==
        std::vector<std::uint64_t>{120, 60});

  CHECK(is_solvable(fixtures::s4()));
  CHECK(is_solvable(fixtures::q8_regular()));
  CHECK_FALSE(is_solvable(fixtures::s5()));
  CHECK_FALSE(is_solvable(fixtures::a5()));
  CHECK_FALSE(is_solvable(fixtures::psl25()));

  CHECK(derived_length(fixtures::s4()) == 3);
  CHECK(derived_length(fixtures::c3()) == 1);

  // orders must match the all-pairs commutator oracle
  for (auto const &g : {fixtures::s4(), fixtures::d4(), fixtures::f20(),
                        fixtures::f21(), fixtures::q8_regular(),
                        fixtures::s5()})
    CHECK(series_orders(g) == oracle::brute_derived_orders(tables_of(g)));

  // every term is normal in the whole group
  auto g = fixtures::s4();
  for (auto const &term : derived_series(g))
    CHECK(is_normal_in(g, term));
}

TEST_CASE("normal closure")
{
  auto s4 = fixtures::s4();
  // a transposition generates all of S4 as a normal subgroup
  CHECK(normal_closure(s4, {Permutation({1, 0, 2, 3})}).order() == 24);
  // a double transposition generates the Klein four-group
  auto v = normal_closure(s4, {Permutation({1, 0, 3, 2})});
  CHECK(v.order() == 4);
  CHECK(same_group(v, fixtures::v4()));
  // a 3-cycle generates A4
  CHECK(normal_closure(s4, {Permutation({1, 2, 0, 3})}).order() == 12);
  // the identity seed closes to the trivial group
  CHECK(normal_closure(s4, {Permutation::identity(4)}).order() == 1);

  // oracle: close the set of all conjugates of the seed
  auto brute_normal_closure = [](PermutationGroup const &g,
                                 Permutation const &seed) {
    std::set<oracle::Table> conj;
    for (auto const &x : g.elements())
      conj.insert(conjugate(seed, x).images());
    return oracle::closure_elements({conj.begin(), conj.end()}).size();
  };
  auto q8 = fixtures::q8_regular();
  for (auto const &g : {s4, fixtures::a4(), q8, fixtures::f21()})
    for (auto const &e : g.elements()) {
      if (e.is_identity())
        continue;
      CHECK(normal_closure(g, {e}).order() ==
            Order(brute_normal_closure(g, e)));
    }
}

TEST_CASE("subgroup enumeration against brute force")
{
  auto subgroup_element_sets = [](PermutationGroup const &g,
                                  bool up_to_conjugacy) {
    std::set<std::vector<oracle::Table>> out;
    for (auto const &s : enumerate_subgroups(g, up_to_conjugacy).subgroups)
      out.insert(element_tables(s));
    return out;
  };

  for (auto const &g :
       {fixtures::c4(), fixtures::v4(), fixtures::s3(), fixtures::d4(),
        fixtures::a4(), fixtures::s4(), fixtures::c6(), fixtures::q8_regular(),
        fixtures::d4_regular(), fixtures::f21()}) {
    auto brute = oracle::brute_subgroups(element_tables(g));
    auto got = subgroup_element_sets(g, false);
    CHECK(got == std::set<std::vector<oracle::Table>>(brute.begin(),
                                                      brute.end()));
  }

  CHECK(enumerate_subgroups(fixtures::c4(), false).subgroups.size() == 3);
  CHECK(enumerate_subgroups(fixtures::s3(), false).subgroups.size() == 6);
  CHECK(enumerate_subgroups(fixtures::s3(), true).subgroups.size() == 4);
  CHECK(enumerate_subgroups(fixtures::a4(), false).subgroups.size() == 10);
  CHECK(enumerate_subgroups(fixtures::a4(), true).subgroups.size() == 5);
  CHECK(enumerate_subgroups(fixtures::s4(), false).subgroups.size() == 30);
  CHECK(enumerate_subgroups(fixtures::s4(), true).subgroups.size() == 11);

  // every listed subgroup's elements pass parent membership
  auto s4 = fixtures::s4();
  for (auto const &s : enumerate_subgroups(s4, false).subgroups)
    for (auto const &e : s.elements())
      CHECK(s4.contains(e));

  // conjugacy representatives are pairwise non-conjugate
  auto classes = enumerate_subgroups(s4, true).subgroups;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      bool conj = false;
      for (auto const &x : s4.elements()) {
        std::vector<Permutation> moved;
        for (auto const &e : classes[i].elements())
          moved.push_back(conjugate(e, x));
        PermutationGroup c(std::move(moved));
        if (same_group(c, classes[j])) {
          conj = true;
          break;
        }
      }
      CHECK_FALSE(conj);
    }

  // the guard rejects groups beyond order 200
  PermutationGroup big({Permutation({1, 2, 3, 4, 5, 6, 7, 0}),
                        Permutation({1, 0, 2, 3, 4, 5, 6, 7})});
  REQUIRE(big.order() > 200);
  CHECK(error_code_of([&] { enumerate_subgroups(big, false); }) ==
        ErrorCode::Guard);
}

TEST_CASE("maximal subgroups")
{
  auto s4 = fixtures::s4();
  CHECK(is_maximal(s4, point_stabilizer(s4, 0)));
  CHECK(is_maximal(fixtures::a4(), fixtures::v4()));
  CHECK_FALSE(is_maximal(fixtures::c4(), PermutationGroup::trivial(4)));
  CHECK_FALSE(is_maximal(s4, fixtures::c4()));
  CHECK(error_code_of([&] { is_maximal(s4, fixtures::c3()); }) ==
        ErrorCode::Domain);
  CHECK(error_code_of([&] {
          // a transposition is not inside the Klein four-group
          PermutationGroup odd({Permutation({0, 2, 1, 3})});
          PermutationGroup v4 = fixtures::v4();
          is_maximal(v4, odd);
        }) == ErrorCode::Precondition);
}

TEST_CASE("order formatting")
{
  CHECK(order_to_string(Order(0)) == "0");
  CHECK(order_to_string(Order(432)) == "432");
  Order big = 1;
  for (int i = 0; i < 70; ++i)
    big *= 2;
  CHECK(order_to_string(big) == "1180591620717411303424");
}
