#include <cstdlib>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"

#include "primex/dyadic.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

using namespace primex;
using testutil::error_code_of;

namespace {

Int128 eval_cubic(Cubic const &g, Int128 y)
{
  return ((y + g.c2) * y + g.c1) * y + g.c0;
}

Int128 eval_cubic_deriv(Cubic const &g, Int128 y)
{
  return (3 * y + 2 * g.c2) * y + g.c1;
}

int v2_or_large(Int128 v)
{
  if (v == 0)
    return 1 << 20;
  int k = 0;
  while ((v & 1) == 0) {
    v >>= 1;
    ++k;
  }
  return k;
}

// Re-derives the Hensel certificate of a reported resolvent root with exact
// 128-bit arithmetic: on the Newton-scaled polynomial the value valuation
// must exceed twice the derivative valuation.
void check_root_certificate(Cubic const &g, CubicRootResult const &root)
{
  REQUIRE(root.has_root);
  if (root.unit == 0) {
    CHECK(g.c0 == 0);
    return;
  }
  CHECK((root.unit & 1) == 1);
  if (root.unit >= (std::uint64_t{1} << 40))
    return; // residue too wide to cube exactly; covered by smaller samples
  int s = root.valuation;
  int mu = std::min<int>(v2_or_large(g.c0), 3 * s);
  if (g.c1 != 0)
    mu = std::min(mu, s + v2_or_large(g.c1));
  if (g.c2 != 0)
    mu = std::min(mu, 2 * s + v2_or_large(g.c2));
  Int128 r = static_cast<Int128>(root.unit) << s;
  int vf = v2_or_large(eval_cubic(g, r)) - mu;
  int vd = v2_or_large(eval_cubic_deriv(g, r)) - (mu - s);
  CHECK(vf > 2 * vd);
}

Quartic random_eisenstein(std::mt19937 &rng)
{
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  Quartic f;
  f.a = 2 * pick(-4, 4);
  f.b = 2 * pick(-4, 4);
  f.c = 2 * pick(-4, 4);
  f.d = 4 * pick(-2, 2) + 2;
  return f;
}

Quartic shift_by(Quartic const &f, Int128 s)
{
  Quartic g;
  g.a = f.a + 4 * s;
  g.b = f.b + 3 * f.a * s + 6 * s * s;
  g.c = f.c + 2 * f.b * s + 3 * f.a * s * s + 4 * s * s * s;
  g.d = f.d + f.c * s + f.b * s * s + f.a * s * s * s + s * s * s * s;
  return g;
}

} // namespace

TEST_CASE("two-adic number arithmetic")
{
  auto twelve = TwoAdicNumber::from_integer(12);
  CHECK(twelve.valuation() == 2);
  CHECK(twelve.unit() == 3);
  CHECK(twelve.exact());

  CHECK(TwoAdicNumber::from_integer(0).is_zero());
  CHECK(error_code_of([] { TwoAdicNumber::from_integer(0).valuation(); }) ==
        ErrorCode::Domain);
  CHECK(error_code_of([] { TwoAdicNumber::zero().unit(); }) ==
        ErrorCode::Domain);

  auto eight = add(TwoAdicNumber::from_integer(3), TwoAdicNumber::from_integer(5));
  CHECK(eight.valuation() == 3);
  CHECK(eight.unit() == 1);
  CHECK(eight.exact());
  CHECK(add(TwoAdicNumber::from_integer(2), TwoAdicNumber::from_integer(2))
            .valuation() == 2);
  CHECK(add(TwoAdicNumber::from_integer(6), TwoAdicNumber::from_integer(2))
            .valuation() == 3);
  CHECK(add(TwoAdicNumber::from_integer(5),
            neg(TwoAdicNumber::from_integer(5)))
            .is_zero());

  auto prod = mul(TwoAdicNumber::from_integer(12), TwoAdicNumber::from_integer(10));
  CHECK(prod.valuation() == 3);
  CHECK(prod.unit() == 15);

  // approximate units: valuation jumps consume known bits
  auto jump = add(TwoAdicNumber::approximate(0, 3, 8),
                  TwoAdicNumber::approximate(0, 5, 8));
  CHECK(jump.valuation() == 3);
  CHECK(jump.unit() == 1);
  CHECK(jump.known_bits() == 5);
  CHECK_FALSE(jump.exact());

  // full cancellation within the window is indistinguishable from zero
  CHECK(error_code_of([] {
          add(TwoAdicNumber::approximate(0, 3, 8),
              TwoAdicNumber::approximate(0, 253, 8));
        }) == ErrorCode::Precision);

  auto third = inv(TwoAdicNumber::from_integer(3));
  CHECK(third.valuation() == 0);
  CHECK(third.unit() % (std::uint64_t{1} << 17) == 43691);
  auto one = mul(TwoAdicNumber::from_integer(3), third);
  CHECK(one.valuation() == 0);
  CHECK(one.unit() == 1);
  CHECK(inv(TwoAdicNumber::from_integer(12)).valuation() == -2);

  CHECK(error_code_of([] { inv(TwoAdicNumber::zero()); }) == ErrorCode::Domain);
  CHECK(error_code_of([] { TwoAdicNumber::approximate(1, 4, 8); }) ==
        ErrorCode::Domain);
  CHECK(error_code_of([] { TwoAdicNumber::approximate(0, 3, 70); }) ==
        ErrorCode::Domain);
}

TEST_CASE("squares of the two-adic field")
{
  auto sq = [](Int128 v) {
    return is_square_q2(TwoAdicNumber::from_integer(v));
  };
  CHECK(sq(0));
  CHECK(sq(3136)); // 56^2
  CHECK(sq(17));
  CHECK(sq(25));
  CHECK(sq(144));
  CHECK_FALSE(sq(2048)); // odd valuation
  CHECK_FALSE(sq(-2608));
  CHECK_FALSE(sq(-25));
  CHECK_FALSE(sq(3));
  CHECK_FALSE(sq(7));

  // the mod-8 criterion agrees with the finite square residues mod 32
  std::set<int> residues;
  for (int k = 1; k < 32; k += 2)
    residues.insert(k * k % 32);
  for (int u = 1; u < 32; u += 2)
    CHECK(sq(u) == (residues.count(u % 32) != 0 && u % 8 == 1));
  for (int u = 1; u < 32; u += 2)
    CHECK((residues.count(u) != 0) == (u % 8 == 1));

  // scaling by an odd square never changes squareness
  for (Int128 x : {Int128(3136), Int128(17), Int128(-2608), Int128(12)})
    for (Int128 k : {Int128(9), Int128(25), Int128(49)})
      CHECK(sq(x) == sq(x * k));

  CHECK(is_square_q2(TwoAdicNumber::approximate(0, 1, 3)));
  CHECK_FALSE(is_square_q2(TwoAdicNumber::approximate(1, 1, 3)));
  CHECK(error_code_of([] {
          is_square_q2(TwoAdicNumber::approximate(0, 1, 2));
        }) == ErrorCode::Precision);
}

TEST_CASE("quartic discriminants against the resultant oracle")
{
  auto lib = [](Int128 a, Int128 b, Int128 c, Int128 d) {
    return discriminant_quartic(Quartic{a, b, c, d});
  };
  CHECK(lib(0, 0, 0, 1) == 256);
  CHECK(lib(0, 0, 1, 0) == -27);
  CHECK(lib(0, 0, -2, 2) == 1616);
  CHECK(lib(0, 0, -4, 2) == -4864);
  CHECK(lib(0, -4, 4, -2) == -2816);
  CHECK(lib(0, -2, 2, -2) == -2608);
  CHECK(lib(2, 2, 0, 2) == 3136);
  CHECK(lib(0, 0, 0, -2) == -2048);

  std::mt19937 rng(424242);
  auto pick = [&] { return static_cast<int>(rng() % 19) - 9; };
  for (int trial = 0; trial < 100; ++trial) {
    Int128 a = pick(), b = pick(), c = pick(), d = pick();
    CHECK(lib(a, b, c, d) == oracle::sylvester_disc_quartic(a, b, c, d));
  }

  CHECK(error_code_of([] {
          discriminant_quartic(Quartic{0, 0, 0, Int128(1) << 100});
        }) == ErrorCode::Guard);
}

TEST_CASE("resolvent cubic coefficients and discriminant transfer")
{
  auto res = resolvent_cubic(Quartic{0, 0, 0, -2});
  CHECK(res.c2 == 0);
  CHECK(res.c1 == 8);
  CHECK(res.c0 == 0);

  res = resolvent_cubic(Quartic{0, 0, -2, 2});
  CHECK(res.c2 == 0);
  CHECK(res.c1 == -8);
  CHECK(res.c0 == -4);

  res = resolvent_cubic(Quartic{0, -4, 4, -2});
  CHECK(res.c2 == 4);
  CHECK(res.c1 == 8);
  CHECK(res.c0 == 16);

  res = resolvent_cubic(Quartic{0, -2, 2, -2});
  CHECK(res.c2 == 2);
  CHECK(res.c1 == 8);
  CHECK(res.c0 == 12);

  // a quartic and its resolvent share one discriminant, here checked both
  // through the product formula and the independent resultant oracle
  std::mt19937 rng(777);
  auto pick = [&] { return static_cast<int>(rng() % 13) - 6; };
  for (int trial = 0; trial < 100; ++trial) {
    Quartic f{pick(), pick(), pick(), pick()};
    Cubic g = resolvent_cubic(f);
    Int128 df = discriminant_quartic(f);
    CHECK(discriminant_cubic(g) == df);
    CHECK(oracle::sylvester_disc_cubic(g.c2, g.c1, g.c0) == df);
  }
}

TEST_CASE("cubic roots in the two-adic field")
{
  auto zero_root = cubic_root_in_q2(Cubic{0, 8, 0});
  CHECK(zero_root.has_root);
  CHECK(zero_root.unit == 0);

  CHECK_FALSE(cubic_root_in_q2(Cubic{0, -8, -4}).has_root);
  CHECK_FALSE(cubic_root_in_q2(Cubic{2, 8, 12}).has_root);

  auto two = cubic_root_in_q2(Cubic{-2, 1, -2}); // (y^2 + 1)(y - 2)
  CHECK(two.has_root);
  CHECK(two.valuation == 1);
  CHECK(two.unit % (std::uint64_t{1} << two.unit_bits) == 1);
  check_root_certificate(Cubic{-2, 1, -2}, two);

  auto one = cubic_root_in_q2(Cubic{0, 0, -1}); // y^3 - 1
  CHECK(one.has_root);
  CHECK(one.valuation == 0);
  CHECK(one.unit % 2 == 1);
  check_root_certificate(Cubic{0, 0, -1}, one);

  CHECK(error_code_of([] { cubic_root_in_q2(Cubic{0, 0, 0}); }) ==
        ErrorCode::Precondition);
  CHECK(error_code_of([] { cubic_root_in_q2(Cubic{-4, 5, -2}); }) ==
        ErrorCode::Precondition); // (y-1)^2 (y-2)
  CHECK(error_code_of([] { cubic_root_in_q2(Cubic{0, 0, -1}, 8); }) ==
        ErrorCode::Domain);
  CHECK(error_code_of([] { cubic_root_in_q2(Cubic{0, 0, -1}, 65); }) ==
        ErrorCode::Domain);
}

TEST_CASE("classification of Eisenstein quartics")
{
  auto verdict = [](Int128 a, Int128 b, Int128 c, Int128 d) {
    return classify_quartic(Quartic{a, b, c, d}).verdict;
  };

  CHECK(verdict(0, 0, -2, 2) == QuarticClass::S4);
  CHECK(verdict(0, 0, -4, 2) == QuarticClass::S4);
  CHECK(verdict(0, -4, 4, -2) == QuarticClass::S4);
  CHECK(verdict(0, 0, 0, -2) == QuarticClass::Imprimitive);
  CHECK(verdict(0, -2, 2, -2) == QuarticClass::S4);
  CHECK(verdict(2, 2, 0, 2) == QuarticClass::A4);

  // not Eisenstein at 2: odd coefficients or constant term off by a factor
  CHECK(verdict(0, 0, 1, 1) == QuarticClass::NotApplicable);
  CHECK(verdict(0, 0, 0, 4) == QuarticClass::NotApplicable);
  CHECK(verdict(1, 2, 2, 2) == QuarticClass::NotApplicable);

  auto report = classify_quartic(Quartic{0, -2, 2, -2});
  CHECK(report.eisenstein);
  CHECK(report.disc == -2608);
  CHECK(report.disc_valuation == 4);
  CHECK_FALSE(report.disc_square);
  CHECK_FALSE(report.resolvent_has_root);

  auto a4rep = classify_quartic(Quartic{2, 2, 0, 2});
  CHECK(a4rep.disc == 3136);
  CHECK(a4rep.disc_square);
  CHECK_FALSE(a4rep.resolvent_has_root);

  auto imprim = classify_quartic(Quartic{0, 0, 0, -2});
  CHECK(imprim.resolvent_has_root);
  check_root_certificate(imprim.resolvent, imprim.resolvent_root);

  CHECK(std::string(quartic_class_name(QuarticClass::S4)) == "S4");
  CHECK(std::string(quartic_class_name(QuarticClass::A4)) == "A4");
  CHECK(std::string(quartic_class_name(QuarticClass::Imprimitive)) ==
        "IMPRIMITIVE");
  CHECK(std::string(quartic_class_name(QuarticClass::NotApplicable)) ==
        "NOT_APPLICABLE");
}

TEST_CASE("the verdict is invariant under even integer shifts")
{
  // x -> x + 2t preserves both the field and the Eisenstein shape
  std::mt19937 rng(90125);
  std::vector<Quartic> polys{{0, 0, -2, 2},  {0, 0, -4, 2}, {0, -4, 4, -2},
                             {0, 0, 0, -2},  {0, -2, 2, -2}, {2, 2, 0, 2}};
  for (int trial = 0; trial < 20; ++trial)
    polys.push_back(random_eisenstein(rng));
  for (auto const &f : polys) {
    auto base = classify_quartic(f);
    REQUIRE(base.eisenstein);
    for (Int128 t : {Int128(1), Int128(2), Int128(3), Int128(-1)}) {
      auto shifted = classify_quartic(shift_by(f, 2 * t));
      CHECK(shifted.eisenstein);
      CHECK(shifted.verdict == base.verdict);
      CHECK(shifted.disc_square == base.disc_square);
    }
  }
}

TEST_CASE("scanning all Eisenstein quartics modulo a power of two")
{
  auto one = eisenstein_scan(1);
  CHECK(one.mod_bits == 1);
  CHECK(one.total == 8);
  CHECK(one.imprimitive + one.a4 + one.s4 == one.total);

  auto four = eisenstein_scan(4);
  CHECK(four.total == 32768);
  CHECK(four.imprimitive == 10240);
  CHECK(four.a4 == 4096);
  CHECK(four.s4 == 18432);

  // every sample reclassifies to its reported class
  int s4_samples = 0, a4_samples = 0, imprim_samples = 0;
  std::set<std::tuple<long long, long long, long long, long long>> distinct;
  for (auto const &s : four.samples) {
    CHECK(classify_quartic(s.poly).verdict == s.verdict);
    distinct.insert({static_cast<long long>(s.poly.a),
                     static_cast<long long>(s.poly.b),
                     static_cast<long long>(s.poly.c),
                     static_cast<long long>(s.poly.d)});
    if (s.verdict == QuarticClass::S4)
      ++s4_samples;
    if (s.verdict == QuarticClass::A4)
      ++a4_samples;
    if (s.verdict == QuarticClass::Imprimitive)
      ++imprim_samples;
  }
  CHECK(s4_samples == 5);
  CHECK(a4_samples == 5);
  CHECK(imprim_samples == 5);
  CHECK(distinct.size() == four.samples.size());

  // imprimitive samples carry a certified resolvent root
  for (auto const &s : four.samples) {
    if (s.verdict != QuarticClass::Imprimitive)
      continue;
    auto rep = classify_quartic(s.poly);
    REQUIRE(rep.resolvent_has_root);
    check_root_certificate(rep.resolvent, rep.resolvent_root);
  }

  CHECK(error_code_of([] { eisenstein_scan(0); }) == ErrorCode::Guard);
  CHECK(error_code_of([] { eisenstein_scan(7); }) == ErrorCode::Guard);
  CHECK(error_code_of([] { eisenstein_scan(2, -1); }) == ErrorCode::Domain);
}

TEST_CASE("the scan is deterministic across thread counts")
{
  auto base = eisenstein_scan(3, 2);
  setenv("PRIMEX_THREADS", "1", 1);
  auto serial = eisenstein_scan(3, 2);
  unsetenv("PRIMEX_THREADS");
  auto again = eisenstein_scan(3, 2);

  for (auto const *other : {&serial, &again}) {
    CHECK(other->total == base.total);
    CHECK(other->imprimitive == base.imprimitive);
    CHECK(other->a4 == base.a4);
    CHECK(other->s4 == base.s4);
    REQUIRE(other->samples.size() == base.samples.size());
    for (std::size_t i = 0; i < base.samples.size(); ++i) {
      CHECK(other->samples[i].poly.a == base.samples[i].poly.a);
      CHECK(other->samples[i].poly.b == base.samples[i].poly.b);
      CHECK(other->samples[i].poly.c == base.samples[i].poly.c);
      CHECK(other->samples[i].poly.d == base.samples[i].poly.d);
      CHECK(other->samples[i].verdict == base.samples[i].verdict);
    }
  }
}

TEST_CASE("128-bit integers render as decimal strings")
{
  CHECK(int128_to_string(0) == "0");
  CHECK(int128_to_string(-2608) == "-2608");
  CHECK(int128_to_string(Int128(1) << 100) ==
        "1267650600228229401496703205376");
  CHECK(int128_to_string(-(Int128(1) << 100)) ==
        "-1267650600228229401496703205376");
}
