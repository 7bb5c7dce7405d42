#include "primex/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "primex/error.hpp"
#include "primex/parallel.hpp"

namespace primex {

namespace {

using UInt128 = unsigned __int128;

int v2_128(Int128 x) {
  UInt128 u = static_cast<UInt128>(x);
  std::uint64_t lo = static_cast<std::uint64_t>(u);
  if (lo != 0)
    return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(u >> 64));
}

Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorCode::Guard, "integer overflow past 128 bits");
  return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorCode::Guard, "integer overflow past 128 bits");
  return r;
}

std::uint64_t low64(Int128 x) {
  return static_cast<std::uint64_t>(static_cast<UInt128>(x));
}

// 1/u mod 2^64 for odd u, by Newton iteration (u*u = 1 mod 8 seeds 3 bits,
// each step doubles them).
std::uint64_t odd_inverse64(std::uint64_t u) {
  std::uint64_t y = u;
  for (int i = 0; i < 5; ++i)
    y *= 2 - u * y;
  return y;
}

} // namespace

std::string int128_to_string(Int128 v) {
  if (v == 0)
    return "0";
  bool negative = v < 0;
  UInt128 u = negative ? -static_cast<UInt128>(v) : static_cast<UInt128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative)
    digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

TwoAdicNumber TwoAdicNumber::zero() { return TwoAdicNumber(); }

TwoAdicNumber TwoAdicNumber::from_integer(Int128 x) {
  TwoAdicNumber r;
  if (x == 0)
    return r;
  r._zero = false;
  r._valuation = v2_128(x);
  Int128 odd = x >> r._valuation;
  r._unit = low64(odd);
  r._known_bits = 64;
  r._exact = odd == static_cast<Int128>(static_cast<std::int64_t>(r._unit));
  return r;
}

TwoAdicNumber TwoAdicNumber::approximate(int valuation, std::uint64_t unit,
                                         int known_bits) {
  if ((unit & 1) == 0)
    fail(ErrorCode::Domain, "unit part must be odd");
  if (known_bits < 1 || known_bits > 64)
    fail(ErrorCode::Domain, "known bits must be between 1 and 64");
  TwoAdicNumber r;
  r._zero = false;
  r._exact = false;
  r._valuation = valuation;
  r._unit = known_bits == 64 ? unit : unit & ((std::uint64_t{1} << known_bits) - 1);
  r._known_bits = known_bits;
  return r;
}

int TwoAdicNumber::valuation() const {
  if (_zero)
    fail(ErrorCode::Domain, "zero has no valuation");
  return _valuation;
}

std::uint64_t TwoAdicNumber::unit() const {
  if (_zero)
    fail(ErrorCode::Domain, "zero has no unit part");
  return _unit;
}

TwoAdicNumber add(TwoAdicNumber const &a, TwoAdicNumber const &b) {
  if (a._zero)
    return b;
  if (b._zero)
    return a;
  TwoAdicNumber const &lo = a._valuation <= b._valuation ? a : b;
  TwoAdicNumber const &hi = a._valuation <= b._valuation ? b : a;
  int d = hi._valuation - lo._valuation;

  if (lo._exact && hi._exact && d <= 62) {
    Int128 s = static_cast<Int128>(static_cast<std::int64_t>(lo._unit)) +
               (static_cast<Int128>(static_cast<std::int64_t>(hi._unit)) << d);
    if (s == 0)
      return TwoAdicNumber::zero();
    int extra = v2_128(s);
    Int128 odd = s >> extra;
    TwoAdicNumber r;
    r._zero = false;
    r._valuation = lo._valuation + extra;
    r._unit = low64(odd);
    r._known_bits = 64;
    r._exact = odd == static_cast<Int128>(static_cast<std::int64_t>(r._unit));
    return r;
  }

  if (d > 0) {
    TwoAdicNumber r;
    r._zero = false;
    r._exact = false;
    r._valuation = lo._valuation;
    r._unit = lo._unit + (d < 64 ? hi._unit << d : 0);
    r._known_bits = std::min({lo._known_bits, hi._known_bits + d, 64});
    return r;
  }

  // Equal valuations and at least one side approximate: the sum of the
  // units may cancel low bits, and cancellation past the known precision
  // cannot be told apart from zero.
  int k0 = std::min(lo._known_bits, hi._known_bits);
  std::uint64_t s = lo._unit + hi._unit;
  std::uint64_t mask = k0 == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << k0) - 1;
  if ((s & mask) == 0)
    fail(ErrorCode::Precision, "cancellation exceeds the known precision");
  int t = std::countr_zero(s);
  TwoAdicNumber r;
  r._zero = false;
  r._exact = false;
  r._valuation = lo._valuation + t;
  r._unit = s >> t;
  r._known_bits = k0 - t;
  return r;
}

TwoAdicNumber mul(TwoAdicNumber const &a, TwoAdicNumber const &b) {
  if (a._zero || b._zero)
    return TwoAdicNumber::zero();
  TwoAdicNumber r;
  r._zero = false;
  r._valuation = a._valuation + b._valuation;
  r._unit = a._unit * b._unit;
  r._known_bits = std::min(a._known_bits, b._known_bits);
  r._exact = false;
  if (a._exact && b._exact) {
    Int128 p = static_cast<Int128>(static_cast<std::int64_t>(a._unit)) *
               static_cast<Int128>(static_cast<std::int64_t>(b._unit));
    r._exact = p == static_cast<Int128>(static_cast<std::int64_t>(r._unit));
    r._known_bits = 64;
  }
  return r;
}

TwoAdicNumber neg(TwoAdicNumber const &a) {
  if (a._zero)
    return a;
  TwoAdicNumber r = a;
  r._unit = ~a._unit + 1;
  r._exact = a._exact &&
             static_cast<std::int64_t>(a._unit) != INT64_MIN;
  return r;
}

TwoAdicNumber inv(TwoAdicNumber const &a) {
  if (a._zero)
    fail(ErrorCode::Domain, "zero has no inverse");
  TwoAdicNumber r;
  r._zero = false;
  r._valuation = -a._valuation;
  r._unit = odd_inverse64(a._unit);
  r._known_bits = a._known_bits;
  std::int64_t au = static_cast<std::int64_t>(a._unit);
  r._exact = a._exact && (au == 1 || au == -1);
  return r;
}

bool is_square_q2(TwoAdicNumber const &x) {
  if (x.is_zero())
    return true;
  if (x.known_bits() < 3)
    fail(ErrorCode::Precision, "squareness needs the unit mod 8");
  return (x.valuation() & 1) == 0 && (x.unit() & 7) == 1;
}

Int128 discriminant_quartic(Quartic const &f) {
  // Shift to the depressed form x = y - a/4 (discriminant-preserving) with
  // denominators cleared: P = 8p, Q = 8q, R = 256r for the depressed
  // coefficients p, q, r. Then 2^16 disc =
  //   R^3 - 2 P^2 R^2 + 72 P Q^2 R - 8 P^3 Q^2 + P^4 R - 432 Q^4.
  Int128 a = f.a, b = f.b, c = f.c, d = f.d;
  Int128 a2 = checked_mul(a, a);
  Int128 P = checked_add(checked_mul(8, b), -checked_mul(3, a2));
  Int128 Q = checked_add(checked_add(checked_mul(8, c), -checked_mul(4, checked_mul(a, b))),
                         checked_mul(a, a2));
  Int128 R = checked_add(
      checked_add(checked_mul(256, d), -checked_mul(64, checked_mul(a, c))),
      checked_add(checked_mul(16, checked_mul(a2, b)),
                  -checked_mul(3, checked_mul(a2, a2))));

  Int128 P2 = checked_mul(P, P);
  Int128 Q2 = checked_mul(Q, Q);
  Int128 R2 = checked_mul(R, R);
  Int128 s = checked_mul(R, R2);
  s = checked_add(s, -checked_mul(2, checked_mul(P2, R2)));
  s = checked_add(s, checked_mul(72, checked_mul(P, checked_mul(Q2, R))));
  s = checked_add(s, -checked_mul(8, checked_mul(P, checked_mul(P2, Q2))));
  s = checked_add(s, checked_mul(checked_mul(P2, P2), R));
  s = checked_add(s, -checked_mul(432, checked_mul(Q2, Q2)));
  if (low64(s) & 0xFFFF)
    fail(ErrorCode::Defect, "quartic discriminant is not integral");
  return s >> 16;
}

Int128 discriminant_cubic(Cubic const &g) {
  Int128 a = g.c2, b = g.c1, c = g.c0;
  Int128 s = checked_mul(18, checked_mul(a, checked_mul(b, c)));
  s = checked_add(s, -checked_mul(4, checked_mul(a, checked_mul(a, checked_mul(a, c)))));
  s = checked_add(s, checked_mul(checked_mul(a, a), checked_mul(b, b)));
  s = checked_add(s, -checked_mul(4, checked_mul(b, checked_mul(b, b))));
  s = checked_add(s, -checked_mul(27, checked_mul(c, c)));
  return s;
}

Cubic resolvent_cubic(Quartic const &f) {
  Cubic g;
  g.c2 = -f.b;
  g.c1 = checked_add(checked_mul(f.a, f.c), -checked_mul(4, f.d));
  g.c0 = -checked_add(
      checked_add(checked_mul(checked_mul(f.a, f.a), f.d), checked_mul(f.c, f.c)),
      -checked_mul(4, checked_mul(f.b, f.d)));
  return g;
}

namespace {

constexpr std::size_t RESIDUE_SET_GUARD = 4096;

// Coefficients of g(2^s z) / 2^mu reduced mod 2^64, where mu is the minimum
// valuation over the terms. Shifting right is exact because mu never
// undercuts a term's own valuation.
struct ScaledCubic {
  std::uint64_t h3, h2, h1, h0;

  std::uint64_t eval(std::uint64_t z) const {
    return ((h3 * z + h2) * z + h1) * z + h0;
  }
  std::uint64_t eval_deriv(std::uint64_t z) const {
    return (3 * h3 * z + 2 * h2) * z + h1;
  }
};

std::uint64_t shifted_low64(Int128 coeff, int e) {
  if (coeff == 0)
    return 0;
  if (e >= 0)
    return e >= 64 ? 0 : low64(coeff) << e;
  return low64(coeff >> (-e));
}

int value_valuation(std::uint64_t v) {
  return v == 0 ? 64 : std::countr_zero(v);
}

} // namespace

CubicRootResult cubic_root_in_q2(Cubic const &g, int precision) {
  if (precision < 16 || precision > 64)
    fail(ErrorCode::Domain, "precision must be between 16 and 64");
  if (discriminant_cubic(g) == 0)
    fail(ErrorCode::Precondition, "cubic must be separable");
  if (g.c0 == 0)
    return {true, 0, 0, 0};

  int const cap = std::min(precision - 8, 56);

  // Newton polygon: candidate root valuations are the negated slopes of
  // the lower hull of (i, v(c_i)); only nonnegative integers can carry a
  // root of a monic integer cubic.
  std::vector<std::pair<int, int>> pts;
  pts.emplace_back(0, v2_128(g.c0));
  if (g.c1 != 0)
    pts.emplace_back(1, v2_128(g.c1));
  if (g.c2 != 0)
    pts.emplace_back(2, v2_128(g.c2));
  pts.emplace_back(3, 0);

  std::vector<std::pair<int, int>> hull;
  for (auto const &p : pts) {
    while (hull.size() >= 2) {
      auto const &q = hull[hull.size() - 1];
      auto const &r = hull[hull.size() - 2];
      // Drop q when it lies on or above the segment r -> p.
      long cross = static_cast<long>(q.first - r.first) * (p.second - r.second) -
                   static_cast<long>(q.second - r.second) * (p.first - r.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  std::vector<int> valuations;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    int di = hull[i + 1].first - hull[i].first;
    int dv = hull[i].second - hull[i + 1].second;
    if (dv % di == 0)
      valuations.push_back(dv / di);
  }
  std::sort(valuations.begin(), valuations.end());
  valuations.erase(std::unique(valuations.begin(), valuations.end()),
                   valuations.end());

  for (int s : valuations) {
    int v0 = v2_128(g.c0);
    int mu = std::min(v0, 3 * s);
    if (g.c1 != 0)
      mu = std::min(mu, s + v2_128(g.c1));
    if (g.c2 != 0)
      mu = std::min(mu, 2 * s + v2_128(g.c2));

    ScaledCubic h{shifted_low64(1, 3 * s - mu), shifted_low64(g.c2, 2 * s - mu),
                  shifted_low64(g.c1, s - mu), shifted_low64(g.c0, -mu)};

    std::vector<std::uint64_t> residues;
    if ((h.eval(1) & 1) == 0)
      residues.push_back(1);

    for (int m = 1; m <= cap && !residues.empty(); ++m) {
      for (std::uint64_t z : residues) {
        int vf = value_valuation(h.eval(z));
        int vd = value_valuation(h.eval_deriv(z));
        if (vd < 32 && vf > 2 * vd)
          return {true, s, z, m};
      }
      if (m == cap)
        fail(ErrorCode::Precision,
             "root search undecided at the precision bound");
      std::uint64_t mask = (std::uint64_t{1} << (m + 1)) - 1;
      std::vector<std::uint64_t> next;
      for (std::uint64_t z : residues)
        for (std::uint64_t cand : {z, z + (std::uint64_t{1} << m)})
          if ((h.eval(cand) & mask) == 0)
            next.push_back(cand);
      if (next.size() > RESIDUE_SET_GUARD)
        fail(ErrorCode::Precision, "residue refinement does not converge");
      residues = std::move(next);
    }
  }
  return {false, 0, 0, 0};
}

char const *quartic_class_name(QuarticClass c) {
  switch (c) {
  case QuarticClass::NotApplicable:
    return "NOT_APPLICABLE";
  case QuarticClass::Imprimitive:
    return "IMPRIMITIVE";
  case QuarticClass::A4:
    return "A4";
  case QuarticClass::S4:
    return "S4";
  }
  return "NOT_APPLICABLE";
}

QuarticReport classify_quartic(Quartic const &f, int precision) {
  QuarticReport report;
  report.poly = f;
  auto mod4 = [](Int128 v) { return static_cast<int>(((v % 4) + 4) % 4); };
  report.eisenstein = f.a % 2 == 0 && f.b % 2 == 0 && f.c % 2 == 0 &&
                      mod4(f.d) == 2;
  if (!report.eisenstein) {
    report.verdict = QuarticClass::NotApplicable;
    return report;
  }

  report.disc = discriminant_quartic(f);
  if (report.disc == 0)
    fail(ErrorCode::Defect, "Eisenstein quartic with vanishing discriminant");
  report.disc_valuation = v2_128(report.disc);
  report.disc_square = is_square_q2(TwoAdicNumber::from_integer(report.disc));

  report.resolvent = resolvent_cubic(f);
  report.resolvent_root = cubic_root_in_q2(report.resolvent, precision);
  report.resolvent_has_root = report.resolvent_root.has_root;

  if (report.resolvent_has_root)
    report.verdict = QuarticClass::Imprimitive;
  else
    report.verdict = report.disc_square ? QuarticClass::A4 : QuarticClass::S4;
  return report;
}

ScanReport eisenstein_scan(int mod_bits, int samples_per_class) {
  if (mod_bits < 1 || mod_bits > 6)
    fail(ErrorCode::Guard, "scan limited to mod_bits between 1 and 6");
  if (samples_per_class < 0)
    fail(ErrorCode::Domain, "sample count must be nonnegative");

  std::uint64_t const box = std::uint64_t{1} << mod_bits;
  std::uint64_t const d_count = box / 2;
  std::uint64_t const total = box * box * box * d_count;

  auto quartic_at = [&](std::uint64_t idx) {
    std::uint64_t di = idx % d_count;
    idx /= d_count;
    std::uint64_t c = idx % box;
    idx /= box;
    std::uint64_t b = idx % box;
    std::uint64_t a = idx / box;
    Quartic f;
    f.a = static_cast<Int128>(2 * a);
    f.b = static_cast<Int128>(2 * b);
    f.c = static_cast<Int128>(2 * c);
    f.d = static_cast<Int128>(2 * (2 * di + 1));
    return f;
  };

  struct Partial {
    std::uint64_t imprimitive = 0, a4 = 0, s4 = 0;
    std::vector<ScanSample> imp_s, a4_s, s4_s;
    std::exception_ptr error;
  };

  int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(thread_budget()), total));
  std::vector<Partial> parts(workers);
  std::vector<std::thread> threads;
  std::uint64_t chunk = (total + workers - 1) / workers;

  auto run = [&](int w) {
    Partial &p = parts[w];
    try {
      std::uint64_t begin = w * chunk;
      std::uint64_t end = std::min(total, begin + chunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        Quartic f = quartic_at(i);
        QuarticReport r = classify_quartic(f);
        switch (r.verdict) {
        case QuarticClass::Imprimitive:
          ++p.imprimitive;
          if (p.imp_s.size() < static_cast<std::size_t>(samples_per_class))
            p.imp_s.push_back({f, r.verdict});
          break;
        case QuarticClass::A4:
          ++p.a4;
          if (p.a4_s.size() < static_cast<std::size_t>(samples_per_class))
            p.a4_s.push_back({f, r.verdict});
          break;
        case QuarticClass::S4:
          ++p.s4;
          if (p.s4_s.size() < static_cast<std::size_t>(samples_per_class))
            p.s4_s.push_back({f, r.verdict});
          break;
        case QuarticClass::NotApplicable:
          fail(ErrorCode::Defect, "scan produced a non-Eisenstein quartic");
        }
      }
    } catch (...) {
      p.error = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w)
      threads.emplace_back(run, w);
    for (auto &t : threads)
      t.join();
  }

  ScanReport report;
  report.mod_bits = mod_bits;
  report.total = total;
  std::vector<ScanSample> imp_s, a4_s, s4_s;
  auto take = [samples_per_class](std::vector<ScanSample> &dst,
                                  std::vector<ScanSample> const &src) {
    for (auto const &sample : src)
      if (dst.size() < static_cast<std::size_t>(samples_per_class))
        dst.push_back(sample);
  };
  for (auto &p : parts) {
    if (p.error)
      std::rethrow_exception(p.error);
    report.imprimitive += p.imprimitive;
    report.a4 += p.a4;
    report.s4 += p.s4;
    take(imp_s, p.imp_s);
    take(a4_s, p.a4_s);
    take(s4_s, p.s4_s);
  }
  for (auto const *v : {&imp_s, &a4_s, &s4_s})
    report.samples.insert(report.samples.end(), v->begin(), v->end());
  return report;
}

} // namespace primex
