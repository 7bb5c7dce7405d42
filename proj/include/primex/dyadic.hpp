#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace primex {

using Int128 = __int128;

std::string int128_to_string(Int128 v);

// An element of Q_2 as 2^valuation * unit with the odd unit known modulo
// 2^known_bits (at most 64). `exact` marks values known to equal
// 2^valuation * (signed 64-bit reading of unit) on the nose; arithmetic
// that cannot preserve that downgrades to approximate, and operations that
// would need more bits than are known raise a precision error.
class TwoAdicNumber {
public:
  static TwoAdicNumber zero();
  static TwoAdicNumber from_integer(Int128 x);
  // An approximate unit for tests and truncated data.
  static TwoAdicNumber approximate(int valuation, std::uint64_t unit,
                                   int known_bits);

  bool is_zero() const { return _zero; }
  int valuation() const; // domain error on zero
  std::uint64_t unit() const;
  int known_bits() const { return _known_bits; }
  bool exact() const { return _exact; }

private:
  TwoAdicNumber() = default;

  bool _zero = true;
  bool _exact = true;
  int _valuation = 0;
  int _known_bits = 64;
  std::uint64_t _unit = 1;

  friend TwoAdicNumber add(TwoAdicNumber const &, TwoAdicNumber const &);
  friend TwoAdicNumber mul(TwoAdicNumber const &, TwoAdicNumber const &);
  friend TwoAdicNumber neg(TwoAdicNumber const &);
  friend TwoAdicNumber inv(TwoAdicNumber const &);
};

TwoAdicNumber add(TwoAdicNumber const &a, TwoAdicNumber const &b);
TwoAdicNumber mul(TwoAdicNumber const &a, TwoAdicNumber const &b);
TwoAdicNumber neg(TwoAdicNumber const &a);
TwoAdicNumber inv(TwoAdicNumber const &a);

// Squares of Q_2: zero, and 2^v * u with v even and u = 1 mod 8.
bool is_square_q2(TwoAdicNumber const &x);

// Monic integer quartic x^4 + a x^3 + b x^2 + c x + d.
struct Quartic {
  Int128 a = 0, b = 0, c = 0, d = 0;
};

// Monic integer cubic y^3 + c2 y^2 + c1 y + c0.
struct Cubic {
  Int128 c2 = 0, c1 = 0, c0 = 0;
};

// Exact integer discriminants. Overflow past 128 bits raises a guard error.
Int128 discriminant_quartic(Quartic const &f);
Int128 discriminant_cubic(Cubic const &g);

// The cubic resolvent y^3 - b y^2 + (ac - 4d) y - (a^2 d + c^2 - 4bd),
// whose roots are the three sums x_i x_j + x_k x_m of the quartic's roots.
Cubic resolvent_cubic(Quartic const &f);

// Decides whether a separable monic integer cubic has a root in Q_2 (all
// such roots lie in Z_2). Valuation candidates come from the lower Newton
// hull; unit parts are found by refining residues mod 2^m with a Hensel
// certificate. Undecided at the precision bound raises a precision error.
struct CubicRootResult {
  bool has_root = false;
  int valuation = 0;          // of the certified root
  std::uint64_t unit = 1;     // odd part of the root, mod 2^unit_bits
  int unit_bits = 0;
};
CubicRootResult cubic_root_in_q2(Cubic const &g, int precision = 64);

enum class QuarticClass { NotApplicable, Imprimitive, A4, S4 };
char const *quartic_class_name(QuarticClass c);

// Classification of the field Q_2[x]/(f) for Eisenstein f: the extension
// has a quadratic subfield exactly when the resolvent cubic has a root in
// Q_2; otherwise the Galois closure is A4 or S4 according to whether the
// discriminant is a square in Q_2.
struct QuarticReport {
  Quartic poly;
  bool eisenstein = false;
  QuarticClass verdict = QuarticClass::NotApplicable;
  Int128 disc = 0;
  int disc_valuation = 0;
  bool disc_square = false;
  Cubic resolvent;
  bool resolvent_has_root = false;
  CubicRootResult resolvent_root; // meaningful when resolvent_has_root
};
QuarticReport classify_quartic(Quartic const &f, int precision = 64);

// Sweep of all Eisenstein quartics x^4 + 2a x^3 + 2b x^2 + 2c x + 2d with
// a, b, c in [0, 2^mod_bits) and odd d in [1, 2^mod_bits). Guard:
// mod_bits <= 6. Parallel over PRIMEX_THREADS workers, deterministic order.
struct ScanSample {
  Quartic poly;
  QuarticClass verdict = QuarticClass::NotApplicable;
};
struct ScanReport {
  int mod_bits = 0;
  std::uint64_t total = 0;
  std::uint64_t imprimitive = 0, a4 = 0, s4 = 0;
  std::vector<ScanSample> samples; // first few of each class, scan order
};
ScanReport eisenstein_scan(int mod_bits, int samples_per_class = 5);

} // namespace primex
