#include "primex/cohomology.hpp"

#include <algorithm>
#include <cstdint>

#include "primex/error.hpp"

namespace primex {

namespace {

constexpr std::uint64_t COHOM_ORDER_GUARD = 48;
constexpr int COHOM_DIM_GUARD = 3;

// Rank engine over F_2. Rows are bit vectors; elimination is word XOR.
class RankEngineF2 final : public RankEngine {
public:
  explicit RankEngineF2(int ncols)
      : _ncols(ncols), _words((ncols + 63) / 64), _pivot_of_col(ncols, -1) {}

  bool add_row(std::vector<std::pair<int, int>> const &entries) override {
    std::vector<std::uint64_t> row(_words, 0);
    for (auto [col, coeff] : entries) {
      if (coeff & 1)
        row[col >> 6] ^= std::uint64_t{1} << (col & 63);
    }
    int word = 0;
    for (;;) {
      while (word < _words && row[word] == 0)
        ++word;
      if (word == _words)
        return false;
      int col = (word << 6) + std::countr_zero(row[word]);
      int p = _pivot_of_col[col];
      if (p < 0) {
        _pivot_of_col[col] = static_cast<int>(_pivots.size());
        _pivots.push_back(std::move(row));
        ++_rank;
        return true;
      }
      auto const &pr = _pivots[p];
      for (int w = word; w < _words; ++w)
        row[w] ^= pr[w];
    }
  }

  int rank() const override { return _rank; }

private:
  int _ncols;
  int _words;
  int _rank = 0;
  std::vector<int> _pivot_of_col;
  std::vector<std::vector<std::uint64_t>> _pivots;
};

// Rank engine over F_3 with bit-sliced rows: value 0 is (lo,hi) = (0,0),
// 1 is (1,0), 2 is (0,1). Addition mod 3 in boolean form, with
// na = ~(a0|a1) and nb = ~(b0|b1):
//   sum_lo = (na & b0) | (a0 & nb) | (a1 & b1)
//   sum_hi = (na & b1) | (a1 & nb) | (a0 & b0)
// Negation swaps the planes. Subtracting 2x a row equals adding it once.
class RankEngineF3 final : public RankEngine {
public:
  explicit RankEngineF3(int ncols)
      : _ncols(ncols), _words((ncols + 63) / 64), _pivot_of_col(ncols, -1) {}

  bool add_row(std::vector<std::pair<int, int>> const &entries) override {
    std::vector<std::uint64_t> lo(_words, 0), hi(_words, 0);
    for (auto [col, coeff] : entries) {
      int c = coeff % 3;
      if (c < 0)
        c += 3;
      if (c == 0)
        continue;
      add_digit(lo, hi, col, c);
    }
    int word = 0;
    for (;;) {
      while (word < _words && (lo[word] | hi[word]) == 0)
        ++word;
      if (word == _words)
        return false;
      int bit = std::countr_zero(lo[word] | hi[word]);
      int col = (word << 6) + bit;
      int lead = static_cast<int>((lo[word] >> bit) & 1) +
                 2 * static_cast<int>((hi[word] >> bit) & 1);
      int p = _pivot_of_col[col];
      if (p < 0) {
        if (lead == 2) {
          // Normalize the leading coefficient to 1 by negating the row.
          std::swap(lo, hi);
        }
        _pivot_of_col[col] = static_cast<int>(_pivots.size());
        _pivots.push_back({std::move(lo), std::move(hi)});
        ++_rank;
        return true;
      }
      auto const &pv = _pivots[p];
      // Pivot has leading coefficient 1. Clearing a lead of 1 adds the
      // negated pivot (planes swapped); a lead of 2 adds the pivot itself.
      if (lead == 1)
        add_rows(lo, hi, pv.hi, pv.lo, word);
      else
        add_rows(lo, hi, pv.lo, pv.hi, word);
    }
  }

  int rank() const override { return _rank; }

private:
  struct Planes {
    std::vector<std::uint64_t> lo, hi;
  };

  void add_digit(std::vector<std::uint64_t> &lo, std::vector<std::uint64_t> &hi,
                 int col, int c) const {
    std::uint64_t mask = std::uint64_t{1} << (col & 63);
    int w = col >> 6;
    int cur = static_cast<int>((lo[w] & mask) != 0) +
              2 * static_cast<int>((hi[w] & mask) != 0);
    int next = (cur + c) % 3;
    lo[w] = (lo[w] & ~mask) | (next == 1 ? mask : 0);
    hi[w] = (hi[w] & ~mask) | (next == 2 ? mask : 0);
  }

  static void add_rows(std::vector<std::uint64_t> &a0,
                       std::vector<std::uint64_t> &a1,
                       std::vector<std::uint64_t> const &b0,
                       std::vector<std::uint64_t> const &b1, int from_word) {
    for (std::size_t w = from_word; w < a0.size(); ++w) {
      std::uint64_t na = ~(a0[w] | a1[w]);
      std::uint64_t nb = ~(b0[w] | b1[w]);
      std::uint64_t s0 = (na & b0[w]) | (a0[w] & nb) | (a1[w] & b1[w]);
      std::uint64_t s1 = (na & b1[w]) | (a1[w] & nb) | (a0[w] & b0[w]);
      a0[w] = s0;
      a1[w] = s1;
    }
  }

  int _ncols;
  int _words;
  int _rank = 0;
  std::vector<int> _pivot_of_col;
  std::vector<Planes> _pivots;
};

// Fallback rank engine for any prime modulus, one byte per entry.
class RankEngineFp final : public RankEngine {
public:
  RankEngineFp(int l, int ncols)
      : _l(l), _ncols(ncols), _pivot_of_col(ncols, -1) {}

  bool add_row(std::vector<std::pair<int, int>> const &entries) override {
    std::vector<std::uint8_t> row(_ncols, 0);
    for (auto [col, coeff] : entries) {
      int c = (row[col] + coeff) % _l;
      if (c < 0)
        c += _l;
      row[col] = static_cast<std::uint8_t>(c);
    }
    int col = 0;
    for (;;) {
      while (col < _ncols && row[col] == 0)
        ++col;
      if (col == _ncols)
        return false;
      int p = _pivot_of_col[col];
      if (p < 0) {
        int inv = mod_inverse(row[col], _l);
        for (int j = col; j < _ncols; ++j)
          row[j] = static_cast<std::uint8_t>(row[j] * inv % _l);
        _pivot_of_col[col] = static_cast<int>(_pivots.size());
        _pivots.push_back(std::move(row));
        ++_rank;
        return true;
      }
      auto const &pr = _pivots[p];
      int c = row[col];
      for (int j = col; j < _ncols; ++j)
        row[j] = static_cast<std::uint8_t>((row[j] + (_l - c) * pr[j]) % _l);
    }
  }

  int rank() const override { return _rank; }

private:
  int _l;
  int _ncols;
  int _rank = 0;
  std::vector<int> _pivot_of_col;
  std::vector<std::vector<std::uint8_t>> _pivots;
};

// Shared context for assembling coboundary rows: indexed elements, the
// multiplication table, and the representing matrix of each element.
struct BarComplex {
  int l = 0;
  int n = 0;
  int m = 0; // group order
  std::vector<int> mul;
  std::vector<FlMatrix> mats;

  explicit BarComplex(LinearRepresentation const &rep)
      : l(rep.l()), n(rep.n()), mats(rep.element_matrices()) {
    auto const &elems = rep.group().elements();
    m = static_cast<int>(elems.size());
    std::unordered_map<Permutation, int, PermHash> index;
    index.reserve(elems.size());
    for (int i = 0; i < m; ++i)
      index.emplace(elems[i], i);
    mul.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        mul[static_cast<std::size_t>(i) * m + j] =
            index.at(compose(elems[i], elems[j]));
  }

  // Accumulates coeff * (matrix of element g applied to coordinate r),
  // writing entries against the cochain block of tuple index `block`.
  void add_action(std::vector<std::pair<int, int>> &out, int g, int block,
                  int r, int sign) const {
    FlMatrix const &mg = mats[g];
    for (int c = 0; c < n; ++c) {
      int v = mg.at(r, c);
      if (v != 0)
        out.emplace_back(block * n + c, sign * v);
    }
  }

  static std::vector<std::pair<int, int>>
  merged(std::vector<std::pair<int, int>> entries, int l) {
    std::sort(entries.begin(), entries.end());
    std::vector<std::pair<int, int>> out;
    for (auto [col, coeff] : entries) {
      if (!out.empty() && out.back().first == col)
        out.back().second += coeff;
      else
        out.emplace_back(col, coeff);
    }
    std::erase_if(out, [l](auto const &e) {
      int c = e.second % l;
      return c == 0;
    });
    return out;
  }

  std::vector<std::pair<int, int>> d0_row(int g, int r) const {
    std::vector<std::pair<int, int>> e;
    add_action(e, g, 0, r, 1);
    e.emplace_back(r, -1);
    return merged(std::move(e), l);
  }

  std::vector<std::pair<int, int>> d1_row(int g, int h, int r) const {
    std::vector<std::pair<int, int>> e;
    add_action(e, g, h, r, 1);
    e.emplace_back(mul[static_cast<std::size_t>(g) * m + h] * n + r, -1);
    e.emplace_back(g * n + r, 1);
    return merged(std::move(e), l);
  }

  std::vector<std::pair<int, int>> d2_row(int g, int h, int k, int r) const {
    std::vector<std::pair<int, int>> e;
    add_action(e, g, h * m + k, r, 1);
    e.emplace_back((mul[static_cast<std::size_t>(g) * m + h] * m + k) * n + r,
                   -1);
    e.emplace_back((g * m + mul[static_cast<std::size_t>(h) * m + k]) * n + r,
                   1);
    e.emplace_back((g * m + h) * n + r, -1);
    return merged(std::move(e), l);
  }
};

} // namespace

std::unique_ptr<RankEngine> RankEngine::make(int l, int ncols) {
  if (l == 2)
    return std::make_unique<RankEngineF2>(ncols);
  if (l == 3)
    return std::make_unique<RankEngineF3>(ncols);
  return std::make_unique<RankEngineFp>(l, ncols);
}

std::vector<std::vector<std::pair<int, int>>>
coboundary_matrix(LinearRepresentation const &rep, int degree) {
  if (degree < 0 || degree > 2)
    fail(ErrorCode::Domain, "coboundary degree must be 0, 1 or 2");
  BarComplex bc(rep);
  std::vector<std::vector<std::pair<int, int>>> rows;
  if (degree == 0) {
    for (int g = 0; g < bc.m; ++g)
      for (int r = 0; r < bc.n; ++r)
        rows.push_back(bc.d0_row(g, r));
  } else if (degree == 1) {
    for (int g = 0; g < bc.m; ++g)
      for (int h = 0; h < bc.m; ++h)
        for (int r = 0; r < bc.n; ++r)
          rows.push_back(bc.d1_row(g, h, r));
  } else {
    for (int g = 0; g < bc.m; ++g)
      for (int h = 0; h < bc.m; ++h)
        for (int k = 0; k < bc.m; ++k)
          for (int r = 0; r < bc.n; ++r)
            rows.push_back(bc.d2_row(g, h, k, r));
  }
  return rows;
}

CohomologyReport cohomology(LinearRepresentation const &rep) {
  if (rep.group().order() > COHOM_ORDER_GUARD)
    fail(ErrorCode::Guard, "cohomology limited to groups of order <= 48");
  if (rep.n() > COHOM_DIM_GUARD)
    fail(ErrorCode::Guard, "cohomology limited to modules of dimension <= 3");

  BarComplex bc(rep);
  int const n = bc.n;
  int const m = bc.m;

  auto rank_d0 = RankEngine::make(bc.l, n);
  for (int g = 0; g < m; ++g)
    for (int r = 0; r < n; ++r)
      rank_d0->add_row(bc.d0_row(g, r));
  int b1 = rank_d0->rank();

  auto rank_d1 = RankEngine::make(bc.l, m * n);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int r = 0; r < n; ++r)
        rank_d1->add_row(bc.d1_row(g, h, r));
  int b2 = rank_d1->rank();

  auto rank_d2 = RankEngine::make(bc.l, m * m * n);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int k = 0; k < m; ++k)
        for (int r = 0; r < n; ++r)
          rank_d2->add_row(bc.d2_row(g, h, k, r));
  int rank2 = rank_d2->rank();

  CohomologyReport rep_out;
  rep_out.l = bc.l;
  rep_out.n = n;
  rep_out.group_order = rep.group().order_u64();
  rep_out.h0 = n - b1;
  rep_out.z1 = m * n - b2;
  rep_out.b1 = b1;
  rep_out.h1 = rep_out.z1 - b1;
  rep_out.z2 = m * m * n - rank2;
  rep_out.b2 = b2;
  rep_out.h2 = rep_out.z2 - b2;
  if (rep_out.h1 < 0 || rep_out.h2 < 0)
    fail(ErrorCode::Defect, "negative cohomology dimension");
  return rep_out;
}

SweepReport vanishing_sweep(std::vector<std::pair<int, int>> const &nl_pairs,
                            std::uint64_t order_cap) {
  SweepReport report;
  for (auto [n, l] : nl_pairs) {
    for (auto const &rep : irreducible_solvable_subgroups(n, l)) {
      if (rep.group().order() > order_cap)
        continue;
      auto c = cohomology(rep);
      SweepEntry e;
      e.n = n;
      e.l = l;
      e.order = c.group_order;
      e.h0 = c.h0;
      e.h1 = c.h1;
      e.h2 = c.h2;
      if (e.h1 != 0 || e.h2 != 0)
        report.all_vanish = false;
      report.entries.push_back(e);
    }
  }
  return report;
}

} // namespace primex
