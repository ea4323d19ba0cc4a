#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ehrhart/checked.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct CountOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

namespace detail {

// Precomputed data for membership in nP: with E the edge matrix and A its
// adjugate (sign-normalized so that det > 0), z lies in nP iff
// μ = (z - n v_0) A has μ_i >= 0 and Σ μ_i <= n det.
struct DilateScanner {
  const Simplex& simplex;
  Int n;
  bool interior;
  IntMatrix adj;
  Int det;
  std::size_t inner;                // coordinate solved in closed form per scan line
  std::vector<std::size_t> outer;   // coordinates enumerated explicitly
  IntVector lo, hi;

  DilateScanner(const Simplex& s, Int dilation, bool strict) : simplex(s), n(dilation), interior(strict) {
    const std::size_t d = s.dim();
    IntMatrix e = s.edge_matrix();
    det = exact_det(e);
    adj = adjugate(e);
    if (det < 0) {
      det = checked_neg(det);
      for (std::size_t i = 0; i < d; ++i) adj.negate_row(i);
    }
    lo.assign(d, 0);
    hi.assign(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
      Int mn = s.vertex(0)[j], mx = mn;
      for (const auto& v : s.vertices()) {
        mn = std::min(mn, v[j]);
        mx = std::max(mx, v[j]);
      }
      lo[j] = checked_mul(n, mn);
      hi[j] = checked_mul(n, mx);
    }
    inner = 0;
    for (std::size_t j = 1; j < d; ++j)
      if (hi[j] - lo[j] > hi[inner] - lo[inner]) inner = j;
    for (std::size_t j = 0; j < d; ++j)
      if (j != inner) outer.push_back(j);

    // Every μ_i and Σ μ_i met in the scan is bounded by this; keep the hot
    // loop in plain 64-bit arithmetic by proving it cannot overflow.
    Int amax = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) amax = std::max(amax, checked_abs(adj(i, j)));
    Int bound = 0;
    for (std::size_t j = 0; j < d; ++j) {
      Int off = checked_mul(n, s.vertex(0)[j]);
      Int span = std::max(checked_abs(checked_sub(lo[j], off)), checked_abs(checked_sub(hi[j], off)));
      bound = checked_add(bound, checked_mul(span, amax));
    }
    bound = checked_mul(bound, static_cast<Int>(d) + 1);
    bound = checked_add(bound, checked_mul(n, det));
    if (bound > (Int{1} << 61)) throw OverflowError("lattice point scan would overflow 64-bit arithmetic");
  }

  // Number of scan lines (cells of the outer bounding box).
  std::uint64_t work() const {
    std::uint64_t w = 1;
    for (std::size_t j : outer) {
      std::uint64_t r = static_cast<std::uint64_t>(hi[j] - lo[j] + 1);
      if (w > std::numeric_limits<std::uint64_t>::max() / r) return std::numeric_limits<std::uint64_t>::max();
      w *= r;
    }
    return w;
  }

  // Counts points whose first outer coordinate lies in [first_lo, first_hi].
  std::uint64_t count_slab(Int first_lo, Int first_hi) const {
    const std::size_t d = simplex.dim();
    const IntVector& v0 = simplex.vertex(0);
    const Int thr = interior ? 1 : 0;
    const Int cap = interior ? n * det - 1 : n * det;

    IntVector z(d);
    for (std::size_t j = 0; j < d; ++j) z[j] = lo[j];
    if (!outer.empty()) {
      if (first_lo > first_hi) return 0;
      z[outer[0]] = first_lo;
    }
    z[inner] = lo[inner];

    // base_i = μ_i at t = 0 for the current line; slope_i = A[inner][i].
    IntVector base(d, 0), slope(d, 0);
    Int slope_sum = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) base[i] += (z[j] - n * v0[j]) * adj(j, i);
      slope[i] = adj(inner, i);
      slope_sum += slope[i];
    }
    const Int tspan = hi[inner] - lo[inner];

    std::uint64_t total = 0;
    for (;;) {
      Int tmin = 0, tmax = tspan, base_sum = 0;
      for (std::size_t i = 0; i < d && tmin <= tmax; ++i) {
        base_sum += base[i];
        const Int a = slope[i], b = base[i];
        if (a > 0) {
          tmin = std::max(tmin, ceil_div(thr - b, a));
        } else if (a < 0) {
          tmax = std::min(tmax, floor_div(b - thr, -a));
        } else if (b < thr) {
          tmax = -1;
        }
      }
      if (tmin <= tmax) {
        if (slope_sum > 0) {
          tmax = std::min(tmax, floor_div(cap - base_sum, slope_sum));
        } else if (slope_sum < 0) {
          tmin = std::max(tmin, ceil_div(base_sum - cap, -slope_sum));
        } else if (base_sum > cap) {
          tmax = -1;
        }
        if (tmin <= tmax) total += static_cast<std::uint64_t>(tmax - tmin + 1);
      }

      // Advance the outer odometer; the first outer coordinate is slab-limited.
      std::size_t k = outer.size();
      while (k > 0) {
        const std::size_t j = outer[k - 1];
        const Int top = (k == 1) ? first_hi : hi[j];
        const Int bottom = (k == 1) ? first_lo : lo[j];
        if (z[j] < top) {
          ++z[j];
          for (std::size_t i = 0; i < d; ++i) base[i] += adj(j, i);
          break;
        }
        for (std::size_t i = 0; i < d; ++i) base[i] -= (z[j] - bottom) * adj(j, i);
        z[j] = bottom;
        --k;
      }
      if (k == 0) break;
    }
    return total;
  }
};

}  // namespace detail

inline std::uint64_t estimate_count_work(const Simplex& s, Int n) {
  return detail::DilateScanner(s, n, false).work();
}

// |nP ∩ Z^d|, or the interior count when `interior` is set.
inline std::uint64_t count_lattice_points(const Simplex& s, Int n, bool interior, const CountOptions& opts = {}) {
  if (n < 1) throw InvalidArgument("dilation factor must be positive");
  detail::DilateScanner scan(s, n, interior);
  const std::uint64_t work = scan.work();
  if (work > opts.budget) throw BudgetExceeded("lattice point count", work, opts.budget);

  if (scan.outer.empty() || opts.threads <= 1) {
    const Int a = scan.outer.empty() ? 0 : scan.lo[scan.outer[0]];
    const Int b = scan.outer.empty() ? 0 : scan.hi[scan.outer[0]];
    return scan.count_slab(a, b);
  }
  const std::size_t j0 = scan.outer[0];
  const Int first = scan.lo[j0], last = scan.hi[j0];
  const Int slabs = std::min<Int>(static_cast<Int>(opts.threads), last - first + 1);
  const Int width = ceil_div<Int>(last - first + 1, slabs);
  std::vector<std::future<std::uint64_t>> parts;
  for (Int a = first; a <= last; a += width) {
    const Int b = std::min(last, a + width - 1);
    parts.push_back(std::async(std::launch::async, [&scan, a, b] { return scan.count_slab(a, b); }));
  }
  std::uint64_t total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

// i(P, n) for n = 0..d+1 and i*(P, n) for n = 1..d+1.
class EhrhartTable {
 public:
  EhrhartTable(IntVector closed, IntVector interior) : closed_(std::move(closed)), interior_(std::move(interior)) {
    if (closed_.size() < 2 || interior_.size() + 1 != closed_.size())
      throw InvalidArgument("malformed Ehrhart table");
  }

  std::size_t dim() const noexcept { return closed_.size() - 2; }
  Int closed(std::size_t n) const { return closed_.at(n); }
  Int interior(std::size_t n) const {
    if (n == 0) throw InvalidArgument("interior counts start at n = 1");
    return interior_.at(n - 1);
  }
  const IntVector& closed_counts() const noexcept { return closed_; }
  const IntVector& interior_counts() const noexcept { return interior_; }

 private:
  IntVector closed_;
  IntVector interior_;
};

inline EhrhartTable ehrhart_table(const Simplex& s, const CountOptions& opts = {}) {
  const std::size_t d = s.dim();
  IntVector closed{1};
  IntVector interior;
  for (std::size_t n = 1; n <= d + 1; ++n) {
    closed.push_back(static_cast<Int>(count_lattice_points(s, static_cast<Int>(n), false, opts)));
    interior.push_back(static_cast<Int>(count_lattice_points(s, static_cast<Int>(n), true, opts)));
  }
  return EhrhartTable(std::move(closed), std::move(interior));
}

// δ_i = Σ_{j=0}^{i} (-1)^j C(d+1, j) i(P, i-j), from i(P, 0..d).
inline DeltaVector delta_from_counts(const IntVector& counts, std::size_t d, Int expected_volume) {
  if (counts.size() < d + 1) throw InvalidArgument("need i(P, n) for n = 0..d");
  IntVector delta(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      Int term = checked_mul(binomial(static_cast<Int>(d) + 1, static_cast<Int>(j)), counts[i - j]);
      acc = (j % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
    }
    if (acc < 0)
      throw InvariantViolation("negative delta entry " + std::to_string(acc) + " at index " + std::to_string(i));
    delta[i] = acc;
  }
  DeltaVector out(std::move(delta));
  if (out.volume() != expected_volume)
    throw InvariantViolation("delta sums to " + std::to_string(out.volume()) + ", volume is " +
                             std::to_string(expected_volume));
  return out;
}

inline DeltaVector ehrhart_delta(const Simplex& s, const CountOptions& opts = {}) {
  const std::size_t d = s.dim();
  IntVector counts{1};
  for (std::size_t n = 1; n <= d; ++n)
    counts.push_back(static_cast<Int>(count_lattice_points(s, static_cast<Int>(n), false, opts)));
  return delta_from_counts(counts, d, s.volume());
}

// Δ^k i(P, ·)(0) for k = 0..d, from i(P, 0..d).
inline IntVector forward_differences(const IntVector& values, std::size_t d) {
  IntVector row(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(d + 1));
  IntVector out;
  for (std::size_t k = 0; k <= d; ++k) {
    out.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = checked_sub(row[i + 1], row[i]);
    row.pop_back();
  }
  return out;
}

// C(x, k) for any integer x.
inline Int generalized_binomial(Int x, Int k) {
  if (k < 0) return 0;
  if (x >= 0) return binomial(x, k);
  Int b = binomial(checked_add(checked_neg(x), k - 1), k);
  return (k % 2 == 0) ? b : checked_neg(b);
}

// The degree-d polynomial through i(P, 0..d), evaluated exactly at x.
inline Int evaluate_ehrhart_polynomial(const IntVector& values, std::size_t d, Int x) {
  const IntVector diffs = forward_differences(values, d);
  Int acc = 0;
  for (std::size_t k = 0; k <= d; ++k)
    acc = checked_add(acc, checked_mul(diffs[k], generalized_binomial(x, static_cast<Int>(k))));
  return acc;
}

struct ReciprocityResult {
  bool passed = true;
  std::optional<Int> first_mismatch;  // n with i*(P,n) != (-1)^d i(P,-n)
  IntVector direct;                   // i*(P, n), n = 1..d+1
  IntVector reciprocal;               // (-1)^d i(P, -n), n = 1..d+1
};

inline ReciprocityResult reciprocity_check(const EhrhartTable& t) {
  const std::size_t d = t.dim();
  ReciprocityResult r;
  for (std::size_t n = 1; n <= d + 1; ++n) {
    Int value = evaluate_ehrhart_polynomial(t.closed_counts(), d, -static_cast<Int>(n));
    if (d % 2 == 1) value = checked_neg(value);
    r.reciprocal.push_back(value);
    r.direct.push_back(t.interior(n));
    if (value != t.interior(n) && r.passed) {
      r.passed = false;
      r.first_mismatch = static_cast<Int>(n);
    }
  }
  return r;
}

inline ReciprocityResult reciprocity_check(const Simplex& s, const CountOptions& opts = {}) {
  return reciprocity_check(ehrhart_table(s, opts));
}

}  // namespace ehrhart
