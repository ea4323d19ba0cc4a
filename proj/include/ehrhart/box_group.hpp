#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/checked.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart {

// A lattice point α = Σ r_i (v_i, 1) of the half-open fundamental
// parallelepiped, stored as r_i = numerators[i] / denominator with every
// numerator in [0, denominator). The denominator is shared by all points of
// the owning group (it is the group exponent).
struct BoxPoint {
  IntVector numerators;
  Int denominator = 1;
  Int degree = 0;

  bool is_zero() const {
    return std::all_of(numerators.begin(), numerators.end(), [](Int x) { return x == 0; });
  }

  std::string coeff_string(std::size_t i) const {
    return std::to_string(numerators.at(i)) + "/" + std::to_string(denominator);
  }

  friend bool operator==(const BoxPoint& a, const BoxPoint& b) {
    return a.denominator == b.denominator && a.numerators == b.numerators;
  }
  friend bool operator<(const BoxPoint& a, const BoxPoint& b) { return a.numerators < b.numerators; }
};

// Box(P) with its abelian group structure (fractional-part addition).
// Points are kept in lexicographic order of their numerator vectors, so the
// identity is always first.
class BoxGroup {
 public:
  BoxGroup(Simplex simplex, std::vector<BoxPoint> points)
      : simplex_(std::move(simplex)), points_(std::move(points)) {
    if (points_.empty()) throw InvariantViolation("empty box group");
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
      throw InvariantViolation("duplicate box points");
    if (static_cast<Int>(points_.size()) != simplex_.volume())
      throw InvariantViolation("box group has " + std::to_string(points_.size()) + " points but volume is " +
                               std::to_string(simplex_.volume()));
    if (!points_.front().is_zero()) throw InvariantViolation("box group lacks the identity");
  }

  const Simplex& simplex() const noexcept { return simplex_; }
  const std::vector<BoxPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t identity_index() const noexcept { return 0; }
  const BoxPoint& identity() const noexcept { return points_.front(); }
  Int denominator() const noexcept { return points_.front().denominator; }

  bool contains(const BoxPoint& p) const {
    return p.denominator == denominator() && std::binary_search(points_.begin(), points_.end(), p);
  }

  BoxPoint add(const BoxPoint& a, const BoxPoint& b) const {
    require_member(a);
    require_member(b);
    BoxPoint r;
    r.denominator = denominator();
    r.numerators.resize(a.numerators.size());
    Int total = 0;
    for (std::size_t i = 0; i < a.numerators.size(); ++i) {
      Int s = a.numerators[i] + b.numerators[i];
      if (s >= r.denominator) s -= r.denominator;
      r.numerators[i] = s;
      total = checked_add(total, s);
    }
    r.degree = total / r.denominator;
    return r;
  }

  BoxPoint inverse(const BoxPoint& a) const {
    require_member(a);
    BoxPoint r;
    r.denominator = denominator();
    r.numerators.resize(a.numerators.size());
    Int total = 0;
    for (std::size_t i = 0; i < a.numerators.size(); ++i) {
      r.numerators[i] = a.numerators[i] == 0 ? 0 : r.denominator - a.numerators[i];
      total = checked_add(total, r.numerators[i]);
    }
    r.degree = total / r.denominator;
    return r;
  }

  // a ⊕ a ⊕ ... ⊕ a (t times); t = 0 gives the identity.
  BoxPoint multiple(const BoxPoint& a, Int t) const {
    BoxPoint r = identity();
    for (Int k = 0; k < t; ++k) r = add(r, a);
    return r;
  }

  // α = Σ r_i (v_i, 1) as an integer vector of length d+1.
  IntVector lattice_point(const BoxPoint& p) const {
    const std::size_t d = simplex_.dim();
    IntVector alpha(d + 1, 0);
    for (std::size_t j = 0; j <= d; ++j) {
      Int acc = 0;
      for (std::size_t i = 0; i <= d; ++i) {
        Int c = j < d ? simplex_.vertex(i)[j] : 1;
        acc = checked_add(acc, checked_mul(p.numerators[i], c));
      }
      if (acc % p.denominator != 0) throw InvariantViolation("box point is not a lattice point");
      alpha[j] = acc / p.denominator;
    }
    return alpha;
  }

  // counts[i] = #{α : deg α = i}, i = 0..d.
  DeltaVector degree_counts() const {
    IntVector counts(simplex_.dim() + 1, 0);
    for (const auto& p : points_) ++counts.at(static_cast<std::size_t>(p.degree));
    return DeltaVector(std::move(counts));
  }

 private:
  void require_member(const BoxPoint& p) const {
    if (!contains(p)) throw InvalidArgument("box point does not belong to this group");
  }

  Simplex simplex_;
  std::vector<BoxPoint> points_;
};

namespace detail {

// Walks z over Π [0, diag_k) and calls fn(z).
template <typename Fn>
void for_each_residue(const IntVector& diag, Fn&& fn) {
  IntVector z(diag.size(), 0);
  for (;;) {
    fn(z);
    std::size_t k = 0;
    while (k < diag.size()) {
      if (++z[k] < diag[k]) break;
      z[k] = 0;
      ++k;
    }
    if (k == diag.size()) return;
  }
}

}  // namespace detail

// Enumerates Box(s) through the Smith form U H V = S of the homogenized vertex
// matrix H: the points are exactly r = frac(z S^{-1} U) for z in Π [0, s_k).
inline BoxGroup enumerate_box(const Simplex& s) {
  const IntMatrix h = s.homogenized_matrix();
  const SNFResult snf = smith_normal_form(h);
  const std::size_t n = h.rows();
  const Int den = snf.diagonal.back();

  // Row k of U scaled to the shared denominator, reduced mod den.
  std::vector<IntVector> gens(n, IntVector(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    const Int scale = den / snf.diagonal[k];
    for (std::size_t i = 0; i < n; ++i)
      gens[k][i] = mod_floor(checked_mul(scale, mod_floor(snf.left(k, i), den)), den);
  }

  std::vector<BoxPoint> points;
  points.reserve(static_cast<std::size_t>(s.volume()));
  detail::for_each_residue(snf.diagonal, [&](const IntVector& z) {
    BoxPoint p;
    p.denominator = den;
    p.numerators.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (z[k] == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        p.numerators[i] = mod_floor(checked_add(p.numerators[i], checked_mul(z[k], gens[k][i])), den);
    }
    Int total = 0;
    for (Int x : p.numerators) total = checked_add(total, x);
    if (total % den != 0) throw InvariantViolation("box point with non-integral degree");
    p.degree = total / den;
    // Σ r_i (v_i, 1) must be integral.
    for (std::size_t j = 0; j < n; ++j) {
      Int acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc = checked_add(acc, checked_mul(p.numerators[i], h(i, j)));
      if (acc % den != 0) throw InvariantViolation("box point is not a lattice point");
    }
    points.push_back(std::move(p));
  });
  return BoxGroup(s, std::move(points));
}

inline BoxPoint box_add(const BoxGroup& g, const BoxPoint& a, const BoxPoint& b) { return g.add(a, b); }
inline BoxPoint box_inverse(const BoxGroup& g, const BoxPoint& a) { return g.inverse(a); }

// δ_i = #{α in Box(s) : deg α = i}
inline DeltaVector delta_from_box(const Simplex& s) { return enumerate_box(s).degree_counts(); }

}  // namespace ehrhart
