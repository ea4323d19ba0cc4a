#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/checked.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart {

// Parameters of the simplex conv{0, e_1, ..., e_{d-1}, w} whose last vertex w
// has final coordinate m and, among its first d-1 coordinates, the value j
// repeated coeffs[j-1] times.
struct HNFSpec {
  Int m = 2;
  IntVector coeffs;  // d_1, ..., d_{m-1}
  std::size_t dim = 1;

  Int coeff_sum() const {
    Int s = 0;
    for (Int c : coeffs) s = checked_add(s, c);
    return s;
  }

  void validate() const {
    if (m < 2) throw InvalidArgument("m must be at least 2");
    if (dim < 1) throw InvalidArgument("dimension must be positive");
    if (coeffs.size() != static_cast<std::size_t>(m - 1))
      throw InvalidArgument("expected " + std::to_string(m - 1) + " coefficients, got " +
                            std::to_string(coeffs.size()));
    for (Int c : coeffs)
      if (c < 0) throw InvalidArgument("coefficients must be nonnegative");
    if (coeff_sum() > static_cast<Int>(dim) - 1)
      throw InvalidArgument("coefficient sum " + std::to_string(coeff_sum()) + " exceeds dim - 1 = " +
                            std::to_string(dim - 1));
  }

  friend bool operator==(const HNFSpec&, const HNFSpec&) = default;
};

// The last vertex w: ascending values left-justified, then zeros, then m.
inline IntVector hnf_last_vertex(const HNFSpec& spec) {
  spec.validate();
  IntVector w;
  w.reserve(spec.dim);
  for (std::size_t j = 1; j <= spec.coeffs.size(); ++j)
    for (Int k = 0; k < spec.coeffs[j - 1]; ++k) w.push_back(static_cast<Int>(j));
  w.resize(spec.dim - 1, 0);
  w.push_back(spec.m);
  return w;
}

inline Simplex build_simplex(const HNFSpec& spec) {
  const IntVector w = hnf_last_vertex(spec);
  std::vector<IntVector> v(spec.dim + 1, IntVector(spec.dim, 0));
  for (std::size_t i = 1; i < spec.dim; ++i) v[i][i - 1] = 1;
  v[spec.dim] = w;
  return Simplex(std::move(v));
}

// s_i = floor(i/m - Σ_j {ij/m} d_j), i = 1..m-1, as exact integers.
inline IntVector closed_form_shifts(const HNFSpec& spec) {
  spec.validate();
  const Int m = spec.m;
  IntVector shifts;
  for (Int i = 1; i < m; ++i) {
    // m * (i/m - Σ {ij/m} d_j) = i - Σ (ij mod m) d_j
    Int num = i;
    for (Int j = 1; j < m; ++j)
      num = checked_sub(num, checked_mul(mod_floor(checked_mul(i, j), m), spec.coeffs[static_cast<std::size_t>(j - 1)]));
    shifts.push_back(floor_div(num, m));
  }
  return shifts;
}

// δ with Σ δ_i t^i = 1 + Σ_i t^{1 - s_i}.
inline DeltaVector closed_form_delta(const HNFSpec& spec) {
  IntVector delta(spec.dim + 1, 0);
  delta[0] = 1;
  for (Int s : closed_form_shifts(spec)) {
    const Int e = 1 - s;
    if (e < 1 || e > static_cast<Int>(spec.dim))
      throw InvalidArgument("closed form exponent " + std::to_string(e) + " outside [1, " +
                            std::to_string(spec.dim) + "]");
    ++delta[static_cast<std::size_t>(e)];
  }
  return DeltaVector(std::move(delta));
}

inline Int least_prime_divisor(Int m) {
  if (m < 2) throw InvalidArgument("least prime divisor needs m >= 2");
  for (Int q = 2; q <= m / q; ++q)
    if (m % q == 0) return q;
  return m;
}

inline bool is_prime(Int m) { return m >= 2 && least_prime_divisor(m) == m; }

struct NonprimeFamilyMember {
  HNFSpec spec;
  DeltaVector predicted;
};

// For composite m = g q with g the least prime divisor: dim m+1, d_g = m and
// δ_1 = g-1, δ_{jg+1} = g for j = 1..q-1.
inline NonprimeFamilyMember nonprime_family(Int m) {
  if (m < 4 || is_prime(m)) throw InvalidArgument("nonprime family needs a composite m, got " + std::to_string(m));
  const Int g = least_prime_divisor(m);
  const Int q = m / g;
  HNFSpec spec{m, IntVector(static_cast<std::size_t>(m - 1), 0), static_cast<std::size_t>(m + 1)};
  spec.coeffs[static_cast<std::size_t>(g - 1)] = m;
  IntVector delta(spec.dim + 1, 0);
  delta[0] = 1;
  delta[1] = g - 1;
  for (Int j = 1; j <= q - 1; ++j) delta[static_cast<std::size_t>(j * g + 1)] = g;
  return {std::move(spec), DeltaVector(std::move(delta))};
}

}  // namespace ehrhart
