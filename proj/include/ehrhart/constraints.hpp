#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/delta.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/hnf_family.hpp"
#include "ehrhart/matrix.hpp"

namespace ehrhart {

using IndexPair = std::pair<Int, Int>;

// Verdict of one named constraint. Pair-indexed checks fill `pairs`,
// position-indexed checks fill `positions`; passed iff both are empty.
struct Check {
  std::string name;
  std::vector<IndexPair> pairs;
  IntVector positions;

  bool passed() const noexcept { return pairs.empty() && positions.empty(); }
};

struct CheckReport {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  CheckReport& append(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    return *this;
  }
};

inline CheckReport single(Check c) { return CheckReport{{std::move(c)}}; }

namespace detail {

inline void require_odd_prime(Int m, const char* what) {
  if (m < 3 || !is_prime(m))
    throw InvalidArgument(std::string(what) + " requires an odd prime volume, got " + std::to_string(m));
}

}  // namespace detail

// i_k + i_{m-k} is the same for every k and at most d+1.
inline CheckReport check_pairing(const ExponentList& e) {
  const Int m = e.volume();
  detail::require_odd_prime(m, "pairing check");
  const Int bound = static_cast<Int>(e.dim()) + 1;
  const Int target = e.at(1) + e.at(static_cast<std::size_t>(m - 1));
  Check c{"pairing", {}, {}};
  for (Int k = 1; k <= (m - 1) / 2; ++k) {
    const Int sum = e.at(static_cast<std::size_t>(k)) + e.at(static_cast<std::size_t>(m - k));
    if (sum != target || sum > bound) c.pairs.emplace_back(k, m - k);
  }
  return single(std::move(c));
}

// i_k + i_l >= i_{k+l}, 1 <= k <= l, k + l <= m-1.
inline CheckReport check_superadditive(const ExponentList& e) {
  const Int m = e.volume();
  detail::require_odd_prime(m, "superadditivity check");
  Check c{"superadditive", {}, {}};
  for (Int k = 1; k <= m - 1; ++k)
    for (Int l = k; k + l <= m - 1; ++l)
      if (e.at(static_cast<std::size_t>(k)) + e.at(static_cast<std::size_t>(l)) <
          e.at(static_cast<std::size_t>(k + l)))
        c.pairs.emplace_back(k, l);
  return single(std::move(c));
}

// 1 <= k <= floor((p-1)/3), k <= l <= floor((p-k)/2)
inline std::vector<IndexPair> reduced_pairs(Int p) {
  std::vector<IndexPair> out;
  for (Int k = 1; k <= (p - 1) / 3; ++k)
    for (Int l = k; l <= (p - k) / 2; ++l) out.emplace_back(k, l);
  return out;
}

// Superadditivity restricted to reduced_pairs(m). Equivalent to the full
// check whenever the pairing equalities hold.
inline CheckReport check_superadditive_reduced(const ExponentList& e) {
  const Int m = e.volume();
  detail::require_odd_prime(m, "reduced superadditivity check");
  Check c{"superadditive_reduced", {}, {}};
  for (auto [k, l] : reduced_pairs(m))
    if (e.at(static_cast<std::size_t>(k)) + e.at(static_cast<std::size_t>(l)) <
        e.at(static_cast<std::size_t>(k + l)))
      c.pairs.emplace_back(k, l);
  return single(std::move(c));
}

// δ_0 + ... + δ_i <= δ_s + ... + δ_{s-i}, 0 <= i <= floor(s/2).
inline CheckReport check_stanley(const DeltaVector& v) {
  const std::size_t s = v.degree();
  Check c{"stanley", {}, {}};
  Int lhs = 0, rhs = 0;
  for (std::size_t i = 0; i <= s / 2; ++i) {
    lhs += v[i];
    rhs += v[s - i];
    if (lhs > rhs) c.positions.push_back(static_cast<Int>(i));
  }
  return single(std::move(c));
}

// δ_d + ... + δ_{d-i} <= δ_1 + ... + δ_{i+1}, 0 <= i <= floor((d-1)/2).
inline CheckReport check_hibi(const DeltaVector& v) {
  const std::size_t d = v.dim();
  Check c{"hibi", {}, {}};
  if (d == 0) return single(std::move(c));
  Int lhs = 0, rhs = 0;
  for (std::size_t i = 0; i <= (d - 1) / 2; ++i) {
    lhs += v[d - i];
    rhs += v[i + 1];
    if (lhs > rhs) c.positions.push_back(static_cast<Int>(i));
  }
  return single(std::move(c));
}

// i_j + i_{m-j-1} >= i_{m-1}, 1 <= j <= m-2. Equivalent to check_stanley.
inline CheckReport prop12_lhs_a(const ExponentList& e) {
  const Int m = e.volume();
  Check c{"prop12_a", {}, {}};
  for (Int j = 1; j <= m - 2; ++j)
    if (e.at(static_cast<std::size_t>(j)) + e.at(static_cast<std::size_t>(m - j - 1)) <
        e.at(static_cast<std::size_t>(m - 1)))
      c.positions.push_back(j);
  return single(std::move(c));
}

// i_j + i_{m-j} <= d+1, 1 <= j <= m-1. Equivalent to check_hibi.
inline CheckReport prop12_lhs_b(const ExponentList& e) {
  const Int m = e.volume();
  const Int bound = static_cast<Int>(e.dim()) + 1;
  Check c{"prop12_b", {}, {}};
  for (Int j = 1; j <= m - 1; ++j)
    if (e.at(static_cast<std::size_t>(j)) + e.at(static_cast<std::size_t>(m - j)) > bound)
      c.positions.push_back(j);
  return single(std::move(c));
}

// Composite volume m with least prime divisor g:
// i_k + i_l >= i_{k+l} for 1 <= k <= l <= g-1, k + l <= g-1.
inline CheckReport check_nonprime(const ExponentList& e) {
  const Int m = e.volume();
  if (m < 4 || is_prime(m))
    throw InvalidArgument("composite-volume check requires a composite volume, got " + std::to_string(m));
  const Int g = least_prime_divisor(m);
  Check c{"nonprime", {}, {}};
  for (Int k = 1; k <= g - 1; ++k)
    for (Int l = k; l <= g - 1 && k + l <= g - 1; ++l)
      if (e.at(static_cast<std::size_t>(k)) + e.at(static_cast<std::size_t>(l)) <
          e.at(static_cast<std::size_t>(k + l)))
        c.pairs.emplace_back(k, l);
  return single(std::move(c));
}

// Every check that applies to a vector of this volume.
inline CheckReport check_all(const DeltaVector& v) {
  const ExponentList e = exponents(v);
  const Int m = e.volume();
  CheckReport r = check_stanley(v);
  r.append(check_hibi(v));
  r.append(prop12_lhs_a(e));
  r.append(prop12_lhs_b(e));
  if (m >= 3 && is_prime(m)) {
    r.append(check_pairing(e));
    r.append(check_superadditive(e));
  } else if (m >= 4) {
    r.append(check_nonprime(e));
  }
  return r;
}

}  // namespace ehrhart
