#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/box_group.hpp"
#include "ehrhart/constraints.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/hnf_family.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart {

// Case of the volume-5 / volume-7 classification, determined by the
// multiplicity pattern of the sorted exponents.
struct CaseId {
  Int p = 5;
  int label = 1;  // 1-based: (i) = 1, (ii) = 2, ...
  // Only for p = 7, case (viii): whether i_1 + i_3 >= 2 i_2.
  std::optional<bool> sum_branch;

  std::string roman() const {
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
    return names[label - 1];
  }
  std::string to_string() const {
    std::string s = "p=" + std::to_string(p) + " case (" + roman() + ")";
    if (sum_branch) s += *sum_branch ? " [i1+i3>=2i2]" : " [i1+i3<2i2]";
    return s;
  }

  friend bool operator==(const CaseId&, const CaseId&) = default;
};

struct Witness {
  HNFSpec spec;
  CaseId case_id;
  DeltaVector predicted;
};

namespace detail {

inline void require_volume(const DeltaVector& v, Int p) {
  if (p != 5 && p != 7) throw InvalidArgument("classification covers volumes 5 and 7 only, got " + std::to_string(p));
  if (v.volume() != p)
    throw InvalidArgument("wrong volume: delta sums to " + std::to_string(v.volume()) + ", expected " +
                          std::to_string(p));
}

// Run lengths of equal values in a sorted list, and the distinct values.
inline std::pair<std::vector<int>, IntVector> runs(const IntVector& sorted) {
  std::vector<int> lengths;
  IntVector values;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) {
      lengths.push_back(1);
      values.push_back(sorted[i]);
    } else {
      ++lengths.back();
    }
  }
  return {lengths, values};
}

}  // namespace detail

// Pairing and superadditivity for a candidate of volume 5 or 7.
inline CheckReport admissible(const DeltaVector& v, Int p) {
  detail::require_volume(v, p);
  const ExponentList e = exponents(v);
  CheckReport r = check_pairing(e);
  r.append(check_superadditive(e));
  return r;
}

inline CaseId classify_case(const ExponentList& e) {
  const Int p = e.volume();
  const auto [lengths, values] = detail::runs(e.values());
  using Pattern = std::vector<int>;
  static const std::vector<Pattern> five = {{4}, {2, 2}, {1, 2, 1}, {1, 1, 1, 1}};
  static const std::vector<Pattern> seven = {{6},          {3, 3},       {1, 4, 1},          {2, 2, 2},
                                             {1, 2, 2, 1}, {2, 1, 1, 2}, {1, 1, 2, 1, 1}, {1, 1, 1, 1, 1, 1}};
  const std::vector<Pattern>* table = nullptr;
  if (p == 5) table = &five;
  if (p == 7) table = &seven;
  if (!table) throw InvalidArgument("classification covers volumes 5 and 7 only");
  for (std::size_t c = 0; c < table->size(); ++c) {
    if ((*table)[c] != lengths) continue;
    CaseId id{p, static_cast<int>(c) + 1, std::nullopt};
    if (p == 7 && id.label == 8) id.sum_branch = e.at(1) + e.at(3) >= 2 * e.at(2);
    return id;
  }
  throw InvariantViolation("exponent multiplicities match no classification case");
}

// HNF coefficients d_1..d_{p-1} realizing the given exponents, per case.
inline IntVector witness_coefficients(const ExponentList& e, const CaseId& id) {
  const IntVector& x = detail::runs(e.values()).second;  // distinct values
  auto i = [&](std::size_t j) { return e.at(j); };
  if (id.p == 5) {
    switch (id.label) {
      case 1: return {0, x[0] - 1, x[0] - 1, 0};
      case 2: return {0, x[0], 2 * x[0] - x[1], 2 * x[1] - 2 * x[0] - 2};
      case 3: return {0, 2 * x[0] - x[1], x[0], 3 * x[1] - 3 * x[0] - 2};
      case 4: return {0, 2 * i(1) - i(2), i(1) + i(2) - i(3), i(2) + 2 * i(3) - 3 * i(1) - 2};
    }
  } else if (id.p == 7) {
    switch (id.label) {
      case 1: return {0, 0, x[0] - 1, x[0] - 1, 0, 0};
      case 2: {
        const Int a = x[0], b = x[1];
        return {0, b - a, 2 * a - b, 2 * a - b, 0, 2 * b - 2 * a - 2};
      }
      case 3: {
        const Int a = x[0], b = x[1], c = x[2];
        return {a + b - c, c - b, c - a - 1, 0, 0, a - 1};
      }
      case 4: {
        const Int a = x[0], b = x[1], c = x[2];
        return {0, 0, a - 1, a + b - c, 0, 3 * c - 3 * b - 1};
      }
      case 5: {
        const Int k1 = x[0], k2 = x[1], k3 = x[2];
        return {0, 2 * k1 - k2, 0, k2 - k1, k1 + k2 - k3, 2 * k3 - 2 * k1 - 2};
      }
      case 6: {
        const Int k1 = x[0], k2 = x[1], k3 = x[2];
        return {0, k3 - k2 - 1, k1 + k2 - k3, 2 * k1 - k3, 0, k2 + 2 * k3 - 3 * k1 - 1};
      }
      case 7: {
        const Int k1 = x[0], k2 = x[1], k3 = x[2];
        return {0, 0, 2 * k1 - k2, k1 + k2 - k3, k2 - k1, 3 * k3 - 2 * k1 - k2 - 2};
      }
      case 8: {
        const Int last = i(3) + 2 * i(4) - 2 * i(1) - i(2) - 2;
        if (i(1) + i(3) >= 2 * i(2)) return {0, i(1) + i(2) - i(3), i(1) + i(3) - 2 * i(2), 0, 2 * i(2) - i(4), last};
        return {0, 2 * i(1) - i(2), 0, 2 * i(2) - i(1) - i(3), i(1) + i(3) - i(4), last};
      }
    }
  }
  throw InvariantViolation("unknown classification case " + id.to_string());
}

// Builds the realizing simplex parameters for an admissible vector and checks
// them against the closed-form delta before returning.
inline Witness witness(const DeltaVector& v, Int p) {
  const CheckReport report = admissible(v, p);
  if (!report.passed()) throw InvalidArgument("delta vector " + v.to_string() + " is not admissible");
  const ExponentList e = exponents(v);
  const CaseId id = classify_case(e);
  HNFSpec spec{p, witness_coefficients(e, id), v.dim()};
  for (Int c : spec.coeffs)
    if (c < 0) throw InvariantViolation("negative witness coefficient for " + v.to_string() + " in " + id.to_string());
  if (spec.coeff_sum() > static_cast<Int>(v.dim()) - 1)
    throw InvariantViolation("witness coefficients do not fit dimension for " + v.to_string());
  if (closed_form_delta(spec) != v)
    throw InvariantViolation("witness for " + v.to_string() + " (" + id.to_string() + ") has closed-form delta " +
                             closed_form_delta(spec).to_string());
  return Witness{std::move(spec), id, v};
}

// Independent confirmation of a witness through box enumeration.
inline bool witness_verified_by_box(const Witness& w) { return delta_from_box(build_simplex(w.spec)) == w.predicted; }

struct AdmissibleEntry {
  DeltaVector delta;
  Witness witness;
};

namespace detail {

// Nondecreasing tuples of length `len` over [first, hi], with the first value
// fixed to `first`.
template <typename Fn>
void for_each_sorted_tuple(std::size_t len, Int first, Int hi, Fn&& fn) {
  IntVector t(len, first);
  if (len == 0) {
    fn(t);
    return;
  }
  for (;;) {
    fn(t);
    std::size_t k = len;
    while (k > 1 && t[k - 1] == hi) --k;
    if (k == 1) return;
    const Int next = t[k - 1] + 1;
    for (std::size_t j = k - 1; j < len; ++j) t[j] = next;
  }
}

}  // namespace detail

inline std::vector<AdmissibleEntry> enumerate_admissible(Int p, std::size_t d, unsigned threads = 1) {
  if (p != 5 && p != 7) throw InvalidArgument("classification covers volumes 5 and 7 only");
  if (d < 1) throw InvalidArgument("dimension must be positive");
  const std::size_t len = static_cast<std::size_t>(p - 1);
  auto shard = [p, d, len](Int first) {
    std::vector<AdmissibleEntry> out;
    detail::for_each_sorted_tuple(len, first, static_cast<Int>(d), [&](const IntVector& t) {
      const DeltaVector v = to_delta(ExponentList(t, d));
      if (admissible(v, p).passed()) out.push_back({v, witness(v, p)});
    });
    return out;
  };
  std::vector<AdmissibleEntry> all;
  if (threads <= 1) {
    for (Int f = 1; f <= static_cast<Int>(d); ++f) {
      auto part = shard(f);
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    std::vector<std::future<std::vector<AdmissibleEntry>>> parts;
    for (Int f = 1; f <= static_cast<Int>(d); ++f) parts.push_back(std::async(std::launch::async, shard, f));
    for (auto& f : parts) {
      auto part = f.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  std::sort(all.begin(), all.end(), [](const AdmissibleEntry& a, const AdmissibleEntry& b) { return a.delta < b.delta; });
  return all;
}

// (1, 0, l, 0, 1, ..., 1, 0, l, 0) with p - 2l - 1 ones, d = p - 2l + 5.
inline DeltaVector counterexample_family(Int p, Int ell) {
  if (p < 7 || !is_prime(p)) throw InvalidArgument("counterexample family needs a prime p >= 7");
  if (ell < 2 || 2 * ell > p - 1)
    throw InvalidArgument("counterexample family needs 2 <= l <= (p-1)/2, got l = " + std::to_string(ell));
  IntVector v{1, 0, ell, 0};
  for (Int k = 0; k < p - 2 * ell - 1; ++k) v.push_back(1);
  v.insert(v.end(), {0, ell, 0});
  return DeltaVector(std::move(v));
}

struct SearchOptions {
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

inline std::uint64_t estimate_search_work(std::size_t d, Int vol) {
  std::uint64_t w = d;
  for (std::size_t k = 1; k < d; ++k) {
    if (w > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(vol))
      return std::numeric_limits<std::uint64_t>::max();
    w *= static_cast<std::uint64_t>(vol);
  }
  return w;
}

// Ordered factorizations of vol into d positive factors.
inline std::vector<IntVector> diagonal_factorizations(std::size_t d, Int vol) {
  std::vector<IntVector> out;
  IntVector cur;
  std::function<void(Int)> rec = [&](Int rest) {
    if (cur.size() + 1 == d) {
      cur.push_back(rest);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (Int f = 1; f <= rest; ++f)
      if (rest % f == 0) {
        cur.push_back(f);
        rec(rest / f);
        cur.pop_back();
      }
  };
  rec(vol);
  return out;
}

// Calls fn(simplex) for conv{0, rows of H} over every lower-triangular H with
// the given diagonal whose entries left of the diagonal lie in [0, H_ii).
template <typename Fn>
void for_each_hnf_simplex_with_diagonal(const IntVector& diag, Fn&& fn) {
  const std::size_t d = diag.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (diag[i] > 1) slots.emplace_back(i, j);
  std::vector<IntVector> rows(d, IntVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) rows[i][i] = diag[i];
  for (;;) {
    std::vector<IntVector> verts{IntVector(d, 0)};
    verts.insert(verts.end(), rows.begin(), rows.end());
    fn(Simplex(std::move(verts)));
    std::size_t k = 0;
    while (k < slots.size()) {
      auto [i, j] = slots[k];
      if (++rows[i][j] < diag[i]) break;
      rows[i][j] = 0;
      ++k;
    }
    if (k == slots.size()) return;
  }
}

template <typename Fn>
void for_each_hnf_simplex(std::size_t d, Int vol, Fn&& fn) {
  for (const auto& diag : diagonal_factorizations(d, vol)) for_each_hnf_simplex_with_diagonal(diag, fn);
}

// All delta vectors of HNF simplices of dimension d and volume vol.
inline std::set<DeltaVector> exhaustive_search(std::size_t d, Int vol, const SearchOptions& opts = {}) {
  if (d < 1 || vol < 1) throw InvalidArgument("exhaustive search needs d >= 1 and vol >= 1");
  const std::uint64_t work = estimate_search_work(d, vol);
  if (work > opts.budget) throw BudgetExceeded("exhaustive search", work, opts.budget);
  const auto diags = diagonal_factorizations(d, vol);
  auto shard = [&diags](std::size_t begin, std::size_t step) {
    std::set<DeltaVector> found;
    for (std::size_t k = begin; k < diags.size(); k += step)
      for_each_hnf_simplex_with_diagonal(diags[k], [&](const Simplex& s) { found.insert(delta_from_box(s)); });
    return found;
  };
  if (opts.threads <= 1) return shard(0, 1);
  std::vector<std::future<std::set<DeltaVector>>> parts;
  for (unsigned t = 0; t < opts.threads; ++t) parts.push_back(std::async(std::launch::async, shard, t, opts.threads));
  std::set<DeltaVector> all;
  for (auto& f : parts) all.merge(f.get());
  return all;
}

}  // namespace ehrhart
