#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/checked.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/matrix.hpp"

namespace ehrhart {

// (δ_0, ..., δ_d) with δ_0 = 1 and all entries nonnegative. The length fixes
// the dimension d, so trailing zeros are significant.
class DeltaVector {
 public:
  DeltaVector() : entries_{1} {}
  explicit DeltaVector(IntVector entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidArgument("delta vector must have at least one entry");
    if (entries_[0] != 1) throw InvalidArgument("delta vector must start with 1");
    for (Int x : entries_)
      if (x < 0) throw InvalidArgument("delta vector entries must be nonnegative");
  }

  std::size_t dim() const noexcept { return entries_.size() - 1; }
  const IntVector& entries() const noexcept { return entries_; }
  Int operator[](std::size_t i) const { return entries_.at(i); }

  Int volume() const {
    Int s = 0;
    for (Int x : entries_) s = checked_add(s, x);
    return s;
  }

  // max{i : δ_i != 0}
  std::size_t degree() const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] != 0) s = i;
    return s;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(entries_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
  friend auto operator<=>(const DeltaVector&, const DeltaVector&) = default;
  friend std::ostream& operator<<(std::ostream& os, const DeltaVector& v) { return os << v.to_string(); }

 private:
  IntVector entries_;
};

// The multiset {i_1 <= ... <= i_{m-1}} of positive degrees, i.e.
// Σ δ_i t^i = 1 + t^{i_1} + ... + t^{i_{m-1}}, with the dimension carried along.
class ExponentList {
 public:
  ExponentList(IntVector sorted_exponents, std::size_t dim) : exps_(std::move(sorted_exponents)), dim_(dim) {
    if (!std::is_sorted(exps_.begin(), exps_.end())) throw InvalidArgument("exponents must be nondecreasing");
    for (Int e : exps_)
      if (e < 1 || e > static_cast<Int>(dim_))
        throw InvalidArgument("exponent " + std::to_string(e) + " outside [1, " + std::to_string(dim_) + "]");
  }

  // m = Σ δ_i
  Int volume() const noexcept { return static_cast<Int>(exps_.size()) + 1; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return exps_.size(); }
  const IntVector& values() const noexcept { return exps_; }

  // 1-based: at(1) = i_1, ..., at(m-1) = i_{m-1}.
  Int at(std::size_t j) const {
    if (j == 0 || j > exps_.size()) throw InvalidArgument("exponent index out of range");
    return exps_[j - 1];
  }

  friend bool operator==(const ExponentList&, const ExponentList&) = default;

 private:
  IntVector exps_;
  std::size_t dim_;
};

inline ExponentList exponents(const DeltaVector& v) {
  IntVector out;
  for (std::size_t i = 1; i <= v.dim(); ++i)
    for (Int k = 0; k < v[i]; ++k) out.push_back(static_cast<Int>(i));
  return ExponentList(std::move(out), v.dim());
}

inline DeltaVector to_delta(const ExponentList& e) {
  IntVector d(e.dim() + 1, 0);
  d[0] = 1;
  for (Int x : e.values()) ++d[static_cast<std::size_t>(x)];
  return DeltaVector(std::move(d));
}

}  // namespace ehrhart
