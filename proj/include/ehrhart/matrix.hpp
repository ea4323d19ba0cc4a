#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "ehrhart/checked.hpp"
#include "ehrhart/errors.hpp"

namespace ehrhart {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Int> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) = checked_add((*this)(dst, j), checked_mul(factor, (*this)(src, j)));
  }
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) = checked_add((*this)(i, dst), checked_mul(factor, (*this)(i, src)));
  }
  void negate_row(std::size_t i) {
    for (auto& x : row(i)) x = checked_neg(x);
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
    }
  return c;
}

// Exact determinant by fraction-free (Bareiss) elimination. Intermediate
// products are formed in 128 bits; every stored value is an exact minor of the
// input, so overflow is reported only when a minor does not fit in 64 bits.
inline Int exact_det(const IntMatrix& m) {
  if (!m.square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(a(i, j)) * a(k, k) - static_cast<__int128>(a(i, k)) * a(k, j);
        __int128 q = num / prev;
        if (q > std::numeric_limits<Int>::max() || q < std::numeric_limits<Int>::min())
          throw OverflowError("integer overflow in determinant");
        a(i, j) = static_cast<Int>(q);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign == 1 ? a(n - 1, n - 1) : checked_neg(a(n - 1, n - 1));
}

// Adjugate: adj(m) * m = m * adj(m) = det(m) * I.
inline IntMatrix adjugate(const IntMatrix& m) {
  if (!m.square()) throw InvalidArgument("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      Int cof = exact_det(minor);
      adj(c, r) = ((r + c) % 2 == 0) ? cof : checked_neg(cof);
    }
  return adj;
}

// left * input * right == diag(diagonal), left and right unimodular,
// diagonal positive with diagonal[i] | diagonal[i+1].
struct SNFResult {
  IntVector diagonal;
  IntMatrix left;
  IntMatrix right;
};

inline SNFResult smith_normal_form(const IntMatrix& input) {
  if (!input.square()) throw InvalidArgument("Smith normal form requires a square matrix");
  const std::size_t n = input.rows();
  IntMatrix a = input;
  IntMatrix left = IntMatrix::identity(n);
  IntMatrix right = IntMatrix::identity(n);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = n, pc = n;
      Int best = 0;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          Int v = a(i, j);
          if (v != 0 && (best == 0 || checked_abs(v) < best)) {
            best = checked_abs(v);
            pr = i;
            pc = j;
          }
        }
      if (best == 0) throw DegenerateSimplexError("Smith normal form of a singular matrix");
      a.swap_rows(t, pr);
      left.swap_rows(t, pr);
      a.swap_cols(t, pc);
      right.swap_cols(t, pc);

      bool clean = true;
      const Int pivot = a(t, t);
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / pivot;
        a.add_row_multiple(i, t, checked_neg(q));
        left.add_row_multiple(i, t, checked_neg(q));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / pivot;
        a.add_col_multiple(j, t, checked_neg(q));
        right.add_col_multiple(j, t, checked_neg(q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % pivot != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      a.add_row_multiple(t, bad, 1);
      left.add_row_multiple(t, bad, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SNFResult out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

}  // namespace ehrhart
