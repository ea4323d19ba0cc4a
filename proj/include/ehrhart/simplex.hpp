#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/checked.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/matrix.hpp"

namespace ehrhart {

// A full-dimensional lattice simplex: d+1 integer vertices in Z^d.
// Construction rejects malformed or degenerate input, so every Simplex value
// has a positive normalized volume.
class Simplex {
 public:
  explicit Simplex(std::vector<IntVector> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw InvalidArgument("a simplex needs at least two vertices");
    const std::size_t d = vertices_.size() - 1;
    for (const auto& v : vertices_)
      if (v.size() != d)
        throw InvalidArgument("simplex with " + std::to_string(d + 1) + " vertices must live in Z^" +
                              std::to_string(d) + ", got a vertex of length " + std::to_string(v.size()));
    Int det = exact_det(edge_matrix());
    if (det == 0) throw DegenerateSimplexError("simplex is degenerate (zero volume)");
    volume_ = checked_abs(det);
  }

  std::size_t dim() const noexcept { return vertices_.size() - 1; }
  const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
  const IntVector& vertex(std::size_t i) const { return vertices_.at(i); }
  Int volume() const noexcept { return volume_; }

  // Rows v_i - v_0, i = 1..d.
  IntMatrix edge_matrix() const {
    const std::size_t d = vertices_.size() - 1;
    IntMatrix e(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) e(i, j) = checked_sub(vertices_[i + 1][j], vertices_[0][j]);
    return e;
  }

  // Rows (v_i, 1), i = 0..d.
  IntMatrix homogenized_matrix() const {
    const std::size_t d = vertices_.size() - 1;
    IntMatrix h(d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j < d; ++j) h(i, j) = vertices_[i][j];
      h(i, d) = 1;
    }
    return h;
  }

  friend bool operator==(const Simplex& a, const Simplex& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<IntVector> vertices_;
  Int volume_ = 0;
};

inline Int normalized_volume(const Simplex& s) { return s.volume(); }

// conv{0, e_1, ..., e_d}
inline Simplex unit_simplex(std::size_t d) {
  std::vector<IntVector> v(d + 1, IntVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) v[i + 1][i] = 1;
  return Simplex(std::move(v));
}

}  // namespace ehrhart
