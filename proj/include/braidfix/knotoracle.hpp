#pragma once

#include "braidfix/braidcore.hpp"
#include "braidfix/laurent.hpp"
#include "braidfix/su2geom.hpp"

#include <cstdint>
#include <vector>

namespace braidfix {

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t &operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  IntegerMatrix transpose() const;
  IntegerMatrix operator+(const IntegerMatrix &o) const;

  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// (n-1) x (n-1) reduced Burau image of b.
PolyMatrix burau_reduced(const BraidWord &b);

/// Symmetric Alexander polynomial with value +1 at t = 1. Throws DomainError
/// if the closure is not a knot.
LaurentPoly alexander(const BraidWord &b);

/// |alexander(b)(-1)|
std::int64_t determinant(const BraidWord &b);

/// Seifert matrix of the surface made of one disk per strand and one half
/// twisted band per letter. Throws DomainError when the closure is not a knot
/// or some column index is missing (split diagram).
IntegerMatrix seifert_matrix(const BraidWord &b);

/// Signature of V + V^T via exact congruence diagonalization.
int symmetric_signature(const IntegerMatrix &m);
BigInt integer_determinant(const IntegerMatrix &m);

int signature(const BraidWord &b);

/// det(V - t V^T)
LaurentPoly seifert_alexander(const IntegerMatrix &v);

/// (determinant - 1) / 2
int binary_dihedral_count(const BraidWord &b);

namespace detail {

/// Closed polygon, last vertex joined back to the first.
using Polygon = std::vector<Vec3>;

/// Linking number of two disjoint closed polygons by signed crossings in a
/// generic projection. Throws std::runtime_error when no projection
/// direction tried is generic.
int linking_number(const Polygon &a, const Polygon &b);

struct SeifertLoops {
  std::vector<Polygon> loops;
  /// the same loops pushed off along the positive normal of the surface
  std::vector<Polygon> pushed;
};

SeifertLoops seifert_loops(const BraidWord &b);

} // namespace detail

} // namespace braidfix
