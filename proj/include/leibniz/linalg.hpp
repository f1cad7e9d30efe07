#pragma once

// Exact dense matrices and canonical (RREF) subspaces.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldDesc& f, std::size_t n);
Vector unit_vector(const FieldDesc& f, std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
/// y += s * x
void axpy(Vector& y, const Scalar& s, const Vector& x);
std::string format_vector(const Vector& v);

/// Row-major dense matrix. Acts on column vectors: (M v)_r = sum_c M(r,c) v_c.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldDesc& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldDesc& f, std::size_t n);
  static Matrix from_rows(const FieldDesc& f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldDesc& f, std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldDesc& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string str() const;

 private:
  FieldDesc field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  Matrix reduced;                   // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form of the row space; zero rows dropped.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Monic characteristic polynomial det(tI - M), coefficients in ascending
/// degree: result[k] is the coefficient of t^k, result[n] == 1.
/// Hessenberg reduction followed by the standard recurrence; valid over any field.
std::vector<Scalar> charpoly(const Matrix& m);
Matrix evaluate_polynomial(const std::vector<Scalar>& coeffs, const Matrix& m);
bool is_nilpotent_matrix(const Matrix& m);

/// A subspace of F^n held by its canonical RREF basis. Two subspaces are
/// equal exactly when their bases are entrywise equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const FieldDesc& f, std::size_t ambient);
  static Subspace full(const FieldDesc& f, std::size_t ambient);
  /// Canonical RREF of the span. Throws DimensionError on length mismatch.
  static Subspace span(const FieldDesc& f, std::size_t ambient, const std::vector<Vector>& vectors);
  /// Span of the listed standard basis vectors (0-based).
  static Subspace coordinate(const FieldDesc& f, std::size_t ambient, const std::vector<std::size_t>& indices);

  const FieldDesc& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const;
  /// Standard coordinates that are not pivots: a canonical complement.
  std::vector<std::size_t> non_pivots() const;

  /// v minus its projection along the pivots; zero iff v lies in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (which must lie in the subspace) in the RREF basis.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  std::size_t hash() const;
  std::string str() const;

 private:
  FieldDesc field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// canonicalize(vectors) == Subspace::span; spelled out for readability at call sites.
inline Subspace canonicalize(const std::vector<Vector>& vectors, std::size_t ambient, const FieldDesc& f) {
  return Subspace::span(f, ambient, vectors);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// Kernel {x : M x = 0} as a subspace of F^{cols}.
Subspace nullspace(const Matrix& m);
/// Image of the subspace under M.
Subspace image(const Matrix& m, const Subspace& u);

}  // namespace leibniz

template <>
struct std::hash<leibniz::Subspace> {
  std::size_t operator()(const leibniz::Subspace& s) const { return s.hash(); }
};
