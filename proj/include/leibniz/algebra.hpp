#pragma once

// Right Leibniz algebras given by structure constants, and the first-order
// structural maps on them (series, squares ideal, centre, centralisers, ...).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Unchecked n x n x n structure tensor: [e_i, e_j] = sum_k c(i,j,k) e_k (0-based).
class StructureTensor {
 public:
  StructureTensor(const FieldDesc& f, std::size_t n);

  const FieldDesc& field() const { return field_; }
  std::size_t dim() const { return n_; }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

  Vector product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, const Vector& v);
  Vector bracket(const Vector& x, const Vector& y) const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  FieldDesc field_;
  std::size_t n_;
  std::vector<Scalar> c_;
};

/// One failure of [e_a,[e_b,e_c]] = [[e_a,e_b],e_c] - [[e_a,e_c],e_b] (0-based indices).
struct Violation {
  std::size_t a, b, c;
  Vector lhs, rhs;
};

class InvalidAlgebra : public LeibnizError {
 public:
  explicit InvalidAlgebra(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

std::vector<Violation> leibniz_violations(const StructureTensor& t);

class LeibnizAlgebra {
 public:
  std::size_t dim() const { return t_.dim(); }
  const FieldDesc& field() const { return t_.field(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const StructureTensor& tensor() const { return t_; }

  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const { return t_.at(i, j, k); }
  Vector product(std::size_t i, std::size_t j) const { return t_.product(i, j); }
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t k) const { return unit_vector(field(), dim(), k); }

  Subspace whole() const { return Subspace::full(field(), dim()); }
  Subspace zero_subspace() const { return Subspace::zero(field(), dim()); }
  Subspace span(const std::vector<Vector>& vs) const { return Subspace::span(field(), dim(), vs); }

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) { return a.t_ == b.t_; }

 private:
  friend LeibnizAlgebra validate(StructureTensor t, std::string name);
  LeibnizAlgebra(StructureTensor t, std::string name) : t_(std::move(t)), name_(std::move(name)) {}

  StructureTensor t_;
  std::string name_;
};

/// Checks the Leibniz identity on all basis triples. Throws InvalidAlgebra
/// listing every violating triple.
LeibnizAlgebra validate(StructureTensor t, std::string name = {});

LeibnizAlgebra abelian_algebra(const FieldDesc& f, std::size_t n);

/// Matrix of R_x : y -> [y, x]; column j is [e_j, x].
Matrix right_mult_matrix(const LeibnizAlgebra& l, const Vector& x);
/// Matrix of L_x : y -> [x, y].
Matrix left_mult_matrix(const LeibnizAlgebra& l, const Vector& x);

/// span{[u, v] : u in U, v in V}.
Subspace product_space(const LeibnizAlgebra& l, const Subspace& u, const Subspace& v);

/// L^(1) = L, L^(k+1) = [L^(k), L^(k)], up to and including the first repeat.
std::vector<Subspace> derived_series(const LeibnizAlgebra& l);
/// L^1 = L, L^(k+1) = [L^k, L], up to and including the first repeat.
std::vector<Subspace> lower_central_series(const LeibnizAlgebra& l);
/// Z_0 = 0, Z_(k+1) = {x : [x,L] + [L,x] in Z_k}, up to the first repeat.
std::vector<Subspace> upper_central_series(const LeibnizAlgebra& l);
std::vector<std::size_t> series_dims(const std::vector<Subspace>& series);

/// span{x^2 : x in L}, generated by e_i^2 and [e_i,e_j] + [e_j,e_i].
Subspace squares_ideal(const LeibnizAlgebra& l);

struct Quotient {
  LeibnizAlgebra algebra;
  /// Standard coordinates of L whose images form the quotient basis.
  std::vector<std::size_t> complement;
  /// Ideal that was factored out.
  Subspace kernel;

  Vector project(const Vector& x) const;
  Subspace project(const Subspace& u) const;
  /// Preimage of a quotient subspace (contains the kernel).
  Subspace preimage(const Subspace& u) const;
};

/// L/J on the basis of non-pivot coordinates of J. Throws LeibnizError if J
/// is not an ideal.
Quotient quotient(const LeibnizAlgebra& l, const Subspace& j);
/// L / squares_ideal(L); always a Lie algebra.
LeibnizAlgebra liesation(const LeibnizAlgebra& l);
bool is_lie(const LeibnizAlgebra& l);

Subspace centre(const LeibnizAlgebra& l);
/// {k in K : [h, k] = 0 for all h in H}.
Subspace right_centraliser(const LeibnizAlgebra& l, const Subspace& h, const Subspace& k);
/// {x in L : [x, h] = [h, x] = 0 for all h in H}.
Subspace two_sided_centraliser(const LeibnizAlgebra& l, const Subspace& h);
/// {x in K : [x,h] = [h,x] = 0 for all h in H}.
Subspace two_sided_centraliser_in(const LeibnizAlgebra& l, const Subspace& h, const Subspace& k);
/// Largest ideal of L inside U.
Subspace core_of(const LeibnizAlgebra& l, const Subspace& u);
/// Smallest ideal containing U.
Subspace ideal_closure(const LeibnizAlgebra& l, const Subspace& u);
/// Smallest subalgebra containing U.
Subspace subalgebra_closure(const LeibnizAlgebra& l, const Subspace& u);

bool is_subalgebra(const LeibnizAlgebra& l, const Subspace& u);
bool is_ideal(const LeibnizAlgebra& l, const Subspace& u);
/// [U, L] in U.
bool is_right_ideal(const LeibnizAlgebra& l, const Subspace& u);
bool is_abelian(const LeibnizAlgebra& l, const Subspace& u);
bool is_abelian(const LeibnizAlgebra& l);

/// Transport along the basis f_j = sum_i P(i,j) e_i (columns of P). Throws
/// LeibnizError for singular P.
LeibnizAlgebra change_basis(const LeibnizAlgebra& l, const Matrix& p);
/// Transport a subspace of the original coordinates to the new ones.
Subspace transport_subspace(const Subspace& u, const Matrix& p);

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

/// Structure of a subalgebra S on its RREF basis.
LeibnizAlgebra restrict_to(const LeibnizAlgebra& l, const Subspace& s);

struct ExtensionResult {
  std::optional<LeibnizAlgebra> algebra;
  std::vector<Violation> violations;
};

/// (n+1)-dimensional algebra on M + Fx with [m,x] = d(m), [x,m] = left(m),
/// [x,x] = square; x is the last basis vector.
ExtensionResult derivation_extension(const LeibnizAlgebra& m, const Matrix& d, const Matrix& left,
                                     const Vector& square);

/// Basis of Der(L) = {D : D[x,y] = [Dx,y] + [x,Dy]}.
std::vector<Matrix> derivation_basis(const LeibnizAlgebra& l);

/// Stable image of iterating U -> [U, A] starting from L.
Subspace fitting_component(const LeibnizAlgebra& l, const Subspace& a);

/// The subalgebra S is nilpotent as an algebra (S^k = 0 for some k).
bool is_nilpotent_subalgebra(const LeibnizAlgebra& l, const Subspace& s);

}  // namespace leibniz
