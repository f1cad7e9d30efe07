#pragma once

// Word-sized GF(p) kernel for the enumeration-heavy searches. Vectors are
// fixed-size residue arrays; subspaces are RREF row lists. Everything here is
// exact; it only trades generality (dim <= kMaxDim) for speed.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz::gfp {

constexpr std::size_t kMaxDim = 8;
constexpr std::uint64_t kEnumerationLimit = 100'000'000;

using Vec = std::array<std::uint32_t, kMaxDim>;

class Arith {
 public:
  explicit Arith(std::uint32_t p);
  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : std::uint32_t(a + std::uint64_t(p_) - b); }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return std::uint32_t(std::uint64_t(a) * b % p_); }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;  // table for small p
};

/// Canonical RREF subspace of GF(p)^n.
struct Space {
  std::size_t n = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return rows.size(); }
  bool operator==(const Space& o) const { return n == o.n && rows == o.rows; }
};

struct SpaceHash {
  std::size_t operator()(const Space& s) const;
};

Space zero_space(std::size_t n);
Space full_space(std::size_t n);
/// v reduced against the pivots of s.
Vec reduce(const Arith& ar, const Space& s, Vec v);
bool contains(const Arith& ar, const Space& s, const Vec& v);
bool contains(const Arith& ar, const Space& big, const Space& small);
/// Adds v to the span; returns false when v was already inside.
bool insert(const Arith& ar, Space& s, const Vec& v);
Space span(const Arith& ar, std::size_t n, const std::vector<Vec>& vs);
Space sum(const Arith& ar, const Space& a, const Space& b);
Space intersect(const Arith& ar, const Space& a, const Space& b);
/// Kernel of the linear forms given as rows.
Space solve_homogeneous(const Arith& ar, std::size_t n, const std::vector<Vec>& forms);
/// span{b.reduce(a) : a in A}: canonical complement of B inside A (B need not lie in A).
Space reduce_space(const Arith& ar, const Space& a, const Space& b);

/// Number of d-dimensional subspaces of GF(p)^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t p, std::size_t n, std::size_t d);

/// Streams every d-dimensional subspace once: pivot sets in lexicographic
/// order, then free entries lexicographically. The callback returns false to
/// stop. Throws InfeasibleEnumeration above `limit` subspaces.
void enumerate_subspaces(std::uint32_t p, std::size_t n, std::size_t d, const std::function<bool(const Space&)>& visit,
                         std::uint64_t limit = kEnumerationLimit);

/// Vectors of `w` with leading coordinate 1: one representative per projective point.
void for_each_point(const Arith& ar, const Space& w, const std::function<bool(const Vec&)>& visit);
std::uint64_t point_count(std::uint32_t p, std::size_t d);

class Algebra {
 public:
  /// Requires a PrimeField algebra of dimension at most kMaxDim.
  explicit Algebra(const LeibnizAlgebra& l);

  std::size_t dim() const { return n_; }
  std::uint32_t p() const { return ar_.p(); }
  const Arith& arith() const { return ar_; }
  const FieldDesc& field() const { return field_; }

  const Vec& product(std::size_t i, std::size_t j) const { return prod_[i * n_ + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  bool bracket_is_zero(const Vec& x, const Vec& y) const;

  Vec unit(std::size_t k) const;
  Space zero() const { return zero_space(n_); }
  Space full() const { return full_space(n_); }

  Space from_subspace(const Subspace& s) const;
  Subspace to_subspace(const Space& s) const;
  Vec from_vector(const Vector& v) const;
  Vector to_vector(const Vec& v) const;

  bool is_abelian(const Space& s) const;
  bool is_subalgebra(const Space& s) const;
  bool is_ideal(const Space& s) const;
  /// s + Fv is an ideal, assuming s is one.
  bool extends_to_ideal(const Space& s, const Vec& v) const;
  Space ideal_closure(Space s) const;
  Space subalgebra_closure(Space s) const;
  /// {x : [x,a] = [a,x] = 0 for all a in s}, optionally also x_c = 0 for c in zero_cols.
  Space centraliser(const Space& s, const std::vector<std::size_t>& zero_cols = {}) const;
  Space product_space(const Space& a, const Space& b) const;
  /// s^1 = s, s^(k+1) = [s^k, s] reaches 0.
  bool is_nilpotent(const Space& s) const;
  Space core(const Space& s) const;

 private:
  FieldDesc field_;
  std::size_t n_;
  Arith ar_;
  std::vector<Vec> prod_;
};

/// Every ideal of L (closure search from 0). Throws InfeasibleEnumeration
/// when the number of projective points to test exceeds `limit`.
std::vector<Space> all_ideals(const Algebra& l, std::uint64_t limit = 20'000'000);

/// Largest nilpotent ideal, grown one generator at a time from the
/// nilpotent ideal L^2 + I (when that is nilpotent).
Space nilradical(const Algebra& l);

/// Maximal subalgebras by a top-down scan over subspace dimensions.
std::vector<Space> maximal_subalgebras(const Algebra& l, std::uint64_t limit = kEnumerationLimit);

/// True when a flag of ideals of L, one in every dimension, exists.
bool has_ideal_flag(const Algebra& l);

/// No ideal of L lies strictly between b and a (b inside a, both ideals).
bool is_minimal_over(const Algebra& l, const Space& a, const Space& b);

struct AbelianSearchResult {
  std::size_t dim = 0;
  Space witness;
  /// Number of maximisers found, saturated at 2 (ideal search only).
  std::size_t maximisers = 0;
  std::uint64_t nodes = 0;
};

/// Largest abelian subalgebra by branch and bound over RREF row sequences,
/// starting from a known abelian subspace `seed`.
AbelianSearchResult max_abelian_subalgebra(const Algebra& l, const Space& seed);
/// Largest abelian ideal and whether it is unique. Searches abelian ideals
/// grown by ideal closure inside `bound`, which must be a nilpotent ideal
/// containing every abelian ideal (the nilradical).
AbelianSearchResult max_abelian_ideal(const Algebra& l, const Space& bound);

/// Unpruned reference: scan every subspace from dimension n down.
AbelianSearchResult naive_max_abelian(const Algebra& l, bool ideals_only);

}  // namespace leibniz::gfp
