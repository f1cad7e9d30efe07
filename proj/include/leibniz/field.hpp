#pragma once

// Exact scalars over Q, Q(i) and GF(p).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "leibniz/error.hpp"

namespace leibniz {

enum class FieldKind : std::uint8_t { Rationals, GaussianRationals, PrimeField };

class FieldDesc {
 public:
  FieldDesc() = default;

  static FieldDesc rationals() { return FieldDesc(FieldKind::Rationals, 0); }
  static FieldDesc gaussian() { return FieldDesc(FieldKind::GaussianRationals, 0); }
  /// Throws FieldError unless p is a prime below 2^32.
  static FieldDesc prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t characteristic() const { return kind_ == FieldKind::PrimeField ? p_ : 0; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
  /// True when the field carries a designated square root of -1.
  bool has_imaginary_unit() const;

  std::string str() const;

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

 private:
  FieldDesc(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

using Rational = mpq_class;

struct Gaussian {
  Rational re;
  Rational im;
};

/// An exact field element. Canonical per value: rationals in lowest terms,
/// residues in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar();

  static Scalar zero(const FieldDesc& f);
  static Scalar one(const FieldDesc& f);
  static Scalar from_int(const FieldDesc& f, long value);
  static Scalar from_rational(const FieldDesc& f, const Rational& q);
  static Scalar gaussian(const Rational& re, const Rational& im);
  static Scalar residue(const FieldDesc& f, std::uint64_t r);

  const FieldDesc& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// PrimeField residue. Precondition: field is PrimeField.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  /// Real part (Q, Q(i)); precondition: characteristic 0.
  Rational real() const;
  /// Imaginary part; zero over Q.
  Rational imag() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws FieldError on zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Text form per the scalar grammar; parse_scalar(str()) == *this.
  std::string str() const;
  std::size_t hash() const;

 private:
  void require_same_field(const Scalar& o) const;

  FieldDesc field_;
  std::variant<std::uint64_t, Rational, Gaussian> value_;
};

/// Grammar: rational := int | int "/" posint;
/// gauss := rational (("+"|"-") rational "*i")? | rational "*i".
/// Over GF(p) rationals are reduced mod p and "i" maps to imaginary_unit().
Scalar parse_scalar(std::string_view text, const FieldDesc& field);

/// Square root of -1: (0,1) over Q(i); the smaller root over GF(p), p = 1 mod 4
/// (and 1 over GF(2)). Throws FieldError otherwise.
Scalar imaginary_unit(const FieldDesc& field);

/// A square root inside the field, if one exists.
std::optional<Scalar> field_sqrt(const Scalar& x);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace leibniz

template <>
struct std::hash<leibniz::Scalar> {
  std::size_t operator()(const leibniz::Scalar& s) const { return s.hash(); }
};
