#include <doctest.h>

#include <random>

#include "leibniz/error.hpp"
#include "leibniz/field.hpp"

using namespace leibniz;

namespace {

Scalar random_scalar(const FieldDesc& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  switch (f.kind()) {
    case FieldKind::PrimeField:
      return Scalar::residue(f, rng() % f.p());
    case FieldKind::Rationals:
      return Scalar::from_rational(f, Rational(num(rng), den(rng)));
    case FieldKind::GaussianRationals:
      return Scalar::gaussian(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  }
  return Scalar::zero(f);
}

}  // namespace

TEST_CASE("parse_scalar reads the documented grammar") {
  const auto q = FieldDesc::rationals();
  const auto qi = FieldDesc::gaussian();
  const auto gf5 = FieldDesc::prime(5);
  CHECK(parse_scalar("0", q).is_zero());
  CHECK(parse_scalar("-3/6", q) == Scalar::from_rational(q, Rational(-1, 2)));
  Scalar z = parse_scalar("-1/2+3*i", qi);
  CHECK(z.real() == Rational(-1, 2));
  CHECK(z.imag() == 3);
  CHECK(parse_scalar("7", gf5).residue() == 2);
  CHECK(parse_scalar("-1", gf5).residue() == 4);
  CHECK(parse_scalar("1/2", gf5).residue() == 3);
  CHECK(parse_scalar("i", gf5).residue() == 2);
  CHECK_THROWS_AS(parse_scalar("1//2", q), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", q), ParseError);
  CHECK_THROWS_AS(parse_scalar("2*i", q), FieldError);
  CHECK_THROWS_AS(parse_scalar("i", FieldDesc::prime(7)), FieldError);
  CHECK_THROWS(parse_scalar("1/5", gf5));
}

TEST_CASE("imaginary unit is the smaller square root of -1") {
  for (std::uint64_t p : {5u, 13u, 17u, 29u, 2u}) {
    auto f = FieldDesc::prime(p);
    std::uint64_t brute = 0;
    for (std::uint64_t r = 1; r < p; ++r)
      if ((r * r + 1) % p == 0) {
        brute = r;
        break;
      }
    CHECK(imaginary_unit(f).residue() == brute);
  }
  CHECK(imaginary_unit(FieldDesc::prime(5)).residue() == 2);
  CHECK(imaginary_unit(FieldDesc::prime(13)).residue() == 5);
  auto i = imaginary_unit(FieldDesc::gaussian());
  CHECK(i * i == Scalar::from_int(FieldDesc::gaussian(), -1));
  CHECK_THROWS_AS(imaginary_unit(FieldDesc::rationals()), FieldError);
  CHECK_THROWS_AS(imaginary_unit(FieldDesc::prime(7)), FieldError);
}

TEST_CASE("field axioms hold on random pairs") {
  std::mt19937_64 rng(7);
  for (auto f : {FieldDesc::rationals(), FieldDesc::gaussian(), FieldDesc::prime(2), FieldDesc::prime(13),
                 FieldDesc::prime(4294967291ull)}) {
    for (int t = 0; t < 1000; ++t) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
      REQUIRE(parse_scalar(a.str(), f) == a);
    }
  }
}

TEST_CASE("division by zero is an error") {
  auto f = FieldDesc::prime(7);
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), FieldError);
  CHECK_THROWS_AS(Scalar::one(FieldDesc::rationals()) / Scalar::zero(FieldDesc::rationals()), FieldError);
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(Scalar::one(FieldDesc::prime(5)) + Scalar::one(FieldDesc::prime(7)), FieldError);
  CHECK_THROWS(FieldDesc::prime(9));
}

TEST_CASE("square roots inside the field") {
  auto f = FieldDesc::prime(13);
  for (std::uint64_t r = 0; r < 13; ++r) {
    auto s = field_sqrt(Scalar::residue(f, r));
    bool is_square = false;
    for (std::uint64_t x = 0; x < 13; ++x) is_square = is_square || (x * x) % 13 == r;
    CHECK(s.has_value() == is_square);
    if (s) CHECK((*s * *s).residue() == r);
  }
  auto q = FieldDesc::rationals();
  CHECK(field_sqrt(Scalar::from_rational(q, Rational(9, 4))) == Scalar::from_rational(q, Rational(3, 2)));
  CHECK(!field_sqrt(Scalar::from_int(q, 2)));
  auto qi = FieldDesc::gaussian();
  auto m1 = field_sqrt(Scalar::from_int(qi, -1));
  REQUIRE(m1);
  CHECK(*m1 * *m1 == Scalar::from_int(qi, -1));
  auto z = field_sqrt(Scalar::gaussian(3, 4));
  REQUIRE(z);
  CHECK(*z * *z == Scalar::gaussian(3, 4));
}
