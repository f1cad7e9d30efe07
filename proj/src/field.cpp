#include "leibniz/field.hpp"

#include <fmt/format.h>

#include <cctype>

namespace leibniz {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t rational_to_residue(const Rational& q, std::uint64_t p) {
  mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
  if (den == 0)
    throw FieldError(fmt::format("denominator {} vanishes mod {}", q.get_den().get_str(), p));
  return mul_mod(num.get_ui(), mod_inverse(den.get_ui(), p), p);
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit to stay exact for p < 2^32.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw FieldError(fmt::format("{} is not invertible mod {}", a, p));
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

FieldDesc FieldDesc::prime(std::uint64_t p) {
  if (p >= (1ULL << 32U) || !is_prime(p))
    throw FieldError(fmt::format("GF(p) needs a prime p below 2^32, got {}", p));
  return FieldDesc(FieldKind::PrimeField, p);
}

bool FieldDesc::has_imaginary_unit() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return false;
    case FieldKind::GaussianRationals:
      return true;
    case FieldKind::PrimeField:
      return p_ == 2 || p_ % 4 == 1;
  }
  return false;
}

std::string FieldDesc::str() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::GaussianRationals:
      return "Q(i)";
    case FieldKind::PrimeField:
      return fmt::format("GF({})", p_);
  }
  return "?";
}

Scalar::Scalar() : value_(Rational(0)) {}

Scalar Scalar::zero(const FieldDesc& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldDesc& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldDesc& f, long value) {
  return from_rational(f, Rational(value));
}

Scalar Scalar::from_rational(const FieldDesc& f, const Rational& q) {
  Scalar s;
  s.field_ = f;
  switch (f.kind()) {
    case FieldKind::Rationals: {
      Rational c = q;
      c.canonicalize();
      s.value_ = c;
      break;
    }
    case FieldKind::GaussianRationals: {
      Rational c = q;
      c.canonicalize();
      s.value_ = Gaussian{c, Rational(0)};
      break;
    }
    case FieldKind::PrimeField:
      s.value_ = rational_to_residue(q, f.p());
      break;
  }
  return s;
}

Scalar Scalar::gaussian(const Rational& re, const Rational& im) {
  Scalar s;
  s.field_ = FieldDesc::gaussian();
  Gaussian g{re, im};
  g.re.canonicalize();
  g.im.canonicalize();
  s.value_ = std::move(g);
  return s;
}

Scalar Scalar::residue(const FieldDesc& f, std::uint64_t r) {
  if (!f.is_prime_field()) throw FieldError("residue() requires a prime field");
  Scalar s;
  s.field_ = f;
  s.value_ = r % f.p();
  return s;
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return std::get<Rational>(value_) == 0;
    case FieldKind::GaussianRationals: {
      const auto& g = std::get<Gaussian>(value_);
      return g.re == 0 && g.im == 0;
    }
    case FieldKind::PrimeField:
      return std::get<std::uint64_t>(value_) == 0;
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

Rational Scalar::real() const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return std::get<Rational>(value_);
    case FieldKind::GaussianRationals:
      return std::get<Gaussian>(value_).re;
    case FieldKind::PrimeField:
      break;
  }
  throw FieldError("real() is undefined over GF(p)");
}

Rational Scalar::imag() const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return Rational(0);
    case FieldKind::GaussianRationals:
      return std::get<Gaussian>(value_).im;
    case FieldKind::PrimeField:
      break;
  }
  throw FieldError("imag() is undefined over GF(p)");
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldError(fmt::format("field mismatch: {} vs {}", field_.str(), o.field_.str()));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<Rational>(r.value_) = -std::get<Rational>(value_);
      break;
    case FieldKind::GaussianRationals: {
      auto& g = std::get<Gaussian>(r.value_);
      g.re = -g.re;
      g.im = -g.im;
      break;
    }
    case FieldKind::PrimeField: {
      auto v = std::get<std::uint64_t>(value_);
      std::get<std::uint64_t>(r.value_) = v == 0 ? 0 : field_.p() - v;
      break;
    }
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<Rational>(value_) += std::get<Rational>(o.value_);
      break;
    case FieldKind::GaussianRationals: {
      auto& g = std::get<Gaussian>(value_);
      const auto& h = std::get<Gaussian>(o.value_);
      g.re += h.re;
      g.im += h.im;
      break;
    }
    case FieldKind::PrimeField: {
      auto& v = std::get<std::uint64_t>(value_);
      v += std::get<std::uint64_t>(o.value_);
      if (v >= field_.p()) v -= field_.p();
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<Rational>(value_) *= std::get<Rational>(o.value_);
      break;
    case FieldKind::GaussianRationals: {
      auto& g = std::get<Gaussian>(value_);
      const auto& h = std::get<Gaussian>(o.value_);
      Rational re = g.re * h.re - g.im * h.im;
      Rational im = g.re * h.im + g.im * h.re;
      g.re = std::move(re);
      g.im = std::move(im);
      break;
    }
    case FieldKind::PrimeField: {
      auto& v = std::get<std::uint64_t>(value_);
      v = mul_mod(v, std::get<std::uint64_t>(o.value_), field_.p());
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar r = *this;
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<Rational>(r.value_) = 1 / std::get<Rational>(value_);
      break;
    case FieldKind::GaussianRationals: {
      const auto& g = std::get<Gaussian>(value_);
      Rational norm = g.re * g.re + g.im * g.im;
      r = gaussian(g.re / norm, -g.im / norm);
      break;
    }
    case FieldKind::PrimeField:
      std::get<std::uint64_t>(r.value_) = mod_inverse(std::get<std::uint64_t>(value_), field_.p());
      break;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  switch (a.field_.kind()) {
    case FieldKind::Rationals:
      return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
    case FieldKind::GaussianRationals: {
      const auto& g = std::get<Gaussian>(a.value_);
      const auto& h = std::get<Gaussian>(b.value_);
      return g.re == h.re && g.im == h.im;
    }
    case FieldKind::PrimeField:
      return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
  }
  return false;
}

std::string Scalar::str() const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return std::get<Rational>(value_).get_str();
    case FieldKind::GaussianRationals: {
      const auto& g = std::get<Gaussian>(value_);
      if (g.im == 0) return g.re.get_str();
      if (g.re == 0) return g.im.get_str() + "*i";
      Rational mag = abs(g.im);
      return g.re.get_str() + (g.im < 0 ? "-" : "+") + mag.get_str() + "*i";
    }
    case FieldKind::PrimeField:
      return std::to_string(std::get<std::uint64_t>(value_));
  }
  return "?";
}

std::size_t Scalar::hash() const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return std::hash<std::string>{}(std::get<Rational>(value_).get_str());
    case FieldKind::GaussianRationals: {
      const auto& g = std::get<Gaussian>(value_);
      return mix(std::hash<std::string>{}(g.re.get_str()), std::hash<std::string>{}(g.im.get_str()));
    }
    case FieldKind::PrimeField:
      return std::hash<std::uint64_t>{}(std::get<std::uint64_t>(value_));
  }
  return 0;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  struct Parsed {
    Rational re{0};
    Rational im{0};
    bool has_imag = false;
  };

  Parsed parse() {
    Parsed out;
    skip_ws();
    if (at_end()) fail("empty scalar");
    // A leading bare "i" / "-i".
    if (try_bare_imag(out.im)) {
      out.has_imag = true;
      finish();
      return out;
    }
    Rational first = parse_rational(true);
    skip_ws();
    if (at_end()) {
      out.re = first;
      return out;
    }
    if (try_consume("*i")) {
      out.im = first;
      out.has_imag = true;
      finish();
      return out;
    }
    char sign = peek();
    if (sign != '+' && sign != '-') fail("unexpected character");
    ++pos_;
    skip_ws();
    Rational second;
    if (peek() == 'i') {
      ++pos_;
      second = 1;
    } else {
      second = parse_rational(false);
      skip_ws();
      if (!try_consume("*i")) fail("expected '*i' after imaginary part");
    }
    out.re = first;
    out.im = sign == '-' ? Rational(-second) : second;
    out.has_imag = true;
    finish();
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw ParseError(fmt::format("malformed scalar '{}': {}", text_, what));
  }
  bool try_consume(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  void finish() {
    skip_ws();
    if (!at_end()) fail("trailing characters");
  }
  bool try_bare_imag(Rational& im) {
    std::size_t save = pos_;
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    if (peek() == 'i') {
      ++pos_;
      im = sign;
      return true;
    }
    pos_ = save;
    return false;
  }
  mpz_class parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }
  Rational parse_rational(bool allow_sign) {
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    mpz_class num = parse_digits();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      den = parse_digits();
      if (den == 0) throw ParseError(fmt::format("zero denominator in '{}'", text_));
    }
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const FieldDesc& field) {
  auto parsed = ScalarParser(text).parse();
  switch (field.kind()) {
    case FieldKind::Rationals:
      if (parsed.has_imag)
        throw FieldError(fmt::format("'{}' uses i over Q, which has no designated i", text));
      return Scalar::from_rational(field, parsed.re);
    case FieldKind::GaussianRationals:
      return Scalar::gaussian(parsed.re, parsed.im);
    case FieldKind::PrimeField: {
      Scalar re = Scalar::from_rational(field, parsed.re);
      if (!parsed.has_imag) return re;
      if (!field.has_imaginary_unit())
        throw FieldError(fmt::format("'{}' uses i over {}, which has no designated i", text, field.str()));
      return re + Scalar::from_rational(field, parsed.im) * imaginary_unit(field);
    }
  }
  throw ParseError("unknown field");
}

Scalar imaginary_unit(const FieldDesc& field) {
  switch (field.kind()) {
    case FieldKind::Rationals:
      throw FieldError("Q has no square root of -1");
    case FieldKind::GaussianRationals:
      return Scalar::gaussian(0, 1);
    case FieldKind::PrimeField: {
      std::uint64_t p = field.p();
      if (p == 2) return Scalar::one(field);
      if (p % 4 != 1) throw FieldError(fmt::format("GF({}) has no square root of -1", p));
      for (std::uint64_t c = 2; c < p; ++c) {
        // c^((p-1)/4) squares to c^((p-1)/2) = -1 exactly when c is a non-residue.
        std::uint64_t r = mod_pow(c, (p - 1) / 4, p);
        if (mul_mod(r, r, p) == p - 1) return Scalar::residue(field, std::min(r, p - r));
      }
      break;
    }
  }
  throw FieldError("no square root of -1 found");
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::optional<std::uint64_t> residue_sqrt(std::uint64_t a, std::uint64_t p) {
  if (a == 0 || p == 2) return a;
  if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t q = p - 1, s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = mod_pow(z, q, p), t = mod_pow(a, q, p), r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

}  // namespace

std::optional<Scalar> field_sqrt(const Scalar& x) {
  const FieldDesc& f = x.field();
  switch (f.kind()) {
    case FieldKind::Rationals: {
      auto r = rational_sqrt(x.real());
      if (!r) return std::nullopt;
      return Scalar::from_rational(f, *r);
    }
    case FieldKind::GaussianRationals: {
      // (u + v i)^2 = a + b i  <=>  u^2 - v^2 = a, 2uv = b.
      Rational a = x.real(), b = x.imag();
      if (b == 0) {
        if (auto r = rational_sqrt(a)) return Scalar::gaussian(*r, 0);
        if (auto r = rational_sqrt(Rational(-a))) return Scalar::gaussian(0, *r);
        return std::nullopt;
      }
      auto modulus = rational_sqrt(Rational(a * a + b * b));
      if (!modulus) return std::nullopt;
      auto u = rational_sqrt(Rational((a + *modulus) / 2));
      if (!u || *u == 0) return std::nullopt;
      Rational v = b / (2 * *u);
      return Scalar::gaussian(*u, v);
    }
    case FieldKind::PrimeField: {
      auto r = residue_sqrt(x.residue(), f.p());
      if (!r) return std::nullopt;
      return Scalar::residue(f, *r);
    }
  }
  return std::nullopt;
}

}  // namespace leibniz
