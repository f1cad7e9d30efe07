#include "leibniz/invariants.hpp"

#include <fmt/format.h>

#include <random>

#include "leibniz/gfp.hpp"

namespace leibniz {

std::string to_string(Certification c) {
  switch (c) {
    case Certification::Exact:
      return "exact";
    case Certification::FiniteFieldOnly:
      return "finite-field-only";
    case Certification::Unsupported:
      return "unsupported";
  }
  return "?";
}

bool is_solvable(const LeibnizAlgebra& l) { return derived_series(l).back().is_zero(); }
bool is_nilpotent(const LeibnizAlgebra& l) { return lower_central_series(l).back().is_zero(); }

namespace {

std::optional<Scalar> reduce_scalar(const Scalar& s, const FieldDesc& f) {
  try {
    Scalar r = Scalar::from_rational(f, s.real());
    if (s.imag() != 0) r += Scalar::from_rational(f, s.imag()) * imaginary_unit(f);
    return r;
  } catch (const FieldError&) {
    return std::nullopt;
  }
}

bool small_gfp(const LeibnizAlgebra& l) { return l.field().is_prime_field() && l.dim() <= gfp::kMaxDim; }

Matrix flatten_column(const Matrix& m) {
  Matrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v(r * m.cols() + c, 0) = m(r, c);
  return v;
}

Vector flatten(const Matrix& m) { return flatten_column(m).column(0); }

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Subspace nilradical_char0(const LeibnizAlgebra& l) {
  const FieldDesc& f = l.field();
  const std::size_t n = l.dim();
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < n; ++k) gens.push_back(right_mult_matrix(l, l.basis_vector(k)));

  // Unital envelope: words in the generators, closed under right multiplication.
  std::vector<Matrix> basis;
  Subspace span = Subspace::zero(f, n * n);
  auto push = [&](const Matrix& m) {
    Vector v = flatten(m);
    if (span.contains(v)) return false;
    span = subspace_sum(span, Subspace::span(f, n * n, {v}));
    basis.push_back(m);
    return true;
  };
  push(Matrix::identity(f, n));
  for (std::size_t head = 0; head < basis.size(); ++head)
    for (const auto& g : gens) push(basis[head] * g);

  // Radical = kernel of the trace form (characteristic 0).
  const std::size_t m = basis.size();
  Matrix gram(f, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) gram(i, j) = gram(j, i) = trace(basis[i] * basis[j]);
  Subspace kernel = nullspace(gram);
  std::vector<Vector> radical;
  for (const auto& c : kernel.basis()) {
    Matrix a(f, n, n);
    for (std::size_t i = 0; i < m; ++i)
      if (!c[i].is_zero()) a = a + c[i] * basis[i];
    radical.push_back(flatten(a));
  }
  Subspace j = Subspace::span(f, n * n, radical);

  // N = {x : R_x in J}; x -> R_x is linear, so take the kernel of x -> R_x mod J.
  Matrix map(f, n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector r = j.reduce(flatten(gens[k]));
    for (std::size_t i = 0; i < n * n; ++i) map(i, k) = r[i];
  }
  Subspace nil = nullspace(map);

  const Subspace l2 = product_space(l, l.whole(), l.whole());
  if (!is_ideal(l, nil) || !is_nilpotent_subalgebra(l, nil) || !nil.contains(l2))
    throw LeibnizError(fmt::format("nilradical postcondition failed for {}: candidate {} (ideal {}, nilpotent {}, "
                                   "contains L^2 {})",
                                   l.name(), nil.str(), is_ideal(l, nil), is_nilpotent_subalgebra(l, nil),
                                   nil.contains(l2)));
  return nil;
}

bool needs_imaginary(const LeibnizAlgebra& l) {
  if (l.field().kind() != FieldKind::GaussianRationals) return false;
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (l.coeff(i, j, k).imag() != 0) return true;
  return false;
}

}  // namespace

std::optional<LeibnizAlgebra> reduce_mod(const LeibnizAlgebra& l, std::uint64_t p) {
  if (l.field().is_prime_field()) throw Unsupported("reduce_mod expects a characteristic-0 algebra");
  const FieldDesc f = FieldDesc::prime(p);
  if (needs_imaginary(l) && !f.has_imaginary_unit()) return std::nullopt;
  const std::size_t n = l.dim();
  StructureTensor t(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = l.coeff(i, j, k);
        if (c.is_zero()) continue;
        auto r = reduce_scalar(c, f);
        if (!r) return std::nullopt;
        t.at(i, j, k) = *r;
      }
  return validate(std::move(t), l.name() + fmt::format(" mod {}", p));
}

std::optional<Subspace> reduce_subspace_mod(const Subspace& u, std::uint64_t p) {
  const FieldDesc f = FieldDesc::prime(p);
  std::vector<Vector> rows;
  for (const auto& v : u.basis()) {
    Vector r;
    for (const auto& c : v) {
      auto s = reduce_scalar(c, f);
      if (!s) return std::nullopt;
      r.push_back(*s);
    }
    rows.push_back(std::move(r));
  }
  Subspace out = Subspace::span(f, u.ambient_dim(), rows);
  if (out.dim() != u.dim()) return std::nullopt;
  return out;
}

Subspace nilradical(const LeibnizAlgebra& l) {
  if (!is_solvable(l)) throw Unsupported("nilradical: algebra is not solvable");
  if (is_nilpotent(l)) return l.whole();
  if (l.field().is_prime_field()) {
    if (!small_gfp(l)) throw Unsupported("nilradical over GF(p) is limited to small dimension");
    gfp::Algebra g(l);
    return g.to_subspace(gfp::nilradical(g));
  }
  return nilradical_char0(l);
}

CertifiedFlag is_supersolvable(const LeibnizAlgebra& l) {
  if (is_nilpotent(l)) return {true, Certification::Exact};
  if (!is_solvable(l)) return {false, Certification::Exact};
  if (l.field().is_prime_field()) {
    if (!small_gfp(l)) return {false, Certification::Unsupported};
    return {gfp::has_ideal_flag(gfp::Algebra(l)), Certification::Exact};
  }
  // Characteristic 0: every reduction at three good primes must carry a flag.
  bool all = true;
  std::size_t used = 0;
  for (std::uint64_t p = 5; used < 3 && p < 1000; ++p) {
    if (!is_prime(p)) continue;
    auto r = reduce_mod(l, p);
    if (!r) continue;
    ++used;
    all = all && gfp::has_ideal_flag(gfp::Algebra(*r));
  }
  return {all, used == 3 ? Certification::FiniteFieldOnly : Certification::Unsupported};
}

std::vector<Subspace> maximal_subalgebras(const LeibnizAlgebra& l) {
  if (!small_gfp(l)) throw Unsupported("maximal subalgebras are enumerated over GF(p) only");
  gfp::Algebra g(l);
  std::vector<Subspace> out;
  for (const auto& s : gfp::maximal_subalgebras(g)) out.push_back(g.to_subspace(s));
  return out;
}

Subspace frattini_ideal(const LeibnizAlgebra& l) {
  if (!small_gfp(l)) throw Unsupported("Frattini ideal is computed over GF(p) only");
  gfp::Algebra g(l);
  auto maxes = gfp::maximal_subalgebras(g);
  if (maxes.empty()) return l.zero_subspace();
  gfp::Space meet = maxes.front();
  for (const auto& m : maxes) meet = gfp::intersect(g.arith(), meet, m);
  return g.to_subspace(g.core(meet));
}

bool is_minimal_ideal(const LeibnizAlgebra& l, const Subspace& b, const Subspace& a) {
  if (!a.contains(b) || !is_ideal(l, a) || !is_ideal(l, b))
    throw LeibnizError("is_minimal_ideal: need ideals B inside A");
  const std::size_t d = a.dim() - b.dim();
  if (d == 0) return false;
  if (d == 1) return true;
  if (small_gfp(l)) {
    gfp::Algebra g(l);
    return gfp::is_minimal_over(g, g.from_subspace(a), g.from_subspace(b));
  }
  if (d > 2) throw Unsupported("is_minimal_ideal: dim(A/B) > 2 in characteristic 0");

  // A line of A/B is an ideal of L/B iff it is invariant under every
  // x -> [x,e_k] and x -> [e_k,x] acting on A/B.
  std::vector<Vector> reduced;
  for (const auto& v : a.basis()) reduced.push_back(b.reduce(v));
  const Subspace w = l.span(reduced);
  const FieldDesc& f = l.field();
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < l.dim(); ++k)
    for (int side = 0; side < 2; ++side) {
      Matrix m(f, 2, 2);
      for (std::size_t c = 0; c < 2; ++c) {
        const Vector& x = w.basis()[c];
        Vector img = side == 0 ? l.bracket(x, l.basis_vector(k)) : l.bracket(l.basis_vector(k), x);
        Vector coords = w.coordinates(b.reduce(img));
        m(0, c) = coords[0];
        m(1, c) = coords[1];
      }
      ops.push_back(m);
    }
  auto invariant = [&](const Vector& v) {
    for (const auto& m : ops) {
      Vector img = m.apply(v);
      // img parallel to v
      if (!(img[0] * v[1] - img[1] * v[0]).is_zero()) return false;
    }
    return true;
  };
  for (const auto& m : ops) {
    const bool scalar = m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1);
    if (scalar) continue;
    const Scalar tr = m(0, 0) + m(1, 1);
    const Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const Scalar disc = tr * tr - Scalar::from_int(f, 4) * det;
    auto root = field_sqrt(disc);
    if (!root) return true;
    for (const Scalar& s : {*root, -*root}) {
      const Scalar lambda = (tr + s) / Scalar::from_int(f, 2);
      Matrix shifted = m - lambda * Matrix::identity(f, 2);
      const Subspace eigen = nullspace(shifted);
      for (const auto& v : eigen.basis())
        if (invariant(v)) return false;
    }
    return true;
  }
  return false;  // every operator is scalar: all lines are ideals
}

std::optional<FiliformProfile> filiform_profile(const LeibnizAlgebra& l) {
  if (!is_nilpotent(l)) throw Unsupported("filiform_profile: algebra is not nilpotent");
  const std::size_t n = l.dim();
  auto series = lower_central_series(l);
  FiliformProfile prof;
  prof.series_dims = series_dims(series);
  auto dim_at = [&](std::size_t i) -> std::size_t {  // dim L^i, 1-based
    return i - 1 < prof.series_dims.size() ? prof.series_dims[i - 1] : 0;
  };
  if (n == 0) return std::nullopt;
  const std::size_t d2 = dim_at(2);
  prof.p = n - 1 - d2;
  if (d2 == 0) {
    prof.degenerate = true;
    prof.k = 1;
    return prof;
  }
  for (std::size_t i = 2; i <= n - prof.p + 1; ++i)
    if (dim_at(i) != n - prof.p - i + 1) return std::nullopt;
  for (std::size_t i = 1; i <= series.size(); ++i)
    if (is_abelian(l, series[i - 1])) {
      prof.k = i;
      break;
    }
  return prof;
}

std::vector<Vector> adapted_filiform_basis(const LeibnizAlgebra& l, std::uint64_t seed) {
  auto prof = filiform_profile(l);
  if (!prof) throw LeibnizError("adapted_filiform_basis: no filiform profile");
  if (prof->degenerate) throw LeibnizError("adapted_filiform_basis: L^2 = 0, no filiform chain");
  const std::size_t n = l.dim(), p = prof->p;
  const FieldDesc& f = l.field();
  const Subspace l2 = product_space(l, l.whole(), l.whole());
  const std::vector<std::size_t> comp = l2.non_pivots();  // p + 1 coordinates
  const std::size_t m = comp.size();

  auto make = [&](const std::vector<Scalar>& c) {
    Vector v = zero_vector(f, n);
    for (std::size_t j = 0; j < m; ++j) v[comp[j]] = c[j];
    return v;
  };
  // Builds the basis for the choice e_1 = x, e_(p+1) = y, or returns empty.
  auto attempt = [&](const Vector& x, const Vector& y) -> std::vector<Vector> {
    std::vector<Vector> e(n);
    e[0] = x;
    e[p] = y;
    for (std::size_t i = p + 1; i < n; ++i) e[i] = l.bracket(e[i - 1], x);
    if (leibniz::is_zero(e[n - 1])) return {};
    // Complete e_2..e_p from the coordinate complement of L^2.
    Subspace cur = subspace_sum(l2, l.span({x, y}));
    std::size_t slot = 1;
    for (std::size_t j = 0; j < m && slot < p; ++j) {
      Vector u = unit_vector(f, n, comp[j]);
      if (cur.contains(u)) continue;
      e[slot++] = u;
      cur = subspace_sum(cur, l.span({u}));
    }
    if (l.span(e).dim() != n) return {};
    return e;
  };

  std::vector<std::vector<Scalar>> coeffs;
  if (f.is_prime_field()) {
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < m; ++j) total *= f.p();
    if (total > 100000) total = 100000;
    for (std::uint64_t v = 1; v < total; ++v) {
      std::vector<Scalar> c(m, Scalar::zero(f));
      std::uint64_t r = v;
      for (std::size_t j = m; j-- > 0;) {
        c[j] = Scalar::residue(f, r % f.p());
        r /= f.p();
      }
      coeffs.push_back(std::move(c));
    }
  } else {
    const long order[] = {0, 1, -1, 2, -2};
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < m; ++j) total *= 5;
    for (std::uint64_t v = 1; v < total; ++v) {
      std::vector<Scalar> c(m, Scalar::zero(f));
      std::uint64_t r = v;
      for (std::size_t j = m; j-- > 0;) {
        c[j] = Scalar::from_int(f, order[r % 5]);
        r /= 5;
      }
      coeffs.push_back(std::move(c));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int k = 0; k < 200; ++k) {
      std::vector<Scalar> c(m, Scalar::zero(f));
      for (auto& s : c) s = Scalar::from_int(f, dist(rng));
      coeffs.push_back(std::move(c));
    }
  }

  std::vector<Vector> found;
  for (const auto& cx : coeffs) {
    const Vector x = make(cx);
    if (p == 0) {
      found = attempt(x, x);
    } else {
      for (const auto& cy : coeffs) {
        const Vector y = make(cy);
        if (l.span({x, y}).dim() < 2 || subspace_sum(l2, l.span({x, y})).dim() != l2.dim() + 2) continue;
        found = attempt(x, y);
        if (!found.empty()) break;
      }
    }
    if (!found.empty()) break;
  }
  if (found.empty()) throw LeibnizError("adapted_filiform_basis: search exhausted without an adapted basis");
  for (std::size_t i = p; i + 1 < n; ++i)
    if (l.bracket(found[i], found[0]) != found[i + 1])
      throw LeibnizError("adapted_filiform_basis: relation check failed");
  return found;
}

InvariantReport invariant_report(const LeibnizAlgebra& l, bool with_frattini) {
  InvariantReport r;
  r.solvable = {is_solvable(l), Certification::Exact};
  r.nilpotent = {is_nilpotent(l), Certification::Exact};
  r.supersolvable = is_supersolvable(l);
  if (r.solvable.value) {
    try {
      r.nilradical = nilradical(l);
    } catch (const Unsupported&) {
    }
  }
  if (with_frattini && small_gfp(l)) r.frattini = frattini_ideal(l);
  r.centre_dim = centre(l).dim();
  r.squares_dim = squares_ideal(l).dim();
  r.derived_dims = series_dims(derived_series(l));
  r.lower_dims = series_dims(lower_central_series(l));
  r.upper_dims = series_dims(upper_central_series(l));
  if (r.nilpotent.value) r.filiform = filiform_profile(l);
  return r;
}

}  // namespace leibniz
