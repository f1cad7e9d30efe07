#include "leibniz/algebra.hpp"

#include <fmt/format.h>

namespace leibniz {

StructureTensor::StructureTensor(const FieldDesc& f, std::size_t n)
    : field_(f), n_(n), c_(n * n * n, Scalar::zero(f)) {}

Vector StructureTensor::product(std::size_t i, std::size_t j) const {
  Vector v;
  v.reserve(n_);
  for (std::size_t k = 0; k < n_; ++k) v.push_back(at(i, j, k));
  return v;
}

void StructureTensor::set_product(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != n_) throw DimensionError("product vector has the wrong length");
  for (std::size_t k = 0; k < n_; ++k) at(i, j, k) = v[k];
}

Vector StructureTensor::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionError("bracket operands have the wrong length");
  Vector out = zero_vector(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& c = at(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

namespace {

std::string describe(const std::vector<Violation>& vs) {
  std::string msg = fmt::format("Leibniz identity fails on {} basis triple(s)", vs.size());
  for (std::size_t k = 0; k < vs.size() && k < 4; ++k)
    msg += fmt::format("; ({},{},{}): {} vs {}", vs[k].a + 1, vs[k].b + 1, vs[k].c + 1, format_vector(vs[k].lhs),
                       format_vector(vs[k].rhs));
  return msg;
}

}  // namespace

InvalidAlgebra::InvalidAlgebra(std::vector<Violation> violations)
    : LeibnizError(describe(violations)), violations_(std::move(violations)) {}

std::vector<Violation> leibniz_violations(const StructureTensor& t) {
  const std::size_t n = t.dim();
  std::vector<Violation> out;
  std::vector<Vector> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = t.product(i, j);
  for (std::size_t a = 0; a < n; ++a) {
    Vector ea = unit_vector(t.field(), n, a);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector ec = unit_vector(t.field(), n, c);
        Vector eb = unit_vector(t.field(), n, b);
        Vector lhs = t.bracket(ea, prod[b * n + c]);
        Vector rhs = sub(t.bracket(prod[a * n + b], ec), t.bracket(prod[a * n + c], eb));
        if (lhs != rhs) out.push_back(Violation{a, b, c, std::move(lhs), std::move(rhs)});
      }
  }
  return out;
}

LeibnizAlgebra validate(StructureTensor t, std::string name) {
  auto violations = leibniz_violations(t);
  if (!violations.empty()) throw InvalidAlgebra(std::move(violations));
  return LeibnizAlgebra(std::move(t), std::move(name));
}

LeibnizAlgebra abelian_algebra(const FieldDesc& f, std::size_t n) {
  return validate(StructureTensor(f, n), fmt::format("abelian({})", n));
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const { return t_.bracket(x, y); }

Matrix right_mult_matrix(const LeibnizAlgebra& l, const Vector& x) {
  const std::size_t n = l.dim();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(l.bracket(l.basis_vector(j), x));
  return Matrix::from_columns(l.field(), n, cols);
}

Matrix left_mult_matrix(const LeibnizAlgebra& l, const Vector& x) {
  const std::size_t n = l.dim();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(l.bracket(x, l.basis_vector(j)));
  return Matrix::from_columns(l.field(), n, cols);
}

Subspace product_space(const LeibnizAlgebra& l, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != l.dim() || v.ambient_dim() != l.dim()) throw DimensionError("subspace outside the algebra");
  std::vector<Vector> vs;
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) {
      Vector w = l.bracket(a, b);
      if (!is_zero(w)) vs.push_back(std::move(w));
    }
  return l.span(vs);
}

std::vector<Subspace> derived_series(const LeibnizAlgebra& l) {
  std::vector<Subspace> s{l.whole()};
  while (true) {
    Subspace next = product_space(l, s.back(), s.back());
    bool repeat = next == s.back();
    s.push_back(std::move(next));
    if (repeat || s.back().is_zero()) break;
  }
  return s;
}

std::vector<Subspace> lower_central_series(const LeibnizAlgebra& l) {
  std::vector<Subspace> s{l.whole()};
  const Subspace whole = l.whole();
  while (true) {
    Subspace next = product_space(l, s.back(), whole);
    bool repeat = next == s.back();
    s.push_back(std::move(next));
    if (repeat || s.back().is_zero()) break;
  }
  return s;
}

namespace {

// {x in U : [x, e_j] and [e_j, x] lie in W for all j}; both U and W arbitrary.
Subspace two_sided_preimage(const LeibnizAlgebra& l, const Subspace& u, const Subspace& w) {
  const std::size_t n = l.dim();
  const std::size_t d = u.dim();
  if (d == 0) return l.zero_subspace();
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < n; ++j) {
    Vector ej = l.basis_vector(j);
    for (int side = 0; side < 2; ++side) {
      std::vector<Vector> images;
      for (const auto& b : u.basis()) images.push_back(w.reduce(side == 0 ? l.bracket(b, ej) : l.bracket(ej, b)));
      for (std::size_t k = 0; k < n; ++k) {
        Vector row;
        row.reserve(d);
        bool nonzero = false;
        for (std::size_t t = 0; t < d; ++t) {
          row.push_back(images[t][k]);
          nonzero = nonzero || !images[t][k].is_zero();
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return u;
  Subspace kernel = nullspace(Matrix::from_rows(l.field(), d, rows));
  std::vector<Vector> vs;
  for (const auto& a : kernel.basis()) {
    Vector x = zero_vector(l.field(), n);
    for (std::size_t t = 0; t < d; ++t) axpy(x, a[t], u.basis()[t]);
    vs.push_back(std::move(x));
  }
  return l.span(vs);
}

// {k in K : [h, k] = 0 (and [k, h] = 0 when two_sided) for h in H}.
Subspace centraliser_impl(const LeibnizAlgebra& l, const Subspace& h, const Subspace& k, bool two_sided) {
  const std::size_t n = l.dim();
  const std::size_t d = k.dim();
  if (d == 0 || h.is_zero()) return k;
  std::vector<Vector> rows;
  auto add_rows = [&](const std::vector<Vector>& images) {
    for (std::size_t c = 0; c < n; ++c) {
      Vector row;
      bool nonzero = false;
      for (std::size_t t = 0; t < d; ++t) {
        row.push_back(images[t][c]);
        nonzero = nonzero || !images[t][c].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  };
  for (const auto& hv : h.basis()) {
    std::vector<Vector> left, right;
    for (const auto& kv : k.basis()) {
      left.push_back(l.bracket(hv, kv));
      if (two_sided) right.push_back(l.bracket(kv, hv));
    }
    add_rows(left);
    if (two_sided) add_rows(right);
  }
  if (rows.empty()) return k;
  Subspace kernel = nullspace(Matrix::from_rows(l.field(), d, rows));
  std::vector<Vector> vs;
  for (const auto& a : kernel.basis()) {
    Vector x = zero_vector(l.field(), n);
    for (std::size_t t = 0; t < d; ++t) axpy(x, a[t], k.basis()[t]);
    vs.push_back(std::move(x));
  }
  return l.span(vs);
}

}  // namespace

std::vector<Subspace> upper_central_series(const LeibnizAlgebra& l) {
  std::vector<Subspace> s{l.zero_subspace()};
  const Subspace whole = l.whole();
  while (true) {
    Subspace next = two_sided_preimage(l, whole, s.back());
    bool repeat = next == s.back();
    s.push_back(std::move(next));
    if (repeat || s.back().is_full()) break;
  }
  return s;
}

std::vector<std::size_t> series_dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> dims;
  for (const auto& s : series) dims.push_back(s.dim());
  return dims;
}

Subspace squares_ideal(const LeibnizAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(l.product(i, i));
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(add(l.product(i, j), l.product(j, i)));
  }
  return l.span(gens);
}

Vector Quotient::project(const Vector& x) const {
  Vector r = kernel.reduce(x);
  Vector out;
  out.reserve(complement.size());
  for (auto c : complement) out.push_back(r[c]);
  return out;
}

Subspace Quotient::project(const Subspace& u) const {
  std::vector<Vector> vs;
  for (const auto& b : u.basis()) vs.push_back(project(b));
  return algebra.span(vs);
}

Subspace Quotient::preimage(const Subspace& u) const {
  std::vector<Vector> vs = kernel.basis();
  for (const auto& b : u.basis()) {
    Vector x = zero_vector(kernel.field(), kernel.ambient_dim());
    for (std::size_t t = 0; t < complement.size(); ++t) x[complement[t]] = b[t];
    vs.push_back(std::move(x));
  }
  return Subspace::span(kernel.field(), kernel.ambient_dim(), vs);
}

Quotient quotient(const LeibnizAlgebra& l, const Subspace& j) {
  if (!is_ideal(l, j)) throw LeibnizError("quotient by a subspace that is not an ideal");
  auto comp = j.non_pivots();
  StructureTensor t(l.field(), comp.size());
  Quotient q{validate(StructureTensor(l.field(), 0)), comp, j};
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = 0; b < comp.size(); ++b) t.set_product(a, b, q.project(l.product(comp[a], comp[b])));
  q.algebra = validate(std::move(t), l.name().empty() ? std::string{} : l.name() + "/J");
  return q;
}

LeibnizAlgebra liesation(const LeibnizAlgebra& l) {
  LeibnizAlgebra lie = quotient(l, squares_ideal(l)).algebra;
  if (!is_lie(lie)) throw LeibnizError("liesation is not a Lie algebra");
  return lie;
}

bool is_lie(const LeibnizAlgebra& l) { return squares_ideal(l).is_zero(); }

Subspace centre(const LeibnizAlgebra& l) { return two_sided_centraliser(l, l.whole()); }

Subspace right_centraliser(const LeibnizAlgebra& l, const Subspace& h, const Subspace& k) {
  return centraliser_impl(l, h, k, false);
}

Subspace two_sided_centraliser(const LeibnizAlgebra& l, const Subspace& h) {
  return centraliser_impl(l, h, l.whole(), true);
}

Subspace two_sided_centraliser_in(const LeibnizAlgebra& l, const Subspace& h, const Subspace& k) {
  return centraliser_impl(l, h, k, true);
}

Subspace core_of(const LeibnizAlgebra& l, const Subspace& u) {
  Subspace cur = u;
  while (true) {
    Subspace next = two_sided_preimage(l, cur, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Subspace ideal_closure(const LeibnizAlgebra& l, const Subspace& u) {
  Subspace cur = u;
  while (true) {
    std::vector<Vector> vs = cur.basis();
    for (const auto& b : cur.basis())
      for (std::size_t j = 0; j < l.dim(); ++j) {
        Vector ej = l.basis_vector(j);
        vs.push_back(l.bracket(b, ej));
        vs.push_back(l.bracket(ej, b));
      }
    Subspace next = l.span(vs);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Subspace subalgebra_closure(const LeibnizAlgebra& l, const Subspace& u) {
  Subspace cur = u;
  while (true) {
    Subspace next = subspace_sum(cur, product_space(l, cur, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_subalgebra(const LeibnizAlgebra& l, const Subspace& u) {
  for (const auto& a : u.basis())
    for (const auto& b : u.basis())
      if (!u.contains(l.bracket(a, b))) return false;
  return true;
}

bool is_ideal(const LeibnizAlgebra& l, const Subspace& u) {
  for (const auto& a : u.basis())
    for (std::size_t j = 0; j < l.dim(); ++j) {
      Vector ej = l.basis_vector(j);
      if (!u.contains(l.bracket(a, ej)) || !u.contains(l.bracket(ej, a))) return false;
    }
  return true;
}

bool is_right_ideal(const LeibnizAlgebra& l, const Subspace& u) {
  for (const auto& a : u.basis())
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!u.contains(l.bracket(a, l.basis_vector(j)))) return false;
  return true;
}

bool is_abelian(const LeibnizAlgebra& l, const Subspace& u) {
  for (const auto& a : u.basis())
    for (const auto& b : u.basis())
      if (!is_zero(l.bracket(a, b))) return false;
  return true;
}

bool is_abelian(const LeibnizAlgebra& l) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!is_zero(l.product(i, j))) return false;
  return true;
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& l, const Matrix& p) {
  if (p.rows() != l.dim() || p.cols() != l.dim()) throw DimensionError("basis change of the wrong size");
  auto inv = inverse(p);
  if (!inv) throw LeibnizError("basis change matrix is singular");
  const std::size_t n = l.dim();
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < n; ++j) basis.push_back(p.column(j));
  StructureTensor t(l.field(), n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.set_product(a, b, inv->apply(l.bracket(basis[a], basis[b])));
  return validate(std::move(t), l.name());
}

Subspace transport_subspace(const Subspace& u, const Matrix& p) {
  auto inv = inverse(p);
  if (!inv) throw LeibnizError("basis change matrix is singular");
  return image(*inv, u);
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  if (!(a.field() == b.field())) throw FieldError("direct sum of algebras over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  StructureTensor t(a.field(), n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) t.at(i, j, k) = a.coeff(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) t.at(na + i, na + j, na + k) = b.coeff(i, j, k);
  std::string name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "+" + b.name();
  return validate(std::move(t), name);
}

LeibnizAlgebra restrict_to(const LeibnizAlgebra& l, const Subspace& s) {
  if (!is_subalgebra(l, s)) throw LeibnizError("restriction to a subspace that is not a subalgebra");
  const std::size_t d = s.dim();
  StructureTensor t(l.field(), d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) t.set_product(a, b, s.coordinates(l.bracket(s.basis()[a], s.basis()[b])));
  return validate(std::move(t));
}

ExtensionResult derivation_extension(const LeibnizAlgebra& m, const Matrix& d, const Matrix& left,
                                     const Vector& square) {
  const std::size_t n = m.dim();
  if (d.rows() != n || d.cols() != n || left.rows() != n || left.cols() != n || square.size() != n)
    throw DimensionError("extension data has the wrong size");
  StructureTensor t(m.field(), n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = m.coeff(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      t.at(i, n, k) = d(k, i);
      t.at(n, i, k) = left(k, i);
    }
  for (std::size_t k = 0; k < n; ++k) t.at(n, n, k) = square[k];
  ExtensionResult out;
  out.violations = leibniz_violations(t);
  if (out.violations.empty()) out.algebra = validate(std::move(t));
  return out;
}

std::vector<Matrix> derivation_basis(const LeibnizAlgebra& l) {
  const std::size_t n = l.dim();
  const FieldDesc& f = l.field();
  // Unknown D(r,c) at index r*n + c. For each (i,j,t):
  //   sum_k c_ijk D(t,k) - sum_r D(r,i) c_rjt - sum_r D(r,j) c_irt = 0.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) {
        Vector row = zero_vector(f, n * n);
        for (std::size_t k = 0; k < n; ++k) row[t * n + k] += l.coeff(i, j, k);
        for (std::size_t r = 0; r < n; ++r) {
          row[r * n + i] -= l.coeff(r, j, t);
          row[r * n + j] -= l.coeff(i, r, t);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  Subspace sol = rows.empty() ? Subspace::full(f, n * n) : nullspace(Matrix::from_rows(f, n * n, rows));
  std::vector<Matrix> out;
  for (const auto& v : sol.basis()) {
    Matrix d(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = v[r * n + c];
    out.push_back(std::move(d));
  }
  return out;
}

Subspace fitting_component(const LeibnizAlgebra& l, const Subspace& a) {
  Subspace cur = l.whole();
  while (true) {
    Subspace next = product_space(l, cur, a);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_nilpotent_subalgebra(const LeibnizAlgebra& l, const Subspace& s) {
  Subspace cur = s;
  while (!cur.is_zero()) {
    Subspace next = product_space(l, cur, s);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

}  // namespace leibniz
