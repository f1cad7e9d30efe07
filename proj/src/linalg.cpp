#include "leibniz/linalg.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace leibniz {

Vector zero_vector(const FieldDesc& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const FieldDesc& f, std::size_t n, std::size_t k) {
  Vector v = zero_vector(f, n);
  v.at(k) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& y, const Scalar& s, const Vector& x) {
  if (y.size() != x.size()) throw DimensionError("vector length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

Matrix::Matrix(const FieldDesc& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldDesc& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldDesc& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const FieldDesc& f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar::from_int(b.field(), -1) * b; }

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) out += format_vector(row(r)) + "\n";
  return out;
}

namespace {

// In-place RREF over a list of rows; returns pivot columns, drops zero rows.
std::vector<std::size_t> rref_rows(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t sel = lead;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    Scalar inv = rows[lead][c].inverse();
    if (!inv.is_one())
      for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c].is_zero()) continue;
      Scalar factor = -rows[r][c];
      axpy(rows[r], factor, rows[lead]);
    }
    pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

}  // namespace

Rref rref(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  auto pivots = rref_rows(rows, m.cols());
  return Rref{Matrix::from_rows(m.field(), m.cols(), rows), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = m.row(r);
    Vector id = unit_vector(m.field(), n, r);
    row.insert(row.end(), id.begin(), id.end());
    rows.push_back(std::move(row));
  }
  auto pivots = rref_rows(rows, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

std::vector<Scalar> charpoly(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  const FieldDesc& f = m.field();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    Scalar inv = h(j + 1, j).inverse();
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      Scalar u = h(i, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(i, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, i);
    }
  }
  // p[k] = charpoly of the leading k x k block.
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar::one(f)};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t m_idx = k - 1;
    std::vector<Scalar> next(k + 1, Scalar::zero(f));
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= h(m_idx, m_idx) * p[k - 1][d];
    }
    Scalar prod = Scalar::one(f);
    for (std::size_t i = m_idx; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      Scalar coef = h(i, m_idx) * prod;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coef * p[i][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

Matrix evaluate_polynomial(const std::vector<Scalar>& coeffs, const Matrix& m) {
  Matrix acc(m.field(), m.rows(), m.cols());
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * m + coeffs[k] * Matrix::identity(m.field(), m.rows());
  return acc;
}

bool is_nilpotent_matrix(const Matrix& m) {
  auto cp = charpoly(m);
  for (std::size_t k = 0; k + 1 < cp.size(); ++k)
    if (!cp[k].is_zero()) return false;
  return true;
}

Subspace Subspace::zero(const FieldDesc& f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(const FieldDesc& f, std::size_t ambient) {
  Subspace s = zero(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vector(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const FieldDesc& f, std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s = zero(f, ambient);
  s.rows_.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient)
      throw DimensionError(fmt::format("vector of length {} in ambient dimension {}", v.size(), ambient));
    if (!leibniz::is_zero(v)) s.rows_.push_back(v);
  }
  s.pivots_ = rref_rows(s.rows_, ambient);
  return s;
}

Subspace Subspace::coordinate(const FieldDesc& f, std::size_t ambient, const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) vs.push_back(unit_vector(f, ambient, i));
  return span(f, ambient, vs);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(field_, ambient_, rows_); }

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector outside the ambient space");
  Vector r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = r[pivots_[k]];
    if (!c.is_zero()) axpy(r, -c, rows_[k]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return leibniz::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient mismatch");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c;
  c.reserve(rows_.size());
  for (auto p : pivots_) c.push_back(v.at(p));
  return c;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
}

std::size_t Subspace::hash() const {
  std::size_t h = std::hash<std::size_t>{}(ambient_);
  for (const auto& row : rows_)
    for (const auto& x : row) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Subspace::str() const {
  if (rows_.empty()) return "{0}";
  std::string out = "span{";
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k) out += ", ";
    out += format_vector(rows_[k]);
  }
  return out + "}";
}

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  if (!(u.field() == v.field())) throw FieldError("subspaces over different fields");
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  std::vector<Vector> vs = u.basis();
  vs.insert(vs.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.field(), u.ambient_dim(), vs);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  const FieldDesc& f = u.field();
  const std::size_t n = u.ambient_dim(), du = u.dim(), dv = v.dim();
  if (du == 0 || dv == 0) return Subspace::zero(f, n);
  // Solve sum a_i u_i - sum b_j v_j = 0; the intersection is {sum a_i u_i}.
  Matrix system(f, n, du + dv);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t r = 0; r < n; ++r) system(r, i) = u.basis()[i][r];
  for (std::size_t j = 0; j < dv; ++j)
    for (std::size_t r = 0; r < n; ++r) system(r, du + j) = -v.basis()[j][r];
  Subspace kernel = nullspace(system);
  std::vector<Vector> vs;
  for (const auto& k : kernel.basis()) {
    Vector w = zero_vector(f, n);
    for (std::size_t i = 0; i < du; ++i) axpy(w, k[i], u.basis()[i]);
    vs.push_back(std::move(w));
  }
  return Subspace::span(f, n, vs);
}

Subspace nullspace(const Matrix& m) {
  const FieldDesc& f = m.field();
  const std::size_t cols = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> vs;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x = unit_vector(f, cols, free);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = -r.reduced(k, free);
    vs.push_back(std::move(x));
  }
  return Subspace::span(f, cols, vs);
}

Subspace image(const Matrix& m, const Subspace& u) {
  std::vector<Vector> vs;
  for (const auto& b : u.basis()) vs.push_back(m.apply(b));
  return Subspace::span(m.field(), m.rows(), vs);
}

}  // namespace leibniz
