#include "leibniz/gfp.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

#include "leibniz/error.hpp"

namespace leibniz::gfp {

Arith::Arith(std::uint32_t p) : p_(p) {
  if (p < 2) throw FieldError("modulus below 2");
  if (p <= (1u << 20)) {
    inv_.assign(p, 0);
    if (p > 1) inv_[1] = 1;
    for (std::uint32_t a = 2; a < p; ++a)
      inv_[a] = std::uint32_t((p - std::uint64_t(p / a) * inv_[p % a] % p) % p);
  }
}

std::uint32_t Arith::inv(std::uint32_t a) const {
  if (a == 0) throw FieldError("inverse of zero");
  if (!inv_.empty()) return inv_[a];
  return std::uint32_t(mod_inverse(a, p_));
}

std::size_t SpaceHash::operator()(const Space& s) const {
  std::size_t h = s.n * 0x9e3779b97f4a7c15ull;
  for (const auto& r : s.rows)
    for (std::size_t k = 0; k < s.n; ++k) h = (h ^ r[k]) * 0x100000001b3ull;
  return h;
}

Space zero_space(std::size_t n) {
  Space s;
  s.n = n;
  return s;
}

Space full_space(std::size_t n) {
  Space s = zero_space(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec v{};
    v[k] = 1;
    s.rows.push_back(v);
    s.pivots.push_back(k);
  }
  return s;
}

Vec reduce(const Arith& ar, const Space& s, Vec v) {
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    std::uint32_t c = v[s.pivots[r]];
    if (c == 0) continue;
    const Vec& row = s.rows[r];
    for (std::size_t k = s.pivots[r]; k < s.n; ++k)
      if (row[k]) v[k] = ar.sub(v[k], ar.mul(c, row[k]));
  }
  return v;
}

namespace {

bool vec_is_zero(const Vec& v, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (v[k]) return false;
  return true;
}

}  // namespace

bool contains(const Arith& ar, const Space& s, const Vec& v) { return vec_is_zero(reduce(ar, s, v), s.n); }

bool contains(const Arith& ar, const Space& big, const Space& small) {
  for (const auto& r : small.rows)
    if (!contains(ar, big, r)) return false;
  return true;
}

bool insert(const Arith& ar, Space& s, const Vec& v) {
  Vec w = reduce(ar, s, v);
  std::size_t lead = s.n;
  for (std::size_t k = 0; k < s.n; ++k)
    if (w[k]) {
      lead = k;
      break;
    }
  if (lead == s.n) return false;
  std::uint32_t inv = ar.inv(w[lead]);
  for (std::size_t k = lead; k < s.n; ++k) w[k] = ar.mul(w[k], inv);
  // Clear the new pivot column from the existing rows.
  for (auto& row : s.rows) {
    std::uint32_t c = row[lead];
    if (c == 0) continue;
    for (std::size_t k = lead; k < s.n; ++k)
      if (w[k]) row[k] = ar.sub(row[k], ar.mul(c, w[k]));
  }
  auto pos = std::lower_bound(s.pivots.begin(), s.pivots.end(), lead) - s.pivots.begin();
  s.pivots.insert(s.pivots.begin() + pos, lead);
  s.rows.insert(s.rows.begin() + pos, w);
  return true;
}

Space span(const Arith& ar, std::size_t n, const std::vector<Vec>& vs) {
  Space s = zero_space(n);
  for (const auto& v : vs) {
    insert(ar, s, v);
    if (s.dim() == n) break;
  }
  return s;
}

Space sum(const Arith& ar, const Space& a, const Space& b) {
  Space s = a;
  for (const auto& r : b.rows) insert(ar, s, r);
  return s;
}

Space solve_homogeneous(const Arith& ar, std::size_t n, const std::vector<Vec>& forms) {
  Space f = span(ar, n, forms);
  std::vector<bool> is_pivot(n, false);
  for (auto c : f.pivots) is_pivot[c] = true;
  Space out = zero_space(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v{};
    v[free] = 1;
    for (std::size_t r = 0; r < f.rows.size(); ++r) v[f.pivots[r]] = ar.neg(f.rows[r][free]);
    insert(ar, out, v);
  }
  return out;
}

Space intersect(const Arith& ar, const Space& a, const Space& b) {
  // x in a with x in b: b's annihilator applied to a's coordinates.
  const std::size_t n = a.n;
  Space ann_b = zero_space(n);
  {
    std::vector<Vec> forms(b.rows.begin(), b.rows.end());
    ann_b = solve_homogeneous(ar, n, forms);  // vectors orthogonal to b
  }
  // x = sum t_r a_r; conditions <x, w> = 0 for w in ann(b).
  std::vector<Vec> forms;
  for (const auto& w : ann_b.rows) {
    Vec f{};
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc = (acc + std::uint64_t(a.rows[r][k]) * w[k]) % ar.p();
      f[r] = std::uint32_t(acc);
    }
    forms.push_back(f);
  }
  Space coeffs = solve_homogeneous(ar, a.rows.size(), forms);
  Space out = zero_space(n);
  for (const auto& t : coeffs.rows) {
    Vec x{};
    for (std::size_t r = 0; r < a.rows.size(); ++r)
      if (t[r])
        for (std::size_t k = 0; k < n; ++k) x[k] = ar.add(x[k], ar.mul(t[r], a.rows[r][k]));
    insert(ar, out, x);
  }
  return out;
}

Space reduce_space(const Arith& ar, const Space& a, const Space& b) {
  Space out = zero_space(a.n);
  for (const auto& r : a.rows) insert(ar, out, reduce(ar, b, r));
  return out;
}

std::uint64_t gaussian_binomial(std::uint64_t p, std::size_t n, std::size_t d) {
  if (d > n) return 0;
  // Product over k < d of (p^(n-k) - 1) / (p^(k+1) - 1), done in 128-bit with saturation.
  unsigned __int128 num = 1, den = 1;
  const unsigned __int128 cap = (unsigned __int128)1 << 120;
  auto pw = [&](std::size_t e) {
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < e; ++i) {
      r *= p;
      if (r > cap) return cap;
    }
    return r;
  };
  for (std::size_t k = 0; k < d; ++k) {
    num *= pw(n - k) - 1;
    den *= pw(k + 1) - 1;
    unsigned __int128 g = 1;
    {
      unsigned __int128 x = num, y = den;
      while (y) {
        unsigned __int128 t = x % y;
        x = y;
        y = t;
      }
      g = x;
    }
    num /= g;
    den /= g;
    if (num > cap) return UINT64_MAX;
  }
  unsigned __int128 v = num / den;
  return v > UINT64_MAX ? UINT64_MAX : std::uint64_t(v);
}

std::uint64_t point_count(std::uint32_t p, std::size_t d) { return gaussian_binomial(p, d, 1); }

void enumerate_subspaces(std::uint32_t p, std::size_t n, std::size_t d, const std::function<bool(const Space&)>& visit,
                         std::uint64_t limit) {
  if (n > kMaxDim) throw DimensionError("ambient dimension above the kernel limit");
  if (d > n) return;
  std::uint64_t count = gaussian_binomial(p, n, d);
  if (count > limit)
    throw InfeasibleEnumeration(
        fmt::format("{} subspaces of dimension {} in GF({})^{} exceeds the limit {}", count, d, p, n, limit));
  std::vector<std::size_t> piv(d);
  for (std::size_t i = 0; i < d; ++i) piv[i] = i;
  Space s = zero_space(n);
  s.rows.assign(d, Vec{});
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    s.pivots = piv;
    for (std::size_t r = 0; r < d; ++r) {
      s.rows[r] = Vec{};
      s.rows[r][piv[r]] = 1;
    }
    while (true) {
      if (!visit(s)) return;
      // Increment the free entries as a base-p counter, last entry fastest.
      std::size_t k = free.size();
      while (k > 0) {
        auto [r, c] = free[k - 1];
        if (++s.rows[r][c] < p) break;
        s.rows[r][c] = 0;
        --k;
      }
      if (k == 0) break;
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = d;
    while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

void for_each_point(const Arith& ar, const Space& w, const std::function<bool(const Vec&)>& visit) {
  const std::size_t m = w.rows.size();
  const std::uint32_t p = ar.p();
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<std::uint32_t> t(m - r - 1, 0);
    while (true) {
      Vec v = w.rows[r];
      for (std::size_t s = 0; s < t.size(); ++s)
        if (t[s])
          for (std::size_t k = 0; k < w.n; ++k) v[k] = ar.add(v[k], ar.mul(t[s], w.rows[r + 1 + s][k]));
      if (!visit(v)) return;
      std::size_t k = t.size();
      while (k > 0) {
        if (++t[k - 1] < p) break;
        t[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
}

Algebra::Algebra(const LeibnizAlgebra& l)
    : field_(l.field()), n_(l.dim()), ar_(l.field().is_prime_field() ? std::uint32_t(l.field().p()) : 2) {
  if (!l.field().is_prime_field()) throw FieldError("finite-field kernel needs a prime field");
  if (n_ > kMaxDim) throw DimensionError(fmt::format("dimension {} above the kernel limit {}", n_, kMaxDim));
  prod_.assign(n_ * n_, Vec{});
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) prod_[i * n_ + j][k] = std::uint32_t(l.coeff(i, j, k).residue());
}

Vec Algebra::bracket(const Vec& x, const Vec& y) const {
  const std::uint32_t p = ar_.p();
  if (p < (1u << 16)) {
    std::array<std::uint64_t, kMaxDim> acc{};
    for (std::size_t i = 0; i < n_; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!y[j]) continue;
        std::uint64_t w = std::uint64_t(x[i]) * y[j];
        const Vec& c = prod_[i * n_ + j];
        for (std::size_t k = 0; k < n_; ++k) acc[k] += w * c[k];
      }
    }
    Vec out{};
    for (std::size_t k = 0; k < n_; ++k) out[k] = std::uint32_t(acc[k] % p);
    return out;
  }
  Vec out{};
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!y[j]) continue;
      std::uint32_t w = ar_.mul(x[i], y[j]);
      const Vec& c = prod_[i * n_ + j];
      for (std::size_t k = 0; k < n_; ++k)
        if (c[k]) out[k] = ar_.add(out[k], ar_.mul(w, c[k]));
    }
  }
  return out;
}

bool Algebra::bracket_is_zero(const Vec& x, const Vec& y) const { return vec_is_zero(bracket(x, y), n_); }

Vec Algebra::unit(std::size_t k) const {
  Vec v{};
  v[k] = 1;
  return v;
}

Space Algebra::from_subspace(const Subspace& s) const {
  std::vector<Vec> vs;
  for (const auto& b : s.basis()) vs.push_back(from_vector(b));
  return span(ar_, n_, vs);
}

Subspace Algebra::to_subspace(const Space& s) const {
  std::vector<Vector> vs;
  for (const auto& r : s.rows) vs.push_back(to_vector(r));
  return Subspace::span(field_, n_, vs);
}

Vec Algebra::from_vector(const Vector& v) const {
  if (v.size() != n_) throw DimensionError("vector length does not match the algebra");
  Vec out{};
  for (std::size_t k = 0; k < n_; ++k) out[k] = std::uint32_t(v[k].residue());
  return out;
}

Vector Algebra::to_vector(const Vec& v) const {
  Vector out;
  for (std::size_t k = 0; k < n_; ++k) out.push_back(Scalar::residue(field_, v[k]));
  return out;
}

bool Algebra::is_abelian(const Space& s) const {
  for (const auto& a : s.rows)
    for (const auto& b : s.rows)
      if (!bracket_is_zero(a, b)) return false;
  return true;
}

bool Algebra::is_subalgebra(const Space& s) const {
  for (const auto& a : s.rows)
    for (const auto& b : s.rows)
      if (!contains(ar_, s, bracket(a, b))) return false;
  return true;
}

bool Algebra::is_ideal(const Space& s) const {
  for (const auto& a : s.rows)
    for (std::size_t j = 0; j < n_; ++j) {
      Vec e = unit(j);
      if (!contains(ar_, s, bracket(a, e)) || !contains(ar_, s, bracket(e, a))) return false;
    }
  return true;
}

bool Algebra::extends_to_ideal(const Space& s, const Vec& v) const {
  Space t = s;
  insert(ar_, t, v);
  for (std::size_t j = 0; j < n_; ++j) {
    Vec e = unit(j);
    if (!contains(ar_, t, bracket(v, e)) || !contains(ar_, t, bracket(e, v))) return false;
  }
  return true;
}

Space Algebra::ideal_closure(Space s) const {
  // Work list of vectors whose brackets with the basis still need adding.
  std::vector<Vec> pending(s.rows.begin(), s.rows.end());
  while (!pending.empty()) {
    Vec a = pending.back();
    pending.pop_back();
    for (std::size_t j = 0; j < n_ && s.dim() < n_; ++j) {
      Vec e = unit(j);
      Vec x = bracket(a, e);
      if (insert(ar_, s, x)) pending.push_back(x);
      Vec y = bracket(e, a);
      if (insert(ar_, s, y)) pending.push_back(y);
    }
    if (s.dim() == n_) break;
  }
  return s;
}

Space Algebra::subalgebra_closure(Space s) const {
  while (true) {
    std::size_t before = s.dim();
    std::vector<Vec> rows = s.rows;
    for (const auto& a : rows)
      for (const auto& b : rows) insert(ar_, s, bracket(a, b));
    if (s.dim() == before) return s;
  }
}

Space Algebra::centraliser(const Space& s, const std::vector<std::size_t>& zero_cols) const {
  std::vector<Vec> forms;
  for (const auto& a : s.rows) {
    std::array<Vec, kMaxDim> left{}, right{};
    for (std::size_t i = 0; i < n_; ++i) {
      left[i] = bracket(unit(i), a);
      right[i] = bracket(a, unit(i));
    }
    for (std::size_t k = 0; k < n_; ++k) {
      Vec f{}, g{};
      for (std::size_t i = 0; i < n_; ++i) {
        f[i] = left[i][k];
        g[i] = right[i][k];
      }
      forms.push_back(f);
      forms.push_back(g);
    }
  }
  for (auto c : zero_cols) forms.push_back(unit(c));
  return solve_homogeneous(ar_, n_, forms);
}

Space Algebra::product_space(const Space& a, const Space& b) const {
  Space s = zero();
  for (const auto& x : a.rows)
    for (const auto& y : b.rows) insert(ar_, s, bracket(x, y));
  return s;
}

bool Algebra::is_nilpotent(const Space& s) const {
  Space cur = s;
  while (cur.dim() > 0) {
    Space next = product_space(cur, s);
    if (next.dim() == cur.dim()) return false;
    cur = std::move(next);
  }
  return true;
}

Space Algebra::core(const Space& s) const {
  Space cur = s;
  while (true) {
    const std::size_t d = cur.dim();
    if (d == 0) return cur;
    std::vector<Vec> forms;
    for (std::size_t j = 0; j < n_; ++j) {
      Vec e = unit(j);
      for (int side = 0; side < 2; ++side) {
        std::array<Vec, kMaxDim> img{};
        for (std::size_t t = 0; t < d; ++t)
          img[t] = reduce(ar_, cur, side == 0 ? bracket(cur.rows[t], e) : bracket(e, cur.rows[t]));
        for (std::size_t k = 0; k < n_; ++k) {
          Vec f{};
          bool nz = false;
          for (std::size_t t = 0; t < d; ++t) {
            f[t] = img[t][k];
            nz = nz || f[t];
          }
          if (nz) forms.push_back(f);
        }
      }
    }
    if (forms.empty()) return cur;
    Space coeffs = solve_homogeneous(ar_, d, forms);
    Space next = zero();
    for (const auto& t : coeffs.rows) {
      Vec x{};
      for (std::size_t r = 0; r < d; ++r)
        if (t[r])
          for (std::size_t k = 0; k < n_; ++k) x[k] = ar_.add(x[k], ar_.mul(t[r], cur.rows[r][k]));
      insert(ar_, next, x);
    }
    if (next.dim() == d) return cur;
    cur = std::move(next);
  }
}

std::vector<Space> all_ideals(const Algebra& l, std::uint64_t limit) {
  const Arith& ar = l.arith();
  std::unordered_set<Space, SpaceHash> seen;
  std::vector<Space> order;
  std::vector<Space> stack{l.zero()};
  seen.insert(l.zero());
  std::uint64_t work = 0;
  while (!stack.empty()) {
    Space i = std::move(stack.back());
    stack.pop_back();
    order.push_back(i);
    Space comp = reduce_space(ar, l.full(), i);
    work += point_count(l.p(), comp.dim());
    if (work > limit) throw InfeasibleEnumeration(fmt::format("ideal search exceeded {} closure steps", limit));
    for_each_point(ar, comp, [&](const Vec& v) {
      Space j = i;
      insert(ar, j, v);
      j = l.ideal_closure(std::move(j));
      if (seen.insert(j).second) stack.push_back(std::move(j));
      return true;
    });
  }
  std::sort(order.begin(), order.end(), [](const Space& a, const Space& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return std::lexicographical_compare(a.rows.begin(), a.rows.end(), b.rows.begin(), b.rows.end());
  });
  return order;
}

Space nilradical(const Algebra& l) {
  const Arith& ar = l.arith();
  Space n = l.product_space(l.full(), l.full());
  if (!l.is_nilpotent(n)) n = l.zero();
  bool grew = true;
  while (grew) {
    grew = false;
    Space comp = reduce_space(ar, l.full(), n);
    for_each_point(ar, comp, [&](const Vec& v) {
      Space j = n;
      insert(ar, j, v);
      j = l.ideal_closure(std::move(j));
      if (l.is_nilpotent(j)) {
        n = std::move(j);
        grew = true;
        return false;
      }
      return true;
    });
  }
  return n;
}

std::vector<Space> maximal_subalgebras(const Algebra& l, std::uint64_t limit) {
  const std::size_t n = l.dim();
  std::vector<Space> out;
  if (n == 0) return out;
  std::uint64_t total = 0;
  for (std::size_t d = 0; d < n; ++d) total += gaussian_binomial(l.p(), n, d);
  if (total > limit)
    throw InfeasibleEnumeration(fmt::format("maximal subalgebra scan needs {} subspaces (limit {})", total, limit));
  for (std::size_t d = n; d-- > 0;) {
    std::vector<Space> found;
    enumerate_subspaces(
        l.p(), n, d,
        [&](const Space& s) {
          if (!l.is_subalgebra(s)) return true;
          for (const auto& m : out)
            if (contains(l.arith(), m, s)) return true;
          found.push_back(s);
          return true;
        },
        limit);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

namespace {

bool flag_from(const Algebra& l, const Space& i, std::unordered_set<Space, SpaceHash>& dead) {
  if (i.dim() == l.dim()) return true;
  if (dead.count(i)) return false;
  bool ok = false;
  Space comp = reduce_space(l.arith(), l.full(), i);
  for_each_point(l.arith(), comp, [&](const Vec& v) {
    if (!l.extends_to_ideal(i, v)) return true;
    Space j = i;
    insert(l.arith(), j, v);
    if (flag_from(l, j, dead)) ok = true;
    return !ok;
  });
  if (!ok) dead.insert(i);
  return ok;
}

}  // namespace

bool has_ideal_flag(const Algebra& l) {
  std::unordered_set<Space, SpaceHash> dead;
  return flag_from(l, l.zero(), dead);
}

bool is_minimal_over(const Algebra& l, const Space& a, const Space& b) {
  Space comp = reduce_space(l.arith(), a, b);
  if (comp.dim() == 0) return false;
  bool minimal = true;
  for_each_point(l.arith(), comp, [&](const Vec& v) {
    Space j = b;
    insert(l.arith(), j, v);
    j = l.ideal_closure(std::move(j));
    if (j.dim() != a.dim()) minimal = false;
    return minimal;
  });
  return minimal;
}

namespace {

struct AlphaSearch {
  const Algebra& l;
  AbelianSearchResult res;

  void visit(const Space& a, std::size_t q) {
    ++res.nodes;
    if (a.dim() > res.dim) {
      res.dim = a.dim();
      res.witness = a;
    }
    if (res.dim == l.dim()) return;
    Space w = l.centraliser(a, a.pivots);
    const Arith& ar = l.arith();
    // Rows of w with pivot below q, tried from the largest pivot down.
    std::size_t r_end = 0;
    while (r_end < w.rows.size() && w.pivots[r_end] < q) ++r_end;
    for (std::size_t r = r_end; r-- > 0;) {
      if (a.dim() + 1 + r <= res.dim) break;
      const std::size_t c = w.pivots[r];
      std::vector<std::uint32_t> t(w.rows.size() - r - 1, 0);
      while (true) {
        if (a.dim() + 1 + r <= res.dim) break;
        Vec v = w.rows[r];
        for (std::size_t s = 0; s < t.size(); ++s)
          if (t[s])
            for (std::size_t k = c; k < l.dim(); ++k) v[k] = ar.add(v[k], ar.mul(t[s], w.rows[r + 1 + s][k]));
        if (l.bracket_is_zero(v, v)) {
          Space child = a;
          child.rows.insert(child.rows.begin(), v);
          child.pivots.insert(child.pivots.begin(), c);
          visit(child, c);
        }
        std::size_t k = t.size();
        while (k > 0) {
          if (++t[k - 1] < l.p()) break;
          t[k - 1] = 0;
          --k;
        }
        if (k == 0) break;
      }
    }
  }
};

}  // namespace

AbelianSearchResult max_abelian_subalgebra(const Algebra& l, const Space& seed) {
  if (!l.is_abelian(seed)) throw LeibnizError("seed of the abelian search is not abelian");
  AlphaSearch s{l, {}};
  s.res.dim = seed.dim();
  s.res.witness = seed;
  s.visit(l.zero(), l.dim());
  return s.res;
}

namespace {

/// {v in c : [v,x] and [x,v] lie in i for every x in n}.
Space annihilated_mod(const Algebra& l, const Space& c, const Space& i, const Space& n) {
  const Arith& ar = l.arith();
  const std::size_t m = c.dim();
  std::vector<Vec> forms;
  for (const auto& x : n.rows)
    for (int side = 0; side < 2; ++side) {
      std::array<Vec, kMaxDim> w{};
      for (std::size_t r = 0; r < m; ++r)
        w[r] = reduce(ar, i, side == 0 ? l.bracket(c.rows[r], x) : l.bracket(x, c.rows[r]));
      for (std::size_t col = 0; col < l.dim(); ++col) {
        Vec f{};
        bool nonzero = false;
        for (std::size_t r = 0; r < m; ++r) {
          f[r] = w[r][col];
          nonzero = nonzero || f[r] != 0;
        }
        if (nonzero) forms.push_back(f);
      }
    }
  const Space t = solve_homogeneous(ar, m, forms);
  std::vector<Vec> out;
  for (const auto& coeffs : t.rows) {
    Vec v{};
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t k = 0; k < l.dim(); ++k) v[k] = ar.add(v[k], ar.mul(coeffs[r], c.rows[r][k]));
    out.push_back(v);
  }
  return span(ar, l.dim(), out);
}

}  // namespace

AbelianSearchResult max_abelian_ideal(const Algebra& l, const Space& bound) {
  const Arith& ar = l.arith();
  AbelianSearchResult res;
  res.witness = l.zero();
  res.dim = 0;
  res.maximisers = 1;
  auto record = [&](const Space& j) {
    if (j.dim() > res.dim) {
      res.dim = j.dim();
      res.witness = j;
      res.maximisers = 1;
    } else if (j.dim() == res.dim && !(j == res.witness) && res.maximisers < 2) {
      res.maximisers = 2;
    }
  };
  std::unordered_set<Space, SpaceHash> seen;
  std::vector<Space> stack{l.zero()};
  seen.insert(l.zero());
  // Candidates equal to the full bound of some node, checked once each.
  std::unordered_set<Space, SpaceHash> capped;
  while (!stack.empty()) {
    Space i = std::move(stack.back());
    stack.pop_back();
    ++res.nodes;
    record(i);
    Space c = intersect(ar, l.centraliser(i), bound);
    const std::size_t ub = c.dim();
    if (ub == i.dim() || ub < res.dim) continue;
    if (ub == res.dim) {
      // Only c itself could tie; it lies in every abelian ideal above i of that size.
      if (capped.insert(c).second && l.is_ideal(c) && l.is_abelian(c)) record(c);
      continue;
    }
    // Every abelian ideal above i contains a vector outside i that the
    // nilpotent bound multiplies into i, so only those generators are tried.
    Space comp = reduce_space(ar, annihilated_mod(l, c, i, bound), i);
    for_each_point(ar, comp, [&](const Vec& v) {
      Space j = i;
      insert(ar, j, v);
      j = l.ideal_closure(std::move(j));
      if (j.dim() <= ub && l.is_abelian(j) && seen.insert(j).second) stack.push_back(std::move(j));
      return true;
    });
  }
  return res;
}

AbelianSearchResult naive_max_abelian(const Algebra& l, bool ideals_only) {
  AbelianSearchResult res;
  for (std::size_t d = l.dim() + 1; d-- > 0;) {
    std::size_t found = 0;
    enumerate_subspaces(l.p(), l.dim(), d, [&](const Space& s) {
      ++res.nodes;
      if (!l.is_abelian(s)) return true;
      if (ideals_only && !l.is_ideal(s)) return true;
      if (found == 0) res.witness = s;
      ++found;
      return ideals_only;
    });
    if (found > 0) {
      res.dim = d;
      res.maximisers = std::min<std::size_t>(found, 2);
      return res;
    }
  }
  return res;
}

}  // namespace leibniz::gfp
