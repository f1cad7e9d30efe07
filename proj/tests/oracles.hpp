#pragma once

// Test-side reference computations. Everything here is deliberately naive and
// built only on the core predicates, so it shares no search code with the
// library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "leibniz/algebra.hpp"

namespace oracle {

using namespace leibniz;

/// Every right Leibniz structure tensor of dimension n over GF(p), by
/// backtracking over the n^2 basis products. Triples are checked as soon as
/// every product they read has been assigned.
inline std::size_t for_each_leibniz_tensor(std::size_t n, std::uint32_t p,
                                           const std::function<void(const StructureTensor&)>& visit) {
  std::vector<int> c(n * n * n, 0);
  std::vector<char> assigned(n * n, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; };
  auto triple_ok = [&](std::size_t a, std::size_t b, std::size_t cc) {
    auto ok = [&](std::size_t i, std::size_t j) { return assigned[i * n + j] != 0; };
    if (!ok(b, cc) || !ok(a, b) || !ok(a, cc)) return true;
    for (std::size_t k = 0; k < n; ++k) {
      if (at(b, cc, k) && !ok(a, k)) return true;
      if (at(a, b, k) && !ok(k, cc)) return true;
      if (at(a, cc, k) && !ok(k, b)) return true;
    }
    for (std::size_t t = 0; t < n; ++t) {
      long long lhs = 0, rhs = 0;
      for (std::size_t k = 0; k < n; ++k) {
        lhs += (long long)at(b, cc, k) * at(a, k, t);
        rhs += (long long)at(a, b, k) * at(k, cc, t) - (long long)at(a, cc, k) * at(k, b, t);
      }
      if (((lhs - rhs) % (long long)p + p) % p != 0) return false;
    }
    return true;
  };
  // Products grouped by their largest index so triples close early.
  std::vector<std::size_t> order(n * n);
  for (std::size_t x = 0; x < n * n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [n](std::size_t x, std::size_t y) {
    std::size_t xi = x / n, xj = x % n, yi = y / n, yj = y % n;
    auto key = [](std::size_t i, std::size_t j) {
      return std::tuple(std::max(i, j), std::min(i, j), i < j ? 1 : 0);
    };
    return key(xi, xj) < key(yi, yj);
  });
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= p;
  const FieldDesc f = FieldDesc::prime(p);
  std::size_t found = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n * n) {
      StructureTensor t(f, n);
      for (std::size_t i = 0; i < n * n * n; ++i)
        t.at(i / (n * n), (i / n) % n, i % n) = Scalar::residue(f, std::uint64_t(c[i]));
      ++found;
      visit(t);
      return;
    }
    const std::size_t idx = order[pos];
    for (std::size_t v = 0; v < total; ++v) {
      std::size_t x = v;
      for (std::size_t k = 0; k < n; ++k) {
        c[idx * n + k] = int(x % p);
        x /= p;
      }
      assigned[idx] = 1;
      bool ok = true;
      const std::size_t i0 = idx / n, j0 = idx % n;
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = 0; b < n && ok; ++b)
          for (std::size_t cc = 0; cc < n && ok; ++cc) {
            bool touches = b * n + cc == idx || a * n + b == idx || a * n + cc == idx || a == i0 || cc == j0 || b == j0;
            if (touches) ok = triple_ok(a, b, cc);
          }
      if (ok) rec(pos + 1);
      assigned[idx] = 0;
    }
    for (std::size_t k = 0; k < n; ++k) c[idx * n + k] = 0;
  };
  rec(0);
  return found;
}

/// All vectors of GF(p)^n.
inline std::vector<Vector> all_vectors(const FieldDesc& f, std::size_t n) {
  std::vector<Vector> out;
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= f.p();
  for (std::size_t v = 0; v < total; ++v) {
    Vector x;
    std::size_t r = v;
    for (std::size_t k = 0; k < n; ++k) {
      x.push_back(Scalar::residue(f, r % f.p()));
      r /= f.p();
    }
    out.push_back(std::move(x));
  }
  return out;
}

/// Every subspace of GF(p)^n, grown from {0} by adding single vectors.
inline std::vector<Subspace> all_subspaces(const FieldDesc& f, std::size_t n) {
  auto vectors = all_vectors(f, n);
  std::unordered_set<Subspace> seen{Subspace::zero(f, n)};
  std::vector<Subspace> frontier{Subspace::zero(f, n)}, out;
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier) {
      out.push_back(s);
      for (const auto& v : vectors) {
        if (s.contains(v)) continue;
        auto vs = s.basis();
        vs.push_back(v);
        auto t = Subspace::span(f, n, vs);
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

struct MaxResult {
  std::size_t dim = 0;
  std::size_t count = 0;  // number of maximisers
};

inline MaxResult max_abelian(const LeibnizAlgebra& l, const std::vector<Subspace>& subspaces, bool ideals_only) {
  MaxResult r;
  for (const auto& s : subspaces) {
    if (!is_abelian(l, s) || (ideals_only && !is_ideal(l, s))) continue;
    if (s.dim() > r.dim) {
      r.dim = s.dim();
      r.count = 1;
    } else if (s.dim() == r.dim) {
      ++r.count;
    }
  }
  return r;
}

inline std::vector<Subspace> ideals(const LeibnizAlgebra& l, const std::vector<Subspace>& subspaces) {
  std::vector<Subspace> out;
  for (const auto& s : subspaces)
    if (is_ideal(l, s)) out.push_back(s);
  return out;
}

/// Largest ideal inside u: the maximum-dimensional enumerated ideal contained in u.
inline Subspace core(const LeibnizAlgebra& l, const std::vector<Subspace>& ideal_list, const Subspace& u) {
  Subspace best = l.zero_subspace();
  for (const auto& i : ideal_list)
    if (u.contains(i) && i.dim() > best.dim()) best = i;
  return best;
}

/// Largest nilpotent ideal: the maximum-dimensional enumerated nilpotent ideal.
inline Subspace nilradical(const LeibnizAlgebra& l, const std::vector<Subspace>& ideal_list) {
  Subspace best = l.zero_subspace();
  for (const auto& i : ideal_list)
    if (is_nilpotent_subalgebra(l, i) && i.dim() >= best.dim()) best = i;
  return best;
}

}  // namespace oracle
