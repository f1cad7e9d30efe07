#include "leibniz/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "leibniz/gfp.hpp"
#include "leibniz/invariants.hpp"

namespace leibniz {

std::string to_string(SearchCertification c) {
  switch (c) {
    case SearchCertification::Exact:
      return "exact";
    case SearchCertification::MultiPrime:
      return "multi-prime";
    case SearchCertification::LowerBoundOnly:
      return "lower-bound-only";
  }
  return "?";
}

namespace {

void require_gfp(const LeibnizAlgebra& l) {
  if (!l.field().is_prime_field()) throw Unsupported("exact alpha/beta search needs a prime field");
  if (l.dim() > gfp::kMaxDim) throw Unsupported("exact alpha/beta search is limited to dimension 8");
}

bool is_abelian_subalgebra(const LeibnizAlgebra& l, const Subspace& s) { return is_abelian(l, s); }
bool is_abelian_ideal(const LeibnizAlgebra& l, const Subspace& s) { return is_abelian(l, s) && is_ideal(l, s); }

/// Vectors worth trying as extensions inside w: its basis, pairwise sums and
/// differences, and a few random small combinations.
std::vector<Vector> probe_vectors(const Subspace& w, std::mt19937_64& rng) {
  const auto& b = w.basis();
  const FieldDesc& f = w.field();
  std::vector<Vector> out(b.begin(), b.end());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      out.push_back(add(b[i], b[j]));
      out.push_back(sub(b[i], b[j]));
    }
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int r = 0; r < 8 && !b.empty(); ++r) {
    Vector v = zero_vector(f, w.ambient_dim());
    for (const auto& x : b) axpy(v, Scalar::from_int(f, coef(rng)), x);
    out.push_back(std::move(v));
  }
  return out;
}

/// Greedy growth of an abelian subalgebra (or abelian ideal inside `bound`).
Subspace extend(const LeibnizAlgebra& l, Subspace a, bool ideals_only, const Subspace& bound, std::mt19937_64& rng) {
  bool grew = true;
  while (grew) {
    grew = false;
    Subspace c = two_sided_centraliser(l, a);
    if (ideals_only) c = subspace_intersect(c, bound);
    if (c.dim() == a.dim()) break;
    for (const auto& x : probe_vectors(c, rng)) {
      if (a.contains(x)) continue;
      auto vs = a.basis();
      vs.push_back(x);
      Subspace next = l.span(vs);
      if (ideals_only) next = ideal_closure(l, next);
      if (!is_abelian(l, next) || (ideals_only && !bound.contains(next))) continue;
      a = std::move(next);
      grew = true;
      break;
    }
  }
  return a;
}

/// Lift of a residue to a small characteristic-0 value. Variant 0: the
/// Gaussian integer a + b i of least |a| + |b| (b = 0 over Q); variant 1: the
/// symmetric integer; variant 2: a reconstructed fraction s/d with small s, d.
Scalar lift_residue(std::uint64_t r, std::uint64_t p, const FieldDesc& target, int variant) {
  const long pl = long(p);
  const long sym = r <= p / 2 ? long(r) : long(r) - pl;
  if (variant == 0 && target.kind() == FieldKind::GaussianRationals) {
    const long root = long(imaginary_unit(FieldDesc::prime(p)).residue());
    long best_a = sym, best_b = 0;
    for (long b = -2; b <= 2; ++b)
      for (long a = -2; a <= 2; ++a)
        if (((a + b * root) % pl + pl) % pl == long(r) && std::labs(a) + std::labs(b) < std::labs(best_a) + std::labs(best_b)) {
          best_a = a;
          best_b = b;
        }
    return Scalar::gaussian(best_a, best_b);
  }
  if (variant == 2) {
    const long bound = std::max<long>(1, long(std::sqrt(double(p) / 2.0)));
    for (long den = 1; den <= bound; ++den) {
      const std::uint64_t num = r * std::uint64_t(den) % p;
      const long s = num <= p / 2 ? long(num) : long(num) - pl;
      if (std::labs(s) <= bound) return Scalar::from_rational(target, Rational(s, den));
    }
  }
  return Scalar::from_int(target, sym);
}

/// Characteristic-0 subspaces whose reduction mod p is `s`, one per lift variant.
std::vector<Subspace> lift_subspace(const Subspace& s, const FieldDesc& target) {
  std::vector<Subspace> out;
  for (int variant = 0; variant < 3; ++variant) {
    std::vector<Vector> rows;
    for (const auto& v : s.basis()) {
      Vector w;
      for (const auto& x : v) w.push_back(lift_residue(x.residue(), s.field().p(), target, variant));
      rows.push_back(std::move(w));
    }
    out.push_back(Subspace::span(target, s.ambient_dim(), rows));
  }
  return out;
}

const Subspace& best(const std::vector<Subspace>& cands, const Subspace& fallback) {
  const Subspace* b = &fallback;
  for (const auto& c : cands)
    if (c.dim() > b->dim()) b = &c;
  return *b;
}

}  // namespace

std::vector<Subspace> abelian_candidates(const LeibnizAlgebra& l, bool ideals_only, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Subspace> raw;
  raw.push_back(l.zero_subspace());
  raw.push_back(centre(l));
  raw.push_back(squares_ideal(l));
  for (const auto& series : {derived_series(l), lower_central_series(l), upper_central_series(l)})
    raw.insert(raw.end(), series.begin(), series.end());

  Subspace bound = l.whole();
  if (is_nilpotent(l)) {
    bound = l.whole();
  } else if (l.field().is_prime_field() && l.dim() <= gfp::kMaxDim) {
    gfp::Algebra g(l);
    bound = g.to_subspace(gfp::nilradical(g));
  } else if (is_solvable(l)) {
    bound = nilradical(l);
  }
  // Centre of the nilradical, and the squares ideal added to it.
  const Subspace zn = two_sided_centraliser_in(l, bound, bound);
  raw.push_back(zn);
  raw.push_back(subspace_sum(squares_ideal(l), zn));

  // Right centralisers of one-dimensional right ideals.
  if (!ideals_only) {
    for (const auto& x : probe_vectors(l.whole(), rng)) {
      if (is_zero(x)) continue;
      Subspace line = l.span({x});
      if (is_right_ideal(l, line)) raw.push_back(right_centraliser(l, line, l.whole()));
    }
  }
  // Abelian closures of random null vectors.
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int r = 0; r < 6; ++r) {
    Vector v = zero_vector(l.field(), l.dim());
    for (auto& c : v) c = Scalar::from_int(l.field(), coef(rng));
    if (!is_zero(l.bracket(v, v))) continue;
    raw.push_back(ideals_only ? ideal_closure(l, l.span({v})) : l.span({v}));
  }

  auto ok = [&](const Subspace& s) { return ideals_only ? is_abelian_ideal(l, s) : is_abelian_subalgebra(l, s); };
  std::vector<Subspace> out;
  std::unordered_set<Subspace> seen;
  for (const auto& s : raw) {
    if (!ok(s)) continue;
    Subspace grown = extend(l, s, ideals_only, bound, rng);
    if (!ok(grown)) throw LeibnizError("abelian candidate growth produced an invalid subspace");
    if (seen.insert(grown).second) out.push_back(std::move(grown));
  }
  std::stable_sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.dim() > b.dim(); });
  return out;
}

DimensionWitness alpha_exact(const LeibnizAlgebra& l) {
  require_gfp(l);
  gfp::Algebra g(l);
  const auto cands = abelian_candidates(l, false);
  const auto res = gfp::max_abelian_subalgebra(g, g.from_subspace(cands.front()));
  DimensionWitness w;
  w.dim = w.upper = res.dim;
  w.witness = g.to_subspace(res.witness);
  if (!is_abelian_subalgebra(l, w.witness) || w.witness.dim() != w.dim)
    throw LeibnizError("alpha search returned an invalid witness");
  return w;
}

DimensionWitness beta_exact(const LeibnizAlgebra& l, bool* unique) {
  require_gfp(l);
  gfp::Algebra g(l);
  const auto res = gfp::max_abelian_ideal(g, gfp::nilradical(g));
  DimensionWitness w;
  w.dim = w.upper = res.dim;
  w.witness = g.to_subspace(res.witness);
  if (!is_abelian_ideal(l, w.witness) || w.witness.dim() != w.dim)
    throw LeibnizError("beta search returned an invalid witness");
  if (unique) *unique = res.maximisers == 1;
  return w;
}

AlphaBetaResult alpha_beta_exact(const LeibnizAlgebra& l) {
  AlphaBetaResult r;
  bool unique = false;
  r.beta = beta_exact(l, &unique);
  r.unique_beta_maximizer = unique;
  r.alpha = alpha_exact(l);
  if (r.beta.dim > r.alpha.dim) throw LeibnizError("beta exceeds alpha");
  return r;
}

std::vector<std::uint64_t> good_primes(const LeibnizAlgebra& l, std::size_t count, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  // Over Q(i) only split primes keep i inside GF(p).
  const bool gaussian = l.field().kind() == FieldKind::GaussianRationals;
  for (std::uint64_t p = 5; p < bound && out.size() < count; ++p)
    if (is_prime(p) && (!gaussian || p % 4 == 1) && reduce_mod(l, p)) out.push_back(p);
  return out;
}

AlphaBetaResult alpha_beta_char0(const LeibnizAlgebra& l, std::size_t prime_count) {
  if (l.field().is_prime_field()) throw Unsupported("alpha_beta_char0 needs Q or Q(i)");
  const auto primes = good_primes(l, prime_count);
  if (primes.empty()) throw Unsupported("no good prime below 1000");

  auto alpha_c = abelian_candidates(l, false);
  auto beta_c = abelian_candidates(l, true);
  AlphaBetaResult r;
  for (auto p : primes) {
    const auto red = *reduce_mod(l, p);
    const auto ex = alpha_beta_exact(red);
    r.reductions.push_back({p, ex.alpha.dim, ex.beta.dim});
    for (const auto& s : lift_subspace(ex.alpha.witness, l.field()))
      if (is_abelian_subalgebra(l, s)) alpha_c.push_back(s);
    for (const auto& s : lift_subspace(ex.beta.witness, l.field()))
      if (is_abelian_ideal(l, s)) beta_c.push_back(s);
  }
  // Abelian ideals are abelian subalgebras.
  alpha_c.insert(alpha_c.end(), beta_c.begin(), beta_c.end());

  // A prime bounds the value only if the witness survives reduction there.
  auto finish = [&](const std::vector<Subspace>& cands, std::size_t PrimeReduction::*field) {
    DimensionWitness w;
    w.witness = best(cands, l.zero_subspace());
    w.dim = w.witness.dim();
    w.upper = l.dim();
    std::size_t used = 0;
    for (const auto& red : r.reductions) {
      auto ws = reduce_subspace_mod(w.witness, red.p);
      if (!ws || ws->dim() != w.dim) continue;
      ++used;
      w.upper = std::min(w.upper, red.*field);
    }
    if (w.dim == l.dim())
      w.certification = SearchCertification::Exact;
    else if (w.dim == w.upper && used >= prime_count)
      w.certification = SearchCertification::MultiPrime;
    else
      w.certification = SearchCertification::LowerBoundOnly;
    return w;
  };
  r.alpha = finish(alpha_c, &PrimeReduction::alpha);
  r.beta = finish(beta_c, &PrimeReduction::beta);
  if (r.alpha.dim > r.alpha.upper || r.beta.dim > r.beta.upper)
    throw LeibnizError("a reduced witness exceeds the exact value at its prime");
  r.certification = std::max(r.alpha.certification, r.beta.certification);
  return r;
}

AlphaBetaResult alpha_beta(const LeibnizAlgebra& l) {
  return l.field().is_prime_field() ? alpha_beta_exact(l) : alpha_beta_char0(l);
}

}  // namespace leibniz
