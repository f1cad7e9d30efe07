#include <doctest.h>

#include <random>

#include "leibniz/catalog.hpp"
#include "leibniz/invariants.hpp"
#include "oracles.hpp"

using namespace leibniz;

namespace {

Matrix random_invertible(const FieldDesc& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::from_int(f, d(rng));
    if (inverse(m)) return m;
  }
}

Subspace coords(const LeibnizAlgebra& l, std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> idx;
  for (auto k : one_based) idx.push_back(k - 1);
  return Subspace::coordinate(l.field(), l.dim(), idx);
}

}  // namespace

TEST_CASE("solvable and nilpotent flags") {
  const auto q = FieldDesc::rationals();
  auto ab = abelian_algebra(q, 3);
  CHECK(is_solvable(ab));
  CHECK(is_nilpotent(ab));
  auto ex39 = instantiate(catalog_entry("Ex3.9"), q);
  CHECK(is_solvable(ex39));
  CHECK_FALSE(is_nilpotent(ex39));
  CHECK(is_nilpotent(null_filiform(q, 5)));
}

TEST_CASE("nilradical of the worked examples") {
  const auto q = FieldDesc::rationals();
  auto ex39 = instantiate(catalog_entry("Ex3.9"), q);
  CHECK(nilradical(ex39) == coords(ex39, {2, 3, 4, 5}));
  auto ex39_7 = instantiate(catalog_entry("Ex3.9"), FieldDesc::prime(7));
  CHECK(nilradical(ex39_7) == coords(ex39_7, {2, 3, 4, 5}));
  auto nf = null_filiform(q, 4);
  CHECK(nilradical(nf) == nf.whole());
  auto t35 = instantiate(catalog_entry("T3.L5"), q, {{"mu1", Scalar::one(q)}, {"mu2", Scalar::one(q)}});
  CHECK(nilradical(t35).dim() == 3);
}

TEST_CASE("table captions: nilradical dimensions and derived codimension") {
  for (const auto& e : catalog()) {
    if (e.table == 0) continue;
    for (const auto& inst : default_instantiations(e)) {
      INFO(e.id << " over " << inst.field.str() << " " << format_params(inst.params));
      auto l = instantiate(e, inst.field, inst.params);
      if (e.table <= 4) {
        REQUIRE(is_solvable(l));
        CHECK_FALSE(is_nilpotent(l));
        CHECK(nilradical(l).dim() == (e.table <= 2 ? 4u : 3u));
      } else {
        CHECK(is_nilpotent(l));
        CHECK(product_space(l, l.whole(), l.whole()).dim() == 4);
      }
    }
  }
}

TEST_CASE("trace-form nilradical reduces to the GF(p) nilradical") {
  for (const auto& e : catalog()) {
    if (e.table == 0 || e.table > 4) continue;
    const FieldDesc f0 = e.needs_i() ? FieldDesc::gaussian() : FieldDesc::rationals();
    for (const auto& b : parameter_samples(e, f0)) {
      auto l = instantiate(e, f0, b);
      auto n0 = nilradical(l);
      for (std::uint64_t p : {5u, 13u}) {
        auto r = reduce_mod(l, p);
        if (!r) continue;
        auto np = nilradical(*r);
        auto red = reduce_subspace_mod(n0, p);
        INFO(e.id << " " << format_params(b) << " mod " << p);
        REQUIRE(red);
        CHECK(*red == np);
      }
    }
  }
}

TEST_CASE("nilradical and core match brute force over GF(3) up to dimension 4") {
  const auto f = FieldDesc::prime(3);
  std::size_t checked = 0;
  auto check = [&](const LeibnizAlgebra& l, const std::vector<Subspace>& subs) {
    auto ideals = oracle::ideals(l, subs);
    if (is_solvable(l)) CHECK(nilradical(l) == oracle::nilradical(l, ideals));
    for (const auto& u : subs)
      if (is_subalgebra(l, u)) CHECK(core_of(l, u) == oracle::core(l, ideals, u));
    ++checked;
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    auto subs = oracle::all_subspaces(f, n);
    oracle::for_each_leibniz_tensor(n, 3, [&](const StructureTensor& t) { check(validate(t), subs); });
  }
  // Dimension 4: reductions of small families and random derivation extensions.
  auto subs4 = oracle::all_subspaces(f, 4);
  check(null_filiform(f, 4), subs4);
  check(instantiate(catalog_entry("Ex3.8"), f), subs4);
  check(direct_sum(heisenberg(f), abelian_algebra(f, 1)), subs4);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(0, 2);
  std::size_t extensions = 0;
  for (int attempt = 0; attempt < 4000 && extensions < 60; ++attempt) {
    auto base = attempt % 2 ? heisenberg(f) : abelian_algebra(f, 3);
    auto ders = derivation_basis(base);
    Matrix der(f, 3, 3), left(f, 3, 3);
    for (const auto& m : ders) der = der + Scalar::from_int(f, d(rng)) * m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) left(i, j) = Scalar::from_int(f, d(rng) == 0 ? d(rng) : 0);
    Vector sq(3, Scalar::zero(f));
    for (auto& s : sq) s = Scalar::from_int(f, d(rng) == 0 ? d(rng) : 0);
    auto ext = derivation_extension(base, der, left, sq);
    if (!ext.algebra) continue;
    check(*ext.algebra, subs4);
    ++extensions;
  }
  CHECK(extensions >= 20);
  MESSAGE("algebras checked: " << checked);
}

TEST_CASE("supersolvability") {
  const auto q = FieldDesc::rationals();
  CHECK(is_supersolvable(abelian_algebra(q, 3)).value);
  CHECK(is_supersolvable(null_filiform(q, 4)).status == Certification::Exact);
  // The rotation splits mod 5 and stays irreducible mod 7.
  auto s5 = is_supersolvable(instantiate(catalog_entry("Ex3.8"), FieldDesc::prime(5)));
  auto s7 = is_supersolvable(instantiate(catalog_entry("Ex3.8"), FieldDesc::prime(7)));
  CHECK(s5.value);
  CHECK_FALSE(s7.value);
  CHECK(s7.status == Certification::Exact);
  auto sq = is_supersolvable(instantiate(catalog_entry("Ex3.8"), q));
  CHECK(sq.status == Certification::FiniteFieldOnly);
  CHECK_FALSE(sq.value);
  CHECK(is_supersolvable(instantiate(catalog_entry("T3.L13"), FieldDesc::prime(5))).value);
}

TEST_CASE("Frattini ideal") {
  CHECK(frattini_ideal(abelian_algebra(FieldDesc::prime(2), 3)).is_zero());
  for (std::uint64_t p : {5u, 7u}) {
    auto ex = instantiate(catalog_entry("Ex3.8"), FieldDesc::prime(p));
    CHECK(frattini_ideal(ex) == coords(ex, {4}));
  }
  auto nf = null_filiform(FieldDesc::prime(3), 3);
  CHECK(frattini_ideal(nf) == coords(nf, {2, 3}));
  for (const auto& m : maximal_subalgebras(nf)) CHECK(m.contains(frattini_ideal(nf)));
  CHECK_THROWS_AS(frattini_ideal(abelian_algebra(FieldDesc::rationals(), 2)), Unsupported);
}

TEST_CASE("chief factors") {
  for (const auto& f : {FieldDesc::rationals(), FieldDesc::prime(7), FieldDesc::prime(5)}) {
    auto ex = instantiate(catalog_entry("Ex3.8"), f);
    auto l2 = product_space(ex, ex.whole(), ex.whole());
    auto low = subspace_sum(derived_series(ex)[2], squares_ideal(ex));
    CHECK(l2 == coords(ex, {2, 3, 4}));
    CHECK(low == coords(ex, {4}));
    // Irreducible rotation over Q and GF(7); split over GF(5).
    CHECK(is_minimal_ideal(ex, low, l2) == (f.p() != 5));
    CHECK(is_minimal_ideal(ex, ex.zero_subspace(), low));
  }
  auto nf = null_filiform(FieldDesc::rationals(), 4);
  auto lcs = lower_central_series(nf);
  CHECK(is_minimal_ideal(nf, lcs[2], lcs[1]));
  CHECK_FALSE(is_minimal_ideal(nf, lcs[3], lcs[1]));
  CHECK_THROWS_AS(is_minimal_ideal(nf, nf.zero_subspace(), lcs[1]), Unsupported);
}

TEST_CASE("filiform profiles") {
  const auto q = FieldDesc::rationals();
  for (std::size_t n = 2; n <= 6; ++n) {
    auto prof = filiform_profile(null_filiform(q, n));
    REQUIRE(prof);
    CHECK(prof->p == 0);
    CHECK(prof->k == 2);
  }
  auto ab = filiform_profile(abelian_algebra(q, 3));
  REQUIRE(ab);
  CHECK(ab->degenerate);
  CHECK(ab->p == 2);
  CHECK(ab->k == 1);
  auto sum = filiform_profile(direct_sum(null_filiform(q, 4), abelian_algebra(q, 1)));
  REQUIRE(sum);
  CHECK(sum->p == 1);
  CHECK(sum->k == 2);
  CHECK_THROWS_AS(filiform_profile(instantiate(catalog_entry("Ex3.9"), q)), Unsupported);
}

TEST_CASE("adapted filiform bases") {
  const auto q = FieldDesc::rationals();
  auto nf = null_filiform(q, 5);
  auto e = adapted_filiform_basis(nf);
  for (std::size_t i = 0; i < 5; ++i) CHECK(e[i] == nf.basis_vector(i));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    for (const auto& base : {null_filiform(q, 5), direct_sum(null_filiform(q, 4), abelian_algebra(q, 1)),
                             direct_sum(null_filiform(q, 3), abelian_algebra(q, 2))}) {
      auto l = change_basis(base, random_invertible(q, base.dim(), rng));
      auto prof = filiform_profile(l);
      REQUIRE(prof);
      auto b = adapted_filiform_basis(l, trial);
      CHECK(l.span(b).dim() == l.dim());
      for (std::size_t i = prof->p; i + 1 < l.dim(); ++i) CHECK(l.bracket(b[i], b[0]) == b[i + 1]);
    }
  }
  auto g = change_basis(null_filiform(FieldDesc::prime(5), 4), random_invertible(FieldDesc::prime(5), 4, rng));
  auto b = adapted_filiform_basis(g);
  for (std::size_t i = 0; i + 1 < 4; ++i) CHECK(g.bracket(b[i], b[0]) == b[i + 1]);
  CHECK_THROWS_AS(adapted_filiform_basis(abelian_algebra(q, 3)), LeibnizError);
}

TEST_CASE("report flags are consistent") {
  for (const char* id : {"Ex3.8", "Ex3.9", "T1.L4", "T5.L1", "T3.L13"}) {
    const auto& e = catalog_entry(id);
    auto f = FieldDesc::prime(5);
    ParamBinding b;
    for (const auto& p : e.params) b.emplace(p, Scalar::one(f));
    auto r = invariant_report(instantiate(e, f, b), true);
    if (r.nilpotent.value) CHECK(r.supersolvable.value);
    if (r.supersolvable.value) CHECK(r.solvable.value);
    CHECK(r.frattini.has_value());
  }
}
