#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/error.hpp"
#include "leibniz/report.hpp"

using namespace leibniz;

TEST_CASE("table regeneration guards the prime") {
  CHECK_THROWS_AS(reproduce_tables({1}, 2), FieldError);
  CHECK_THROWS_AS(reproduce_tables({1}, 3), FieldError);
  // Rows with i need p = 1 mod 4.
  CHECK_THROWS_AS(reproduce_tables({1}, 7), FieldError);
  CHECK_NOTHROW(reproduce_tables({3}, 7));
  CHECK_THROWS_AS(reproduce_tables({10}, 5), LeibnizError);
}

TEST_CASE("nilpotent rows reproduce their printed columns") {
  const auto rep = reproduce_tables({5}, 5);
  CHECK(rep.mismatches() == 0);
  CHECK(rep.summary() == "10 rows, 10 matches, 0 mismatches");
  for (const auto& r : rep.rows) {
    const bool five = r.id == "T5.L3" || r.id == "T5.L9";
    CHECK(r.alpha == (five ? 5u : 4u));
    CHECK(r.beta == r.alpha);
  }
  const auto t7 = reproduce_tables({7}, 13);
  bool l26 = false;
  for (const auto& r : t7.rows)
    if (r.id == "T7.L26") l26 = r.alpha == 5 && r.beta == 5 && r.match;
  CHECK(l26);
}

TEST_CASE("deviating rows carry their reason") {
  const auto rep = reproduce_tables({1}, 13);
  std::size_t bad = 0;
  for (const auto& r : rep.rows)
    if (!r.match) {
      ++bad;
      CHECK(r.id == "T1.L3");
      CHECK(r.alpha == 2);
      CHECK(r.beta == 2);
      CHECK(r.deviation == catalog_entry("T1.L3").deviation);
    }
  CHECK(bad > 0);
  CHECK(rep.csv().rfind("id,params,computed_alpha,computed_beta,expected_alpha,expected_beta,match,deviation\n", 0) == 0);
  CHECK(rep.markdown().find(rep.summary()) != std::string::npos);
}

TEST_CASE("invariant report contents") {
  const auto l = instantiate(catalog_entry("Ex3.9"), FieldDesc::prime(7));
  const auto doc = invariant_json(l);
  CHECK(doc["alpha_beta"]["alpha"]["dim"] == 3);
  CHECK(doc["alpha_beta"]["beta"]["dim"] == 2);
  CHECK(doc["alpha_beta"]["beta_maximizer_unique"] == true);
  CHECK(doc["nilradical"]["dim"] == 4);
  CHECK(doc["lie"] == false);
  CHECK(doc["derived_series_dims"] == nlohmann::json({5, 3, 1, 0}));
  const auto text = invariant_text(doc);
  CHECK(text.find("alpha = 3 (exact)") != std::string::npos);
  CHECK(text.find("nilradical: dim 4") != std::string::npos);

  ReportOptions only_ab{true, false, false};
  const auto small = invariant_json(abelian_algebra(FieldDesc::rationals(), 3), only_ab);
  CHECK_FALSE(small.contains("nilradical"));
  CHECK_FALSE(small.contains("derived_series_dims"));
  CHECK(small["alpha_beta"]["alpha"]["dim"] == 3);
  CHECK(small["alpha_beta"]["beta"]["dim"] == 3);
}

TEST_CASE("unsupported parts are reported, not thrown") {
  // sl2 over Q is not solvable: no nilradical, alpha/beta still certified.
  StructureTensor t(FieldDesc::rationals(), 3);
  const auto f = FieldDesc::rationals();
  auto s = [&](int v) { return Scalar::from_int(f, v); };
  // [h,e]=2e, [h,f]=-2f, [e,f]=h with antisymmetry.
  t.at(0, 1, 1) = s(2), t.at(1, 0, 1) = s(-2);
  t.at(0, 2, 2) = s(-2), t.at(2, 0, 2) = s(2);
  t.at(1, 2, 0) = s(1), t.at(2, 1, 0) = s(-1);
  const auto doc = invariant_json(validate(t, "sl2"));
  CHECK(doc["solvable"]["value"] == false);
  CHECK(doc["nilradical"]["status"] == "not solvable");
  CHECK(doc.contains("alpha_beta"));
}
