#include <doctest.h>

#include <set>

#include "leibniz/catalog.hpp"

using namespace leibniz;

TEST_CASE("product notation expands skew pairs and coefficients") {
  const auto f = FieldDesc::rationals();
  ParamBinding p{{"alpha", Scalar::from_int(f, 3)}};
  auto t = parse_products(5, "[e1,e2]=e3=-[e2,e1]; [e3,e5]=(1+alpha)e3; [e5,e1]=-e1+alpha e2", f, p);
  CHECK(t.at(0, 1, 2) == Scalar::one(f));
  CHECK(t.at(1, 0, 2) == Scalar::from_int(f, -1));
  CHECK(t.at(2, 4, 2) == Scalar::from_int(f, 4));
  CHECK(t.at(4, 0, 0) == Scalar::from_int(f, -1));
  CHECK(t.at(4, 0, 1) == Scalar::from_int(f, 3));
  auto g = parse_products(4, "[e2,e3]=i e4+2*e1=-[e3,e2]", FieldDesc::gaussian(), {});
  CHECK(g.at(2, 1, 3) == -imaginary_unit(FieldDesc::gaussian()));
  CHECK(g.at(1, 2, 0) == Scalar::from_int(FieldDesc::gaussian(), 2));
}

TEST_CASE("product notation rejects malformed input") {
  const auto f = FieldDesc::rationals();
  CHECK_THROWS_AS(parse_products(3, "[e1,e4]=e2", f, {}), ParseError);
  CHECK_THROWS_AS(parse_products(3, "[e1,e2]=e3; [e1,e2]=e1", f, {}), ParseError);
  CHECK_THROWS_AS(parse_products(3, "[e1,e2]=mu e3", f, {}), ParseError);
  CHECK_THROWS_AS(parse_products(3, "[e1,e2]", f, {}), ParseError);
  CHECK_NOTHROW(parse_products(3, "[e1,e2]=e3; [e1,e2]=e3", f, {}));
}

TEST_CASE("catalog ids are unique and tables are complete") {
  std::set<std::string> ids;
  for (const auto& e : catalog()) CHECK(ids.insert(e.id).second);
  const std::size_t sizes[] = {0, 9, 9, 14, 8, 10, 10, 10, 8, 4};
  for (int t = 1; t <= 9; ++t) CHECK(table_entries(t).size() == sizes[t]);
  for (const auto& e : catalog()) CHECK(e.has_table_values() == (e.table != 0));
}

TEST_CASE("needs_i follows the product text") {
  CHECK(catalog_entry("T5.L9").needs_i());
  CHECK(catalog_entry("T1.L2").needs_i());
  CHECK_FALSE(catalog_entry("T5.L8").needs_i());
  CHECK_FALSE(catalog_entry("T2.L11").needs_i());
}

TEST_CASE("every entry validates at every default instantiation") {
  std::size_t checked = 0;
  for (const auto& e : catalog()) {
    for (const auto& inst : default_instantiations(e)) {
      INFO(e.id << " over " << inst.field.str() << " " << format_params(inst.params));
      CHECK_NOTHROW(instantiate(e, inst.field, inst.params));
      ++checked;
    }
  }
  MESSAGE("instantiations validated: " << checked);
  CHECK(checked > 500);
}

TEST_CASE("default instantiations respect constraints and fields") {
  auto l1 = default_instantiations(catalog_entry("T1.L1"));
  bool zero = false, one = false;
  for (const auto& i : l1) {
    zero |= i.params.at("alpha").is_zero();
    one |= i.params.at("alpha").is_one();
  }
  CHECK(zero);
  CHECK(one);
  for (const auto& i : default_instantiations(catalog_entry("T3.L10"))) {
    bool any = false;
    for (const auto& [k, v] : i.params) any |= !v.is_zero();
    CHECK(any);
  }
  for (const auto& i : default_instantiations(catalog_entry("T5.L9"))) CHECK(i.field.has_imaginary_unit());
}

TEST_CASE("instantiate enforces admissibility, i and characteristic") {
  const auto f5 = FieldDesc::prime(5);
  CHECK_THROWS_AS(instantiate(catalog_entry("T3.L5"), f5, {{"mu1", Scalar::zero(f5)}, {"mu2", Scalar::one(f5)}}),
                  LeibnizError);
  CHECK_THROWS_AS(instantiate(catalog_entry("T5.L9"), FieldDesc::prime(7)), FieldError);
  CHECK_THROWS_AS(instantiate(catalog_entry("T5.L9"), FieldDesc::rationals()), FieldError);
  CHECK_THROWS_AS(instantiate(catalog_entry("Ex2.2"), FieldDesc::prime(3)), Unsupported);
  auto l = instantiate(catalog_entry("T1.L4"), f5, {{"alpha", Scalar::one(f5)}});
  CHECK(l.dim() == 5);
  CHECK(l.coeff(0, 4, 0) == Scalar::one(f5));
  CHECK(l.coeff(4, 0, 0) == Scalar::from_int(f5, -1));
  auto ex = instantiate(catalog_entry("Ex2.2"), FieldDesc::prime(2));
  CHECK(ex.coeff(0, 0, 2) == Scalar::one(FieldDesc::prime(2)));
  CHECK(ex.coeff(1, 0, 0) == Scalar::one(FieldDesc::prime(2)));
}

TEST_CASE("the literal readings of the duplicated row fail validation") {
  const auto& e = catalog_entry("T3.L1");
  REQUIRE(e.rejected_readings.size() == 2);
  for (const auto& f : {FieldDesc::prime(5), FieldDesc::prime(13), FieldDesc::rationals()}) {
    CHECK_NOTHROW(instantiate(e, f));
    for (const auto& r : e.rejected_readings) CHECK(!leibniz_violations(parse_products(5, r, f, {})).empty());
  }
}

TEST_CASE("null filiform and Heisenberg") {
  const auto q = FieldDesc::rationals();
  auto nf2 = null_filiform(q, 2);
  CHECK(nf2.coeff(0, 0, 1) == Scalar::one(q));
  CHECK(series_dims(lower_central_series(null_filiform(q, 4))) == std::vector<std::size_t>{4, 3, 2, 1, 0});
  CHECK_THROWS_AS(null_filiform(q, 1), DimensionError);
  auto h = heisenberg(FieldDesc::prime(5));
  CHECK(is_lie(h));
  CHECK(centre(h).dim() == 1);
}

TEST_CASE("every rejected printed reading fails at some default sample") {
  std::size_t corrected = 0;
  for (const auto& e : catalog()) {
    if (e.rejected_readings.empty()) continue;
    CHECK_FALSE(e.erratum.empty());
    ++corrected;
    for (const auto& r : e.rejected_readings) {
      bool fails = false;
      for (const auto& inst : default_instantiations(e)) {
        ParamBinding local;
        for (const auto& [k, v] : inst.params) local.emplace(k, v);
        fails |= !leibniz_violations(parse_products(e.dim, r, inst.field, local)).empty();
      }
      INFO(e.id);
      CHECK(fails);
    }
  }
  CHECK(corrected == 15);
}

TEST_CASE("the diagonal rows fail off the diagonal") {
  const auto f = FieldDesc::prime(13);
  for (const char* id : {"T9.L41", "T9.L42"}) {
    const auto& e = catalog_entry(id);
    ParamBinding off{{"a", Scalar::from_int(f, 1)}, {"b", Scalar::from_int(f, 2)}};
    CHECK_FALSE(admissible(e, off));
    CHECK(!leibniz_violations(parse_products(6, e.products, f, off)).empty());
  }
}
