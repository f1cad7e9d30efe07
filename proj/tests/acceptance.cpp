// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria, or with --expect-fail a,b,...
// 0 exactly when the failing criteria are the listed ones.

#include <fmt/format.h>

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "leibniz/catalog.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/report.hpp"
#include "leibniz/search.hpp"
#include "leibniz/theorems.hpp"
#include "oracles.hpp"

using namespace leibniz;

namespace {

struct Outcome {
  bool pass = true;
  std::string headline;
  std::vector<std::string> details;

  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
};

int failed = 0;
std::set<int> failing;

template <class F>
void criterion(int n, const char* title, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  failed += !o.pass;
  if (!o.pass) failing.insert(n);
  std::cout << fmt::format("{} {}. {}: {} [{:.1f}s]\n", o.pass ? "PASS" : "FAIL", n, title, o.headline, secs);
  for (const auto& d : o.details) std::cout << "    " << d << "\n";
  std::cout.flush();
}

void catalog_validation(Outcome& o) {
  std::size_t entries = 0, inst = 0, errata = 0;
  for (const auto& e : catalog()) {
    if (e.table == 0) continue;
    ++entries;
    for (const auto& s : default_instantiations(e)) {
      try {
        instantiate(e, s.field, s.params);
        ++inst;
      } catch (const std::exception& ex) {
        o.fail(fmt::format("{} {} over {}: {}", e.id, format_params(s.params), s.field.str(), ex.what()));
      }
    }
    if (e.erratum.empty()) continue;
    ++errata;
    if (e.constraint == Constraint::Equal) {
      // A restriction to a = b: the printed off-diagonal parameters must break the identity.
      const auto f = FieldDesc::prime(13);
      ParamBinding off{{e.params[0], Scalar::from_int(f, 0)}, {e.params[1], Scalar::from_int(f, 1)}};
      if (leibniz_violations(parse_products(e.dim, e.products, f, off)).empty())
        o.fail(e.id + ": validates off the diagonal a = b");
    } else if (e.rejected_readings.empty()) {
      o.fail(e.id + ": erratum without the rejected readings");
    }
    // Each rejected printed reading must actually break the identity somewhere.
    for (const auto& text : e.rejected_readings) {
      bool breaks = false;
      for (const auto& s : default_instantiations(e)) {
        try {
          if (!leibniz_violations(parse_products(e.dim, text, s.field, s.params)).empty()) breaks = true;
        } catch (const std::exception&) {
          breaks = true;
        }
        if (breaks) break;
      }
      if (!breaks) o.fail(e.id + ": rejected reading validates: " + text);
    }
  }
  o.headline = fmt::format("{} table entries, {} instantiations over GF(5), GF(13), Q/Q(i) valid; {} errata documented",
                           entries, inst, errata);
}

void table_reproduction(Outcome& o) {
  std::map<std::uint64_t, TableReport> reps;
  for (std::uint64_t p : {5u, 13u, 17u}) reps.emplace(p, reproduce_tables(all_tables(), p));
  const auto& base = reps.at(5);
  // Samples differ per prime (the random point, admissibility), so rows are
  // compared per entry: which computed values deviate from the printed ones.
  auto deviations = [](const TableReport& r) {
    std::map<std::string, std::set<std::pair<std::size_t, std::size_t>>> out;
    for (const auto& row : r.rows)
      if (!row.match) out[row.id].insert({row.alpha, row.beta});
    return out;
  };
  const auto d5 = deviations(base);
  bool reproducible = true;
  for (std::uint64_t p : {13u, 17u})
    if (deviations(reps.at(p)) != d5) {
      reproducible = false;
      o.fail(fmt::format("deviations at GF({}) differ from GF(5)", p));
    }
  std::map<std::string, std::string> deviating;
  bool unexplained = false;
  for (const auto& row : base.rows)
    if (!row.match) {
      deviating.emplace(row.id, fmt::format("computed {}/{} printed {}/{}", row.alpha, row.beta, row.expected_alpha,
                                            row.expected_beta));
      unexplained |= row.deviation == "unexplained";
    }
  o.headline = fmt::format("GF(5): {}; GF(13): {}; GF(17): {}", base.summary(), reps.at(13).summary(),
                           reps.at(17).summary());
  if (base.mismatches() == 0 && reps.at(13).mismatches() == 0) return;
  o.pass = false;
  o.details.push_back(fmt::format("exact match required; {} rows deviate, {} at every prime, {}", deviating.size(),
                                  reproducible ? "identically" : "NOT identically",
                                  unexplained ? "some without a recorded reason" : "each with a recorded reason"));
  for (const auto& [id, what] : deviating) o.details.push_back(fmt::format("{}: {}", id, what));
}

void examples(Outcome& o) {
  {
    const auto l = instantiate(catalog_entry("Ex2.2"), FieldDesc::prime(2));
    const auto r = alpha_beta(l);
    if (r.alpha.dim != 2 || r.beta.dim != 1) o.fail(fmt::format("Ex2.2/GF(2): alpha {} beta {}", r.alpha.dim, r.beta.dim));
  }
  // The real rotation in Examples 3.8 and 3.9 stays irreducible mod 7.
  const auto f = FieldDesc::prime(7);
  {
    const auto l = instantiate(catalog_entry("Ex3.8"), f);
    const auto r = alpha_beta(l);
    if (r.alpha.dim != 2 || r.beta.dim != 1) o.fail(fmt::format("Ex3.8/GF(7): alpha {} beta {}", r.alpha.dim, r.beta.dim));
    const auto l2 = product_space(l, l.whole(), l.whole());
    const auto phi = frattini_ideal(l);
    const auto zl2 = subspace_intersect(centre(l), l2);
    const auto d2i = subspace_sum(derived_series(l).at(2), squares_ideal(l));
    if (!(phi == zl2 && zl2 == d2i && phi.dim() == 1))
      o.fail(fmt::format("Ex3.8/GF(7): phi {} Z(L)^L^2 {} L^(2)+I {}", phi.str(), zl2.str(), d2i.str()));
    const auto q = alpha_beta(instantiate(catalog_entry("Ex3.8"), FieldDesc::rationals()));
    if (q.alpha.dim != 2 || q.beta.dim != 1 || q.certification == SearchCertification::LowerBoundOnly)
      o.fail("Ex3.8/Q: not certified at 2/1");
  }
  {
    const auto l = instantiate(catalog_entry("Ex3.9"), f);
    const auto r = alpha_beta(l);
    const auto n = nilradical(l);
    const auto zn = two_sided_centraliser_in(l, n, n);
    if (r.alpha.dim != 3 || r.beta.dim != 2 || n.dim() != 4 || !zn.contains(squares_ideal(l)))
      o.fail(fmt::format("Ex3.9/GF(7): alpha {} beta {} dim N {} I in Z(N) {}", r.alpha.dim, r.beta.dim, n.dim(),
                         zn.contains(squares_ideal(l))));
    const auto q = alpha_beta(instantiate(catalog_entry("Ex3.9"), FieldDesc::rationals()));
    if (q.alpha.dim != 3 || q.beta.dim != 2 || q.certification == SearchCertification::LowerBoundOnly)
      o.fail("Ex3.9/Q: not certified at 3/2");
  }
  o.headline = "Ex2.2/GF(2) 2/1; Ex3.8 2/1 with phi = Z(L) cap L^2 = L^(2)+I of dim 1; Ex3.9 3/2, dim N 4, I in Z(N) "
               "(GF(7) and certified over Q)";
}

HarnessReport harness;

void theorem_suite(Outcome& o) {
  HarnessOptions opt;
  opt.count = 500;  // per (dimension, prime): 1000 per dimension over GF(5) and GF(7)
  harness = run_harness(opt);
  std::size_t hits = 0;
  for (const auto& [id, s] : harness.stats) hits += s.hits();
  o.headline = fmt::format("{} instances, {} non-vacuous verdicts, {} FAIL, Thm3.5 cases i/ii/iii = {}/{}/{}",
                           harness.instances, hits, harness.failures(), harness.theorem_cases["i"],
                           harness.theorem_cases["ii"], harness.theorem_cases["iii"]);
  for (const auto& [id, min] : harness.minimum_hits)
    if (id.rfind("Thm3.5 case", 0) != 0)
      o.details.push_back(fmt::format("{}: {} hits (minimum {})", id, harness.stats[id].hits(), min));
  for (const auto& r : harness.records)
    if (r.verdict == Verdict::Fail) o.fail(fmt::format("FAIL {} on {}: {}", r.check, r.instance, r.detail));
  for (const auto& id : harness.unmet_minimums()) o.fail("minimum not met: " + id);
  if (!harness.negative_control_failed_as_required.value_or(false))
    o.fail("negative control: Thm2.1 conclusion did not fail on Ex2.2 over GF(2)");
  else
    o.details.push_back("negative control: Thm2.1 conclusion fails on Ex2.2 over GF(2) as required");
}

void oracle_equivalence(Outcome& o) {
  std::size_t algebras = 0, cores = 0;
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto f = FieldDesc::prime(p);
      const auto subs = oracle::all_subspaces(f, n);
      oracle::for_each_leibniz_tensor(n, p, [&](const StructureTensor& t) {
        const auto l = validate(t);
        const auto r = alpha_beta_exact(l);
        const auto a = oracle::max_abelian(l, subs, false);
        const auto b = oracle::max_abelian(l, subs, true);
        if (r.alpha.dim != a.dim || r.beta.dim != b.dim)
          o.fail(fmt::format("GF({}) dim {}: search {}/{} oracle {}/{}", p, n, r.alpha.dim, r.beta.dim, a.dim, b.dim));
        ++algebras;
        if (p != 3) return;
        const auto ideals = oracle::ideals(l, subs);
        if (is_solvable(l) && nilradical(l) != oracle::nilradical(l, ideals)) o.fail("nilradical mismatch");
        for (const auto& u : subs)
          if (is_subalgebra(l, u)) {
            ++cores;
            if (core_of(l, u) != oracle::core(l, ideals, u)) o.fail("core mismatch");
          }
      });
    }
  // Dimension 4 over GF(3): derivation extensions of 3-dimensional algebras.
  const auto f = FieldDesc::prime(3);
  const auto subs4 = oracle::all_subspaces(f, 4);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(0, 2);
  std::size_t dim4 = 0;
  for (int attempt = 0; attempt < 4000 && dim4 < 40; ++attempt) {
    auto base = attempt % 3 == 0 ? heisenberg(f) : attempt % 3 == 1 ? abelian_algebra(f, 3) : null_filiform(f, 3);
    Matrix der(f, 3, 3), left(f, 3, 3);
    for (const auto& m : derivation_basis(base)) der = der + Scalar::from_int(f, d(rng)) * m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) left(i, j) = Scalar::from_int(f, d(rng) == 0 ? d(rng) : 0);
    Vector sq(3, Scalar::zero(f));
    for (auto& s : sq) s = Scalar::from_int(f, d(rng) == 0 ? d(rng) : 0);
    const auto ext = derivation_extension(base, der, left, sq);
    if (!ext.algebra) continue;
    const auto& l = *ext.algebra;
    ++dim4;
    const auto ideals = oracle::ideals(l, subs4);
    if (is_solvable(l) && nilradical(l) != oracle::nilradical(l, ideals)) o.fail("dim 4 nilradical mismatch");
    for (const auto& u : subs4)
      if (is_subalgebra(l, u)) {
        ++cores;
        if (core_of(l, u) != oracle::core(l, ideals, u)) o.fail("dim 4 core mismatch");
      }
  }
  o.headline = fmt::format("all {} Leibniz algebras of dim <= 3 over GF(2), GF(3) agree on alpha/beta; nilradical and "
                           "{} cores agree over GF(3) incl. {} dim-4 algebras",
                           algebras, cores, dim4);
}

void basis_invariance(Outcome& o) {
  const auto f = FieldDesc::prime(5);
  std::mt19937_64 rng(2024);
  std::size_t entries = 0, changes = 0;
  for (const auto& e : catalog()) {
    if (e.required_characteristic != 0 && e.required_characteristic != 5) continue;
    const auto samples = parameter_samples(e, f);
    if (samples.empty()) continue;
    const auto l = instantiate(e, f, samples.front());
    auto signature = [](const LeibnizAlgebra& m) {
      const auto r = alpha_beta(m);
      return std::vector<std::size_t>{r.alpha.dim,
                                      r.beta.dim,
                                      centre(m).dim(),
                                      squares_ideal(m).dim(),
                                      series_dims(derived_series(m)).size(),
                                      series_dims(lower_central_series(m)).size()};
    };
    auto full = [&](const LeibnizAlgebra& m) {
      auto s = signature(m);
      for (auto v : series_dims(derived_series(m))) s.push_back(v);
      for (auto v : series_dims(lower_central_series(m))) s.push_back(v);
      return s;
    };
    const auto want = full(l);
    ++entries;
    for (int k = 0; k < 50; ++k) {
      const auto m = change_basis(l, random_invertible(f, l.dim(), rng));
      ++changes;
      if (full(m) != want) {
        o.fail(fmt::format("{}: invariants change under a basis change", e.id));
        break;
      }
    }
  }
  o.headline = fmt::format("{} catalog entries x 50 random basis changes over GF(5) = {} comparisons, all equal", entries,
                           changes);
  if (!o.pass) o.headline = "invariants changed under a basis change";
}

void filiform_report(Outcome& o) {
  std::map<std::size_t, std::map<std::string, std::size_t>> by_p;
  for (const auto& r : harness.filiform) ++by_p[r.p][r.matches];
  for (std::size_t p : {0u, 1u, 2u}) {
    if (!by_p.count(p)) {
      o.fail(fmt::format("no {}-filiform instance measured", p));
      continue;
    }
    std::vector<std::string> parts;
    for (const auto& [m, c] : by_p[p]) parts.push_back(fmt::format("{} {}", m, c));
    o.details.push_back(fmt::format("p = {}: matches {}", p, fmt::join(parts, ", ")));
  }
  o.headline = fmt::format("{} filiform instances measured against n-k+1 and n-p-k+1", harness.filiform.size());
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::set<int>> expected;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--expect-fail") {
      expected.emplace();
      std::stringstream ss(argv[i + 1]);
      for (std::string tok; std::getline(ss, tok, ',');) expected->insert(std::stoi(tok));
    }
  criterion(1, "catalog validation", catalog_validation);
  criterion(2, "table reproduction", table_reproduction);
  criterion(3, "worked examples", examples);
  criterion(4, "theorem suite", theorem_suite);
  criterion(5, "oracle equivalence", oracle_equivalence);
  criterion(6, "basis-change invariance", basis_invariance);
  criterion(7, "filiform formula report", filiform_report);
  std::cout << fmt::format("{} of 7 criteria failed\n", failed);
  if (!expected) return failed;
  const bool as_expected = failing == *expected;
  std::cout << fmt::format("failing set {{{}}} {} the expected {{{}}}\n", fmt::join(failing, ","),
                           as_expected ? "equals" : "DIFFERS FROM", fmt::join(*expected, ","));
  return as_expected ? 0 : 1;
}
