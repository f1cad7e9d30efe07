#pragma once

// Executable checks of the structural results on abelian subalgebras and
// ideals, the random instance generator, and the harness that runs the checks
// over catalog and random instances.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Recorded: a documented finding that is reported but not fatal
/// (exploratory directions, formula comparisons). Skipped: the check could
/// not run (field or enumeration budget).
enum class Verdict { Pass, Vacuous, Fail, Recorded, Skipped };
std::string to_string(Verdict v);

/// Measured data of one p-filiform instance against the two dimension
/// formulas n-k+1 and n-p-k+1.
struct FiliformRecord {
  std::string instance;
  std::size_t n = 0, p = 0, k = 0, alpha = 0, beta = 0, dim_lk = 0;
  bool lk_is_maximiser = false, unique = false;
  /// "n-k+1", "n-p-k+1", "both" or "neither".
  std::string matches;
};

struct CheckResult {
  std::string check;
  Verdict verdict = Verdict::Vacuous;
  /// Short key=value summary (case, measured dimensions, ...).
  std::string detail;
  /// Case label for checks that classify ("i", "ii", "iii").
  std::string tag;
  /// Named subspaces that support the verdict, as RREF rows.
  std::map<std::string, Subspace> subspaces;
  std::optional<FiliformRecord> filiform;
};

/// Identifiers in run order.
const std::vector<std::string>& check_ids();

struct CheckOptions {
  /// Run the characteristic-dependent checks in characteristic 2 as well.
  bool lift_char_filter = false;
  /// Budget for exhaustive subspace and ideal scans.
  std::uint64_t scan_limit = 4'000'000;
  /// Budget (closure steps) for enumerating every ideal.
  std::uint64_t ideal_limit = 100'000;
};

/// Runs the selected checks (empty = all) on one GF(p) algebra. Shared
/// data (alpha, beta, nilradical, maximal subalgebras, ...) is computed once.
std::vector<CheckResult> run_checks(const LeibnizAlgebra& l, const std::vector<std::string>& only = {},
                                    const CheckOptions& opt = {});

enum class Strategy { CatalogMutate, DirectSum, DerivationExtension };
std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

/// Uniformly random invertible matrix over GF(p).
Matrix random_invertible(const FieldDesc& f, std::size_t n, std::mt19937_64& rng);

/// Validated random algebra over GF(p), reproducible from (dim, field, seed,
/// strategy). CatalogMutate takes a catalog algebra at random admissible
/// parameters (cut down to `dim` by a quotient or a subalgebra when larger)
/// and changes basis at random. Throws LeibnizError when the rejection budget
/// of the derivation extension is exhausted.
LeibnizAlgebra random_algebra(std::size_t dim, const FieldDesc& field, std::uint64_t seed, Strategy strategy);

struct HarnessOptions {
  std::vector<std::string> checks;  // empty = all
  std::uint64_t seed = 1;
  std::size_t count = 1000;  // random instances per (dimension, prime)
  std::vector<std::size_t> dims{3, 4, 5};
  std::vector<std::uint64_t> primes{5, 7};
  bool include_catalog = true;
  bool negative_controls = true;
  unsigned threads = 0;  // 0: LEIBNIZ_LAB_THREADS or 1
  CheckOptions check;
};

struct VerdictRecord {
  std::string check;
  std::string instance;
  Verdict verdict = Verdict::Vacuous;
  std::string detail;
  /// Replayable witness document for Fail and Recorded verdicts.
  std::optional<std::string> witness;
};

struct CheckStats {
  std::size_t pass = 0, fail = 0, vacuous = 0, recorded = 0, skipped = 0;
  std::size_t hits() const { return pass + fail + recorded; }
};

/// File name for the witness of a record, unique per (check, instance).
std::string witness_file_name(const VerdictRecord& r);

struct HarnessReport {
  std::vector<VerdictRecord> records;  // sorted by (check, instance)
  std::map<std::string, CheckStats> stats;
  std::map<std::string, std::size_t> minimum_hits;
  std::map<std::string, std::size_t> theorem_cases;  // "i", "ii", "iii"
  std::vector<FiliformRecord> filiform;
  std::map<std::string, std::size_t> generated, rejected;  // by strategy
  std::size_t instances = 0;
  /// Characteristic-2 control: the codimension-one check (Thm2.1) must fail on Ex2.2.
  std::optional<bool> negative_control_failed_as_required;

  std::size_t failures() const;
  /// Checks whose non-vacuous hits fall short of the configured minimum.
  std::vector<std::string> unmet_minimums() const;
  bool ok() const;
  /// One line per record: check_id, instance_id, verdict, witness_ref.
  std::string verdict_log() const;
  std::string summary() const;
  std::string filiform_table() const;
};

unsigned worker_threads();
HarnessReport run_harness(const HarnessOptions& opt);

}  // namespace leibniz
