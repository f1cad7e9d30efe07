// leibniz-lab: algebra files, invariant reports, table regeneration and the
// theorem suite.
//
// Exit codes: 0 success; 1 parse or usage error; 2 invalid algebra (validate)
// or failed run (tables with mismatches, theorems with a FAIL or unmet
// minimum, negative control not triggered).

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "leibniz/catalog.hpp"
#include "leibniz/io.hpp"
#include "leibniz/report.hpp"
#include "leibniz/theorems.hpp"

using namespace leibniz;
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LeibnizError("cannot write " + path.string());
  out << text;
}

// "Q", "Qi", or a prime, optionally written "GF(p)" / "GFp".
FieldDesc parse_field(const std::string& s) {
  if (s == "Q") return FieldDesc::rationals();
  if (s == "Qi") return FieldDesc::gaussian();
  std::string digits;
  for (char c : s)
    if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
  if (digits.empty()) throw ParseError("unknown field '" + s + "'");
  return FieldDesc::prime(std::stoull(digits));
}

int cmd_validate(const std::string& path) {
  const auto doc = read_json_file(path);
  std::string name;
  const auto t = tensor_from_json(doc, &name);
  const auto bad = leibniz_violations(t);
  if (bad.empty()) {
    std::cout << "VALID\n";
    return 0;
  }
  std::cout << fmt::format("INVALID: {} violating triple(s) of [x,[y,z]] = [[x,y],z] - [[x,z],y]\n", bad.size());
  for (const auto& v : bad) {
    std::vector<std::string> lhs, rhs;
    for (const auto& s : v.lhs) lhs.push_back(s.str());
    for (const auto& s : v.rhs) rhs.push_back(s.str());
    std::cout << fmt::format("({},{},{}) lhs [{}] rhs [{}]\n", v.a + 1, v.b + 1, v.c + 1, fmt::join(lhs, ", "),
                             fmt::join(rhs, ", "));
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Leibniz algebras: alpha/beta invariants, tables, theorem checks"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check the Leibniz identity for an algebra file");
  validate->add_option("file", path, "Algebra file (JSON)")->required();

  bool ab = false, series = false, nilrad = false, as_json = false;
  auto* report = app.add_subcommand("report", "Invariant report for an algebra file");
  report->add_option("file", path, "Algebra file (JSON)")->required();
  report->add_flag("--alpha-beta", ab, "alpha(L) and beta(L) with witnesses");
  report->add_flag("--series", series, "Derived, lower and upper central series");
  report->add_flag("--nilradical", nilrad, "Nilradical basis");
  report->add_flag("--json", as_json, "Emit JSON");

  std::vector<int> tables;
  bool all = false;
  std::uint64_t prime = 5;
  std::string out_dir, format = "csv";
  auto* tab = app.add_subcommand("tables", "Regenerate the alpha/beta table columns over GF(p)");
  auto* table_opt = tab->add_option("--table", tables, "Table number (repeatable)")->check(CLI::Range(1, 9));
  tab->add_flag("--all", all, "All tables")->excludes(table_opt);
  tab->add_option("--prime", prime, "Prime p >= 5")->capture_default_str();
  tab->add_option("--out", out_dir, "Directory for table files");
  tab->add_option("--format", format, "csv or md")->check(CLI::IsMember({"csv", "md"}))->capture_default_str();

  HarnessOptions hopt;
  hopt.count = 500;
  std::string suite = "all";
  std::string tout;
  bool quiet = false;
  auto* thm = app.add_subcommand("theorems", "Run the theorem checks over catalog and random instances");
  thm->add_option("--suite", suite, "all, a check id, or negative-controls")->capture_default_str();
  thm->add_option("--seed", hopt.seed, "Random seed")->capture_default_str();
  thm->add_option("--count", hopt.count, "Random instances per (dimension, prime)")->capture_default_str();
  thm->add_option("--dims", hopt.dims, "Dimensions of random instances")->delimiter(',')->check(CLI::Range(2, 6));
  thm->add_option("--primes", hopt.primes, "Primes for random instances")->delimiter(',');
  thm->add_option("--out", tout, "Directory for verdicts.log, summary and witness files");
  thm->add_flag("--quiet", quiet, "Print only the summary");

  std::string id, field = "5", ofile;
  std::vector<std::string> param_args;
  auto* exp = app.add_subcommand("export", "Write a catalog entry as an algebra file");
  exp->add_option("id", id, "Catalog id, e.g. T1.L4 or Ex3.9")->required();
  exp->add_option("--field", field, "Q, Qi, or a prime")->capture_default_str();
  exp->add_option("--param", param_args, "name=value (repeatable)");
  exp->add_option("--out", ofile, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*validate) return cmd_validate(path);

    if (*report) {
      const auto file = load_algebra(path);
      ReportOptions opt;
      if (ab || series || nilrad) opt = {ab, series, nilrad};
      const auto doc = invariant_json(file.algebra, opt);
      std::cout << (as_json ? dump_canonical(doc) : invariant_text(doc));
      return 0;
    }

    if (*tab) {
      if (!all && tables.empty()) throw ParseError("tables: give --table N or --all");
      const auto rep = reproduce_tables(all ? all_tables() : tables, prime);
      const std::string text = format == "md" ? rep.markdown() : rep.csv();
      if (out_dir.empty()) {
        std::cout << text;
      } else {
        for (int t : all ? all_tables() : tables) {
          TableReport part{rep.field, {}};
          for (const auto& r : rep.rows)
            if (r.table == t) part.rows.push_back(r);
          write_file(fs::path(out_dir) / fmt::format("table{}_p{}.{}", t, prime, format),
                     format == "md" ? part.markdown() : part.csv());
        }
      }
      std::cout << rep.summary() << "\n";
      return rep.mismatches() == 0 ? 0 : 2;
    }

    if (*thm) {
      const bool negative_only = suite == "negative-controls";
      if (negative_only) {
        hopt.checks = {"Thm2.1"};
        hopt.count = 0;
        hopt.include_catalog = false;
      } else if (suite != "all") {
        const auto ids = check_ids();
        if (std::find(ids.begin(), ids.end(), suite) == ids.end())
          throw ParseError(fmt::format("unknown suite '{}'; known: all, negative-controls, {}", suite, fmt::join(ids, ", ")));
        hopt.checks = {suite};
        hopt.negative_controls = suite == "Thm2.1";
      }
      auto rep = run_harness(hopt);
      // The control alone exercises nothing else, so hit minimums do not apply.
      if (negative_only) rep.minimum_hits.clear();
      const bool ok = rep.ok();
      const std::string log = rep.verdict_log();
      std::string summary = rep.summary();
      if (!rep.filiform.empty()) summary += "\n" + rep.filiform_table();
      if (!tout.empty()) {
        write_file(fs::path(tout) / "verdicts.log", log);
        write_file(fs::path(tout) / "summary.txt", summary);
        for (const auto& r : rep.records)
          if (r.witness) write_file(fs::path(tout) / "witnesses" / witness_file_name(r), *r.witness);
      } else if (!quiet) {
        std::cout << log;
      }
      std::cout << summary;
      return ok ? 0 : 2;
    }

    if (*exp) {
      const auto f = parse_field(field);
      const auto& e = catalog_entry(id);
      ParamBinding b;
      std::map<std::string, std::string> raw;
      for (const auto& a : param_args) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw ParseError("--param expects name=value, got '" + a + "'");
        b.insert_or_assign(a.substr(0, eq), parse_scalar(a.substr(eq + 1), f));
      }
      for (const auto& name : e.params) {
        if (!b.count(name)) throw ParseError(fmt::format("{} needs --param {}=...", id, name));
        raw[name] = b.at(name).str();
      }
      const auto l = instantiate(e, f, b);
      const std::string text = dump_canonical(to_json(l, raw));
      if (ofile.empty())
        std::cout << text;
      else
        write_file(ofile, text);
      return 0;
    }
  } catch (const InvalidAlgebra& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
