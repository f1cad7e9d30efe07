#pragma once

// Table regeneration (computed against printed alpha/beta columns) and the
// per-algebra invariant report used by the command line.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/search.hpp"

namespace leibniz {

struct TableRow {
  std::string id;
  int table = 0;
  std::string params;
  std::size_t alpha = 0, beta = 0;
  std::size_t expected_alpha = 0, expected_beta = 0;
  bool match = false;
  /// Recorded explanation when the row does not match (empty otherwise).
  std::string deviation;
};

struct TableReport {
  FieldDesc field;
  std::vector<TableRow> rows;

  std::size_t matches() const;
  std::size_t mismatches() const { return rows.size() - matches(); }
  /// "N rows, M matches, K mismatches".
  std::string summary() const;
  std::string csv() const;
  std::string markdown() const;
};

/// Regenerates the requested tables (1..9) over GF(p) at every parameter
/// sample. Throws FieldError for p < 5 and when a requested row needs i but
/// GF(p) has no square root of -1.
TableReport reproduce_tables(const std::vector<int>& tables, std::uint64_t p);
std::vector<int> all_tables();

struct ReportOptions {
  bool alpha_beta = true;
  bool series = true;
  bool nilradical = true;
};

/// Everything the report shows, as JSON. Parts that the field does not
/// support carry a "status" string instead of a value.
nlohmann::json invariant_json(const LeibnizAlgebra& l, const ReportOptions& opt = {});
std::string invariant_text(const nlohmann::json& report);

}  // namespace leibniz
