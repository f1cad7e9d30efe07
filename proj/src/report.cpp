#include "leibniz/report.hpp"

#include <fmt/format.h>

#include "leibniz/invariants.hpp"
#include "leibniz/io.hpp"

namespace leibniz {

using nlohmann::json;

std::size_t TableReport::matches() const {
  std::size_t m = 0;
  for (const auto& r : rows) m += r.match;
  return m;
}

std::string TableReport::summary() const {
  return fmt::format("{} rows, {} matches, {} mismatches", rows.size(), matches(), mismatches());
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string TableReport::csv() const {
  std::string out = "id,params,computed_alpha,computed_beta,expected_alpha,expected_beta,match,deviation\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.id, csv_field(r.params), r.alpha, r.beta, r.expected_alpha,
                       r.expected_beta, r.match ? "yes" : "no", csv_field(r.deviation));
  return out;
}

std::string TableReport::markdown() const {
  std::string out = fmt::format("Computed over {}.\n\n", field.str());
  out += "| id | params | alpha | beta | printed alpha | printed beta | match | deviation |\n";
  out += "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    out += fmt::format("| {} | {} | {} | {} | {} | {} | {} | {} |\n", r.id, md_cell(r.params), r.alpha, r.beta,
                       r.expected_alpha, r.expected_beta, r.match ? "yes" : "no", md_cell(r.deviation));
  out += "\n" + summary() + "\n";
  return out;
}

std::vector<int> all_tables() { return {1, 2, 3, 4, 5, 6, 7, 8, 9}; }

TableReport reproduce_tables(const std::vector<int>& tables, std::uint64_t p) {
  if (p < 5)
    throw FieldError(fmt::format("GF({}) is not admissible for the tables: characteristic 2 and 3 are excluded", p));
  TableReport rep;
  rep.field = FieldDesc::prime(p);
  std::vector<const CatalogEntry*> entries;
  for (int t : tables) {
    auto part = table_entries(t);
    if (part.empty()) throw LeibnizError(fmt::format("no table {}", t));
    entries.insert(entries.end(), part.begin(), part.end());
  }
  if (!rep.field.has_imaginary_unit()) {
    std::vector<std::string> need;
    for (const auto* e : entries)
      if (e->needs_i()) need.push_back(e->id);
    if (!need.empty())
      throw FieldError(fmt::format("GF({}) has no square root of -1, needed by {}; use p = 1 mod 4", p,
                                   fmt::join(need, ", ")));
  }
  for (const auto* e : entries) {
    if (!e->has_table_values()) continue;
    for (const auto& b : parameter_samples(*e, rep.field)) {
      const auto r = alpha_beta(instantiate(*e, rep.field, b));
      TableRow row;
      row.id = e->id;
      row.table = e->table;
      row.params = format_params(b);
      row.alpha = r.alpha.dim;
      row.beta = r.beta.dim;
      row.expected_alpha = *e->expected_alpha;
      row.expected_beta = *e->expected_beta;
      row.match = row.alpha == row.expected_alpha && row.beta == row.expected_beta;
      if (!row.match) row.deviation = e->deviation.empty() ? "unexplained" : e->deviation;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

namespace {

json flag_json(const CertifiedFlag& f) { return {{"value", f.value}, {"certification", to_string(f.status)}}; }

json witness_json(const DimensionWitness& w) {
  return {{"dim", w.dim}, {"upper", w.upper}, {"certification", to_string(w.certification)}, {"witness", to_json(w.witness)}};
}

}  // namespace

json invariant_json(const LeibnizAlgebra& l, const ReportOptions& opt) {
  json out;
  out["name"] = l.name();
  out["dim"] = l.dim();
  out["field"] = to_json(l.field());
  const auto inv = invariant_report(l);
  out["centre_dim"] = inv.centre_dim;
  out["squares_ideal_dim"] = inv.squares_dim;
  out["lie"] = inv.squares_dim == 0;
  out["solvable"] = flag_json(inv.solvable);
  out["nilpotent"] = flag_json(inv.nilpotent);
  out["supersolvable"] = flag_json(inv.supersolvable);
  if (opt.series) {
    out["derived_series_dims"] = inv.derived_dims;
    out["lower_central_series_dims"] = inv.lower_dims;
    out["upper_central_series_dims"] = inv.upper_dims;
    if (inv.filiform)
      out["filiform"] = {{"p", inv.filiform->p}, {"k", inv.filiform->k}, {"degenerate", inv.filiform->degenerate}};
  }
  if (opt.nilradical) {
    if (inv.nilradical)
      out["nilradical"] = {{"dim", inv.nilradical->dim()}, {"basis", to_json(*inv.nilradical)}};
    else
      out["nilradical"] = {{"status", inv.solvable.value ? "unsupported over this field" : "not solvable"}};
  }
  if (opt.alpha_beta) {
    try {
      const auto r = alpha_beta(l);
      json ab{{"alpha", witness_json(r.alpha)},
              {"beta", witness_json(r.beta)},
              {"certification", to_string(r.certification)}};
      if (r.unique_beta_maximizer) ab["beta_maximizer_unique"] = *r.unique_beta_maximizer;
      if (!r.reductions.empty()) {
        json red = json::array();
        for (const auto& pr : r.reductions) red.push_back({{"p", pr.p}, {"alpha", pr.alpha}, {"beta", pr.beta}});
        ab["reductions"] = red;
      }
      out["alpha_beta"] = ab;
    } catch (const LeibnizError& e) {
      out["alpha_beta"] = {{"status", e.what()}};
    }
  }
  return out;
}

namespace {

std::string dims(const json& a) {
  std::vector<std::string> parts;
  for (const auto& x : a) parts.push_back(std::to_string(x.get<std::size_t>()));
  return fmt::format("{}", fmt::join(parts, ", "));
}

std::string rows_text(const json& rows) {
  if (rows.empty()) return "    (zero)\n";
  std::string out;
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (const auto& s : r) cells.push_back(s.get<std::string>());
    out += fmt::format("    [{}]\n", fmt::join(cells, ", "));
  }
  return out;
}

std::string flag_text(const json& f) {
  return fmt::format("{} ({})", f["value"].get<bool>() ? "yes" : "no", f["certification"].get<std::string>());
}

}  // namespace

std::string invariant_text(const json& r) {
  std::string out;
  const auto& fld = r["field"];
  std::string field = fld["kind"].get<std::string>();
  if (fld.contains("p")) field += fmt::format("({})", fld["p"].get<std::uint64_t>());
  out += fmt::format("{}: dim {} over {}\n", r["name"].get<std::string>(), r["dim"].get<std::size_t>(), field);
  out += fmt::format("centre dim {}, squares ideal dim {}, Lie: {}\n", r["centre_dim"].get<std::size_t>(),
                     r["squares_ideal_dim"].get<std::size_t>(), r["lie"].get<bool>() ? "yes" : "no");
  out += fmt::format("solvable: {}\nnilpotent: {}\nsupersolvable: {}\n", flag_text(r["solvable"]),
                     flag_text(r["nilpotent"]), flag_text(r["supersolvable"]));
  if (r.contains("derived_series_dims")) {
    out += fmt::format("derived series dims: {}\n", dims(r["derived_series_dims"]));
    out += fmt::format("lower central series dims: {}\n", dims(r["lower_central_series_dims"]));
    out += fmt::format("upper central series dims: {}\n", dims(r["upper_central_series_dims"]));
    if (r.contains("filiform"))
      out += fmt::format("filiform profile: p={} k={}{}\n", r["filiform"]["p"].get<std::size_t>(),
                         r["filiform"]["k"].get<std::size_t>(), r["filiform"]["degenerate"].get<bool>() ? " (degenerate)" : "");
  }
  if (r.contains("nilradical")) {
    const auto& n = r["nilradical"];
    if (n.contains("status"))
      out += fmt::format("nilradical: {}\n", n["status"].get<std::string>());
    else
      out += fmt::format("nilradical: dim {}\n", n["dim"].get<std::size_t>()) + rows_text(n["basis"]);
  }
  if (r.contains("alpha_beta")) {
    const auto& ab = r["alpha_beta"];
    if (ab.contains("status")) {
      out += fmt::format("alpha/beta: {}\n", ab["status"].get<std::string>());
    } else {
      for (const char* part : {"alpha", "beta"}) {
        const auto& w = ab[part];
        out += fmt::format("{} = {} ({})\n", part, w["dim"].get<std::size_t>(), w["certification"].get<std::string>());
        out += rows_text(w["witness"]);
      }
      if (ab.contains("beta_maximizer_unique"))
        out += fmt::format("beta maximizer unique: {}\n", ab["beta_maximizer_unique"].get<bool>() ? "yes" : "no");
      if (ab.contains("reductions"))
        for (const auto& pr : ab["reductions"])
          out += fmt::format("  mod {}: alpha {} beta {}\n", pr["p"].get<std::uint64_t>(), pr["alpha"].get<std::size_t>(),
                             pr["beta"].get<std::size_t>());
    }
  }
  return out;
}

}  // namespace leibniz
