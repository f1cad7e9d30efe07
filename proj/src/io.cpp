#include "leibniz/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace leibniz {

using nlohmann::json;

json to_json(const FieldDesc& f) {
  switch (f.kind()) {
    case FieldKind::Rationals:
      return json{{"kind", "Q"}};
    case FieldKind::GaussianRationals:
      return json{{"kind", "Qi"}};
    case FieldKind::PrimeField:
      return json{{"kind", "GFp"}, {"p", f.p()}};
  }
  return json{};
}

json to_json(const LeibnizAlgebra& l, const std::map<std::string, std::string>& params) {
  const std::size_t n = l.dim();
  json products = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      json coeffs = json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (!l.coeff(i, j, k).is_zero()) coeffs[std::to_string(k + 1)] = l.coeff(i, j, k).str();
      if (!coeffs.empty()) products.push_back(json{{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  json doc{{"dim", n}, {"field", to_json(l.field())}, {"name", l.name()}, {"products", products}};
  if (!params.empty()) doc["params"] = params;
  return doc;
}

json to_json(const Subspace& u) {
  json rows = json::array();
  for (const auto& r : u.basis()) {
    json row = json::array();
    for (const auto& s : r) row.push_back(s.str());
    rows.push_back(row);
  }
  return rows;
}

FieldDesc field_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("field: expected an object with a string \"kind\"");
  const std::string kind = doc["kind"];
  if (kind == "Q") return FieldDesc::rationals();
  if (kind == "Qi") return FieldDesc::gaussian();
  if (kind == "GFp") {
    if (!doc.contains("p") || !doc["p"].is_number_unsigned()) throw ParseError("field GFp: missing prime \"p\"");
    try {
      return FieldDesc::prime(doc["p"].get<std::uint64_t>());
    } catch (const FieldError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError(fmt::format("field: unknown kind \"{}\"", kind));
}

StructureTensor tensor_from_json(const json& doc, std::string* name) {
  if (!doc.is_object()) throw ParseError("algebra file: expected a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) throw ParseError("algebra file: missing \"dim\"");
  const std::size_t n = doc["dim"];
  if (n == 0) throw ParseError("algebra file: dim must be positive");
  if (!doc.contains("field")) throw ParseError("algebra file: missing \"field\"");
  const FieldDesc f = field_from_json(doc["field"]);
  if (name) *name = doc.value("name", std::string{});
  StructureTensor t(f, n);
  if (!doc.contains("products")) return t;
  if (!doc["products"].is_array()) throw ParseError("algebra file: \"products\" must be a list");
  auto index = [n](const json& v, const char* what) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() < 1 || v.get<std::size_t>() > n)
      throw ParseError(fmt::format("algebra file: {} must be an index in [1, {}]", what, n));
    return v.get<std::size_t>() - 1;
  };
  for (const auto& p : doc["products"]) {
    if (!p.is_object() || !p.contains("i") || !p.contains("j") || !p.contains("coeffs"))
      throw ParseError("algebra file: product entries need i, j and coeffs");
    const std::size_t i = index(p["i"], "i"), j = index(p["j"], "j");
    if (!p["coeffs"].is_object()) throw ParseError("algebra file: coeffs must be an object");
    for (const auto& [key, value] : p["coeffs"].items()) {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError(fmt::format("algebra file: bad basis index \"{}\"", key));
      }
      if (k < 1 || k > n) throw ParseError(fmt::format("algebra file: basis index {} out of range", k));
      if (!value.is_string()) throw ParseError("algebra file: scalars must be strings");
      t.at(i, j, k - 1) += parse_scalar(value.get<std::string>(), f);
    }
  }
  return t;
}

AlgebraFile algebra_from_json(const json& doc) {
  std::string name;
  StructureTensor t = tensor_from_json(doc, &name);
  std::map<std::string, std::string> params;
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) throw ParseError("algebra file: params must be an object");
    for (const auto& [key, value] : doc["params"].items()) {
      if (!value.is_string()) throw ParseError("algebra file: parameter values must be strings");
      params[key] = parse_scalar(value.get<std::string>(), t.field()).str();
    }
  }
  return AlgebraFile{validate(std::move(t), name), std::move(params)};
}

std::string dump_canonical(const json& doc) { return doc.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot read {}", path));
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
}

AlgebraFile load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path)); }

void save_algebra(const std::string& path, const LeibnizAlgebra& l, const std::map<std::string, std::string>& params) {
  std::ofstream out(path);
  if (!out) throw LeibnizError(fmt::format("cannot write {}", path));
  out << dump_canonical(to_json(l, params));
}

}  // namespace leibniz
