#pragma once

// Algebra files: a JSON document holding dim, field, name, the nonzero basis
// products (1-based) and optional parameter values. Scalars are strings in
// the field grammar, so files stay exact.

#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "leibniz/algebra.hpp"

namespace leibniz {

struct AlgebraFile {
  LeibnizAlgebra algebra;
  std::map<std::string, std::string> params;
};

/// Canonical form: keys sorted, products in (i, j) order, zero products and
/// zero coefficients omitted, scalars in lowest terms.
nlohmann::json to_json(const LeibnizAlgebra& l, const std::map<std::string, std::string>& params = {});
nlohmann::json to_json(const FieldDesc& f);
nlohmann::json to_json(const Subspace& u);

/// Throws ParseError on malformed documents and InvalidAlgebra when the
/// products break the identity.
AlgebraFile algebra_from_json(const nlohmann::json& doc);
/// Tensor only, without validation (for reporting violations).
StructureTensor tensor_from_json(const nlohmann::json& doc, std::string* name = nullptr);
FieldDesc field_from_json(const nlohmann::json& doc);

std::string dump_canonical(const nlohmann::json& doc);
/// Throws ParseError when the file is unreadable or not JSON.
nlohmann::json read_json_file(const std::string& path);
AlgebraFile load_algebra(const std::string& path);
void save_algebra(const std::string& path, const LeibnizAlgebra& l, const std::map<std::string, std::string>& params = {});

}  // namespace leibniz
