#pragma once

// The explicitly defined algebras: the nine structure-constant tables with
// their printed alpha/beta columns, the worked examples, and small families.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

using ParamBinding = std::map<std::string, Scalar>;

/// FirstNonZero: the first parameter is nonzero. AnyNonZero: some parameter
/// is nonzero. Equal: the first two parameters agree.
enum class Constraint { None, FirstNonZero, AnyNonZero, Equal };

struct CatalogEntry {
  std::string id;        // "T1.L4", "Ex3.8", ...
  int table = 0;         // 1..9, or 0 for worked examples
  std::string label;     // row label as printed, e.g. "L_4^alpha"
  std::size_t dim = 0;
  std::vector<std::string> params;
  Constraint constraint = Constraint::None;
  /// Products in the catalog notation: "[e1,e2]=e3=-[e2,e1]; [e1,e5]=e1-alpha e2".
  std::string products;
  std::optional<std::size_t> expected_alpha;
  std::optional<std::size_t> expected_beta;
  /// Characteristic the entry is defined for (2 for the char-2 example), 0 = any.
  unsigned required_characteristic = 0;
  /// Printed readings that were rejected in favour of `products`, with why.
  std::vector<std::string> rejected_readings;
  std::string erratum;
  /// Why the computed alpha/beta differ from the printed columns, when they do.
  std::string deviation;

  bool needs_i() const;
  bool has_table_values() const { return expected_alpha.has_value(); }
};

const std::vector<CatalogEntry>& catalog();
/// Throws LeibnizError for an unknown id.
const CatalogEntry& catalog_entry(const std::string& id);
std::vector<const CatalogEntry*> table_entries(int table);

bool admissible(const CatalogEntry& e, const ParamBinding& params);

/// Builds and validates the algebra. Throws LeibnizError on inadmissible
/// parameters, FieldError when i is needed but missing, InvalidAlgebra when
/// the products violate the identity.
LeibnizAlgebra instantiate(const CatalogEntry& e, const FieldDesc& field, const ParamBinding& params = {});

/// Parses a product list in catalog notation into a tensor (no validation).
StructureTensor parse_products(std::size_t dim, const std::string& products, const FieldDesc& field,
                               const ParamBinding& params);

struct Instantiation {
  FieldDesc field;
  ParamBinding params;
};

/// Deterministic sample: each parameter over {0, 1, 2, -1} (full grid up to
/// two parameters, a fixed covering design for four), filtered by
/// admissibility, plus one seeded random point; over GF(5), GF(13) and Q or
/// Q(i) as needed.
std::vector<Instantiation> default_instantiations(const CatalogEntry& e);
/// Same sample restricted to one field.
std::vector<ParamBinding> parameter_samples(const CatalogEntry& e, const FieldDesc& field);

std::string format_params(const ParamBinding& params);

LeibnizAlgebra null_filiform(const FieldDesc& f, std::size_t n);
/// [e1,e2] = -[e2,e1] = e3.
LeibnizAlgebra heisenberg(const FieldDesc& f);

}  // namespace leibniz
