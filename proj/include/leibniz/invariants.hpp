#pragma once

// Structural predicates and distinguished ideals: solvability, nilpotency,
// supersolvability, nilradical, Frattini ideal, chief factors, filiform data.

#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class Certification { Exact, FiniteFieldOnly, Unsupported };
std::string to_string(Certification c);

struct CertifiedFlag {
  bool value = false;
  Certification status = Certification::Exact;
};

bool is_solvable(const LeibnizAlgebra& l);
bool is_nilpotent(const LeibnizAlgebra& l);

/// Reduction of a characteristic-0 algebra modulo p (i maps to the field's
/// designated root). Empty when a denominator vanishes mod p or i is needed
/// and absent.
std::optional<LeibnizAlgebra> reduce_mod(const LeibnizAlgebra& l, std::uint64_t p);
/// Same for a subspace given in characteristic-0 coordinates.
std::optional<Subspace> reduce_subspace_mod(const Subspace& u, std::uint64_t p);

/// Largest nilpotent ideal. Over GF(p) by exhaustive growth; in
/// characteristic 0 from the trace-form radical of the associative algebra
/// generated by the right multiplications, with the result checked to be a
/// nilpotent ideal containing L^2. Throws Unsupported for non-solvable input.
Subspace nilradical(const LeibnizAlgebra& l);

/// A flag of ideals of L, one per dimension. Exact for nilpotent algebras
/// and over GF(p); in characteristic 0 decided on reductions.
CertifiedFlag is_supersolvable(const LeibnizAlgebra& l);

/// Largest ideal inside every maximal subalgebra (GF(p) only).
Subspace frattini_ideal(const LeibnizAlgebra& l);
std::vector<Subspace> maximal_subalgebras(const LeibnizAlgebra& l);

/// A/B is a minimal ideal of L/B. Exhaustive over GF(p); in characteristic 0
/// only for dim(A/B) <= 2, otherwise Unsupported.
bool is_minimal_ideal(const LeibnizAlgebra& l, const Subspace& b, const Subspace& a);

struct FiliformProfile {
  std::size_t p = 0;
  std::size_t k = 0;
  std::vector<std::size_t> series_dims;
  /// L^2 = 0: the defining range is empty.
  bool degenerate = false;
};

/// p-filiform data, or empty when the lower central series does not have
/// the required shape. Throws Unsupported for non-nilpotent input.
std::optional<FiliformProfile> filiform_profile(const LeibnizAlgebra& l);

/// Basis e_1..e_n with [e_i, e_1] = e_(i+1) for p+1 <= i <= n-1, returned as
/// coordinate vectors. Verified before returning; throws LeibnizError when
/// there is no profile or the search fails.
std::vector<Vector> adapted_filiform_basis(const LeibnizAlgebra& l, std::uint64_t seed = 1);

struct InvariantReport {
  CertifiedFlag solvable, nilpotent, supersolvable;
  std::optional<Subspace> nilradical;
  std::optional<Subspace> frattini;
  std::size_t centre_dim = 0;
  std::size_t squares_dim = 0;
  std::vector<std::size_t> derived_dims, lower_dims, upper_dims;
  std::optional<FiliformProfile> filiform;
};

InvariantReport invariant_report(const LeibnizAlgebra& l, bool with_frattini = false);

}  // namespace leibniz
