#pragma once

// alpha(L) and beta(L): the largest dimension of an abelian subalgebra and of
// an abelian ideal. Exact over GF(p); over Q and Q(i) a verified lower bound
// is compared against exact values of reductions modulo several primes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class SearchCertification { Exact, MultiPrime, LowerBoundOnly };
std::string to_string(SearchCertification c);

struct DimensionWitness {
  std::size_t dim = 0;
  Subspace witness;
  /// Smallest value seen over the reductions (equals dim when exact).
  std::size_t upper = 0;
  SearchCertification certification = SearchCertification::Exact;
};

struct PrimeReduction {
  std::uint64_t p = 0;
  std::size_t alpha = 0;
  std::size_t beta = 0;
};

struct AlphaBetaResult {
  DimensionWitness alpha;
  DimensionWitness beta;
  /// Weaker of the two parts.
  SearchCertification certification = SearchCertification::Exact;
  /// Reductions used for the upper bounds (characteristic 0 only).
  std::vector<PrimeReduction> reductions;
  /// Whether the maximal abelian ideal is unique (finite fields only).
  std::optional<bool> unique_beta_maximizer;
  std::uint64_t nodes = 0;
};

/// Largest abelian subalgebra over GF(p) by pruned search. Throws
/// Unsupported over other fields or above the kernel dimension limit.
DimensionWitness alpha_exact(const LeibnizAlgebra& l);
/// Largest abelian ideal over GF(p); `unique` receives whether it is unique.
DimensionWitness beta_exact(const LeibnizAlgebra& l, bool* unique = nullptr);
AlphaBetaResult alpha_beta_exact(const LeibnizAlgebra& l);

/// Constructive abelian subalgebras (ideals_only: abelian ideals), each
/// verified by the core predicates. Works over any field.
std::vector<Subspace> abelian_candidates(const LeibnizAlgebra& l, bool ideals_only, std::uint64_t seed = 1);

/// Smallest primes >= 5 at which l reduces; over Q(i) only p = 1 mod 4.
std::vector<std::uint64_t> good_primes(const LeibnizAlgebra& l, std::size_t count, std::uint64_t bound = 1000);

/// Lower bound from candidates and lifted witnesses, upper bound from the
/// reductions at `prime_count` good primes. A part is MultiPrime when the two
/// bounds meet (a d-dimensional abelian subalgebra or ideal survives reduction
/// at all but finitely many primes, so each reduction bounds the value from
/// above up to that caveat).
AlphaBetaResult alpha_beta_char0(const LeibnizAlgebra& l, std::size_t prime_count = 3);

/// Dispatches on the field.
AlphaBetaResult alpha_beta(const LeibnizAlgebra& l);

}  // namespace leibniz
