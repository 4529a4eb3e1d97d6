#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "conespec/combinatorics.hpp"

namespace conespec {

struct LRQuery {
  Partition lambda;
  Partition mu;
  Partition nu;
};

/// c^λ_{μ,ν}: the number of skew semistandard tableaux of shape λ/μ and
/// content ν whose reverse reading word is a lattice word. Zero whenever
/// |λ| ≠ |μ|+|ν| or μ ⊄ λ. Results are memoized process-wide (thread safe).
std::uint64_t lr_coefficient(const LRQuery& query);
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^λ_{μ,ν} ≠ 0; stops the tableau search at the first witness.
bool lr_nonzero(const LRQuery& query);
/// c^λ_{μ,ν} = 1; stops the tableau search at the second witness.
bool lr_equals_one(const LRQuery& query);

/// Counts LR tableaux but never more than `limit`; bypasses the memo table.
std::uint64_t count_lr_tableaux(const LRQuery& query, std::uint64_t limit);

/// Drops every memoized coefficient.
void clear_lr_cache();
std::size_t lr_cache_size();

struct OracleLimits {
  /// Upper bound on the number of semistandard tableaux enumerated per shape.
  std::size_t max_tableaux = 5'000'000;
};

/// Independent cross-check for lr_coefficient: expands s_μ·s_ν in `num_vars`
/// variables as monomials and peels off Schur polynomials from the top of the
/// lexicographic order. Requires num_vars >= length(μ) + length(ν) and
/// num_vars >= 1; throws ResourceLimit if a shape has too many tableaux.
std::map<Partition, std::uint64_t> schur_product_oracle(const Partition& mu, const Partition& nu,
                                                        int num_vars, const OracleLimits& limits = {});

}  // namespace conespec
