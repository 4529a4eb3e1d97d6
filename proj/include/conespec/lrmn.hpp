#pragma once

#include <span>
#include <vector>

#include "conespec/combinatorics.hpp"
#include "conespec/cone.hpp"

namespace conespec {

/// A ⊂ [m+n], B ⊊ [m], C ⊊ [n] with #A = #B + #C ≥ 1 and c^{μ(A)}_{μ(B),μ(C)} ≠ 0.
struct LRmnTriple {
  int m;
  int n;
  IndexSubset A;
  IndexSubset B;
  IndexSubset C;
};

/// μ(A), with μ(∅) = ().
Partition mu_or_empty(const IndexSubset& subset);

/// Qualifying triples ordered by #A, then B, C, A lexicographically. With
/// `half_only` only #A <= (m+n)/2 is produced.
std::vector<LRmnTriple> lrmn_triples(int m, int n, bool c1_only, bool half_only);

struct LRmnOptions {
  bool c1_only = false;
  /// Emit every triple instead of the half list plus dual rows.
  bool full = false;
  bool chamber = false;
};

/// Blocks x (m+n), y (m), z (n): trace equality, 2(m+n) interlacing rows, one
/// row |x|_A - |y|_B - |z|_C ≥ 0 per triple (and, in the default half form,
/// the dual row |y|_{B^o} + |z|_{C^o} - |x|_{A^o} ≥ 0).
ConeDescription lrmn_description(int m, int n, const LRmnOptions& options = {});

const ConeDescription& lrmn_cached(int m, int n);

/// (x, y, z) ∈ LR(m, n) for x of length m+n, y of length m, z of length n.
Verdict lrmn_member(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> z);
Verdict lrmn_member(std::span<const double> x, std::span<const double> y, std::span<const double> z, double tol);

}  // namespace conespec
