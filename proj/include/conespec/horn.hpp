#pragma once

#include <span>
#include <vector>

#include "conespec/combinatorics.hpp"
#include "conespec/cone.hpp"

namespace conespec {

/// (I, J, K) with |I| = |J| = |K| = r inside [n] and c^{μ(K)}_{μ(I),μ(J)} ≠ 0.
struct HornTriple {
  int n;
  int r;
  IndexSubset I;
  IndexSubset J;
  IndexSubset K;
};

/// LR^n_r in lexicographic (I, J, K) order; `c1_only` keeps the triples whose
/// coefficient is exactly one. Throws InvalidRange unless 1 <= r < n.
std::vector<HornTriple> horn_triples(int n, int r, bool c1_only);

struct HornOptions {
  bool c1_only = false;
  bool chamber = false;
};

/// Blocks x, y, z (each of length n) with the trace equality and one row
/// |x|_I + |y|_J - |z|_K ≥ 0 per triple, r = 1 … n-1.
ConeDescription horn_description(int n, const HornOptions& options = {});

/// Shared, lazily built description (thread safe); used by the membership tests.
const ConeDescription& horn_cached(int n, bool c1_only);

/// (x, y, z) ∈ Horn(n). Each vector must be weakly decreasing and of the same length.
Verdict horn_member(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> z);
Verdict horn_member(std::span<const double> x, std::span<const double> y, std::span<const double> z, double tol);

}  // namespace conespec
