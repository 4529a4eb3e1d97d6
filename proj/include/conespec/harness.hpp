#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conespec/catalog.hpp"

namespace conespec {

struct HarnessConfig {
  /// Cone, parameters and method; c1_only, chamber and full are ignored.
  ConeRequest cone;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  /// 0 reads CONESPEC_WORKERS, falling back to one thread.
  unsigned workers = 0;
};

struct HarnessReport {
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Smallest row slack over all samples.
  double min_slack = 0;
  /// Indices of failing samples, ascending.
  std::vector<std::size_t> failures;
};

/// Samples matrices per cone and tests the spectral tuple for membership:
///   horn      (e(X), e(Y), e(X+Y)) for GUE X, Y
///   lrmn      (e(M), e(M11), e(M22)) for GUE M
///   A         (e(X), s(X12)) for GUE X
///   S         (s(X), s(X12), s(X21)) for Ginibre X
///   T         (s(X), s(X11), s(X22)) for Ginibre X
///   thompson  (s(X), s(X')) with X' the Ginibre X minus its last row and column
/// Sample i depends only on (seed, i). Throws NoConvergence from the eigensolver.
HarnessReport run_harness(const HarnessConfig& config);

/// Worker count from CONESPEC_WORKERS, or 1.
unsigned workers_from_env();

}  // namespace conespec
