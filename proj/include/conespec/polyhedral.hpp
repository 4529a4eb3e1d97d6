#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conespec/cone.hpp"
#include "conespec/lp.hpp"
#include "conespec/rational.hpp"

namespace conespec {

/// target = Σ weight·inequality + Σ weight·equality, inequality weights ≥ 0.
/// Indices refer to the description the certificate was issued against.
struct Certificate {
  std::vector<std::pair<std::size_t, Rational>> inequalities;
  std::vector<std::pair<std::size_t, Rational>> equalities;
};

struct Implication {
  bool implied = false;
  /// min target·x over the rows and the box −1 ≤ x_i ≤ 1.
  Rational minimum{0};
  /// Present when implied.
  std::optional<Certificate> certificate;
  /// Box point attaining the minimum; satisfies the rows, violates the target
  /// when not implied.
  std::vector<Rational> witness;
};

/// Tests whether `target ≥ 0` follows from the listed inequality rows of
/// `desc` together with all its equalities.
Implication implies(const ConeDescription& desc, const std::vector<std::size_t>& rows,
                    const std::vector<std::int64_t>& target, const LpLimits& limits = {});

/// Inequality row `row_index` against all the others.
Implication is_redundant(const ConeDescription& desc, std::size_t row_index, const LpLimits& limits = {});

/// True when the certificate reproduces `target` exactly from `desc`.
bool check_certificate(const ConeDescription& desc, const Certificate& cert, const std::vector<std::int64_t>& target);

struct DroppedRow {
  std::size_t index = 0;
  /// Expressed in rows of the minimized description's source (original indices).
  Certificate certificate;
};

struct MinimizationReport {
  std::vector<std::size_t> kept;
  std::vector<DroppedRow> dropped;
  ConeDescription minimized;
};

struct MinimizeOptions {
  /// Threads for the re-test pass; 0 picks the hardware count.
  unsigned workers = 1;
  LpLimits limits;
};

/// Greedy removal in row order, then a re-test of every survivor against
/// a frozen snapshot. Dropped rows carry certificates over the kept rows.
MinimizationReport minimize_description(const ConeDescription& desc, const MinimizeOptions& options = {});

struct ConeComparison {
  bool equal = true;
  /// On failure: a point of `first_cone ? d1 : d2` violating `row` of the other.
  std::vector<Rational> witness;
  bool in_first = true;
  std::string row;
};

/// Mutual implication row by row. Throws DimensionMismatch on differing blocks.
ConeComparison cones_equal(const ConeDescription& d1, const ConeDescription& d2, const LpLimits& limits = {});

}  // namespace conespec
