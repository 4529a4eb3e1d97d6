#pragma once

#include <cstddef>
#include <vector>

#include "conespec/rational.hpp"

namespace conespec {

enum class LpSense { LessEqual, GreaterEqual, Equal };
enum class LpGoal { Minimize, Maximize };

struct LpConstraint {
  std::vector<Rational> coeffs;
  LpSense sense = LpSense::GreaterEqual;
  Rational rhs{0};
};

/// Variables are free unless listed in `nonnegative`.
struct RationalLP {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
  LpGoal goal = LpGoal::Minimize;
  std::vector<bool> nonnegative;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value{0};
  std::vector<Rational> point;
};

struct LpLimits {
  /// Bound on tableau cells (rows × columns); SizeLimit beyond it.
  std::size_t max_cells = 8'000'000;
};

/// Dense two-phase simplex over exact rationals with Bland's rule.
/// An optimal point satisfies every constraint exactly.
LpResult lp_solve(const RationalLP& lp, const LpLimits& limits = {});

}  // namespace conespec
