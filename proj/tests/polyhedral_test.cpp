#include <gtest/gtest.h>

#include <numeric>

#include "conespec/lp.hpp"
#include "conespec/matrix.hpp"
#include "conespec/offdiag.hpp"
#include "conespec/polyhedral.hpp"
#include "support.hpp"

using namespace conespec;

namespace {

ConeDescription plane(const std::vector<std::string>& rows) {
  ConeDescription shape("plane", {{"x", "x", 1, ChamberKind::Sorted, true}, {"y", "y", 1, ChamberKind::Sorted, true}});
  return testing_support::described(shape, rows);
}

ConeDescription line(const std::vector<std::vector<std::int64_t>>& rows) {
  ConeDescription desc("line", {{"x", "x", 1, ChamberKind::Sorted, true}});
  for (const auto& r : rows) desc.add_inequality(r);
  return desc;
}

RationalLP one_var(LpGoal goal, std::vector<LpConstraint> cons) {
  RationalLP lp;
  lp.num_vars = 1;
  lp.objective = {Rational(1)};
  lp.goal = goal;
  lp.constraints = std::move(cons);
  return lp;
}

}  // namespace

TEST(Lp, Examples) {
  const auto bounded = lp_solve(one_var(LpGoal::Maximize, {{{1}, LpSense::LessEqual, 1}, {{1}, LpSense::GreaterEqual, 0}}));
  ASSERT_EQ(bounded.status, LpStatus::Optimal);
  EXPECT_EQ(bounded.value, 1);
  EXPECT_EQ(bounded.point[0], 1);
  EXPECT_EQ(lp_solve(one_var(LpGoal::Maximize, {{{1}, LpSense::GreaterEqual, 0}})).status, LpStatus::Unbounded);
  EXPECT_EQ(lp_solve(one_var(LpGoal::Minimize, {{{1}, LpSense::GreaterEqual, 1}, {{1}, LpSense::LessEqual, 0}})).status,
            LpStatus::Infeasible);
}

TEST(Lp, ExactFractionsAndEqualities) {
  // max x + y s.t. 3x + 2y ≤ 7, x - y = 1/2, x, y ≥ 0.
  RationalLP lp;
  lp.num_vars = 2;
  lp.objective = {1, 1};
  lp.goal = LpGoal::Maximize;
  lp.nonnegative = {true, true};
  lp.constraints = {{{3, 2}, LpSense::LessEqual, 7}, {{1, -1}, LpSense::Equal, Rational(1, 2)}};
  const auto r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.point[0], Rational(8, 5));
  EXPECT_EQ(r.point[1], Rational(11, 10));
  EXPECT_EQ(r.value, Rational(27, 10));
}

TEST(Lp, RedundantEqualitiesAndDegeneracy) {
  // x + y = 1 twice, plus degenerate bounds at the optimum.
  RationalLP lp;
  lp.num_vars = 2;
  lp.objective = {1, 0};
  lp.constraints = {{{1, 1}, LpSense::Equal, 1},
                    {{2, 2}, LpSense::Equal, 2},
                    {{1, 0}, LpSense::GreaterEqual, 0},
                    {{0, 1}, LpSense::LessEqual, 1},
                    {{1, -1}, LpSense::GreaterEqual, -1}};
  const auto r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.point[1], 1);
}

TEST(Lp, PointSatisfiesConstraints) {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    RationalLP lp;
    lp.num_vars = 4;
    for (int j = 0; j < 4; ++j) lp.objective.emplace_back(rng.uniform_int(-5, 5));
    for (int i = 0; i < 7; ++i) {
      LpConstraint c;
      for (int j = 0; j < 4; ++j) c.coeffs.emplace_back(rng.uniform_int(-4, 4));
      c.sense = i % 3 == 0 ? LpSense::GreaterEqual : LpSense::LessEqual;
      c.rhs = Rational(rng.uniform_int(-6, 6), 2);
      lp.constraints.push_back(c);
    }
    for (int j = 0; j < 4; ++j) {
      std::vector<Rational> unit(4);
      unit[static_cast<std::size_t>(j)] = 1;
      lp.constraints.push_back({unit, LpSense::LessEqual, 10});
      lp.constraints.push_back({unit, LpSense::GreaterEqual, -10});
    }
    const auto r = lp_solve(lp);
    if (r.status != LpStatus::Optimal) {
      EXPECT_EQ(r.status, LpStatus::Infeasible);
      continue;
    }
    for (const auto& c : lp.constraints) {
      Rational lhs = 0;
      for (int j = 0; j < 4; ++j) lhs += c.coeffs[static_cast<std::size_t>(j)] * r.point[static_cast<std::size_t>(j)];
      if (c.sense == LpSense::LessEqual) EXPECT_LE(lhs, c.rhs);
      if (c.sense == LpSense::GreaterEqual) EXPECT_GE(lhs, c.rhs);
    }
  }
}

TEST(Lp, SizeLimit) {
  RationalLP lp;
  lp.num_vars = 30;
  lp.objective.assign(30, Rational(0));
  lp.constraints.assign(30, {std::vector<Rational>(30, Rational(1)), LpSense::LessEqual, 1});
  try {
    lp_solve(lp, {100});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(Redundancy, Examples) {
  const auto l = line({{1}, {2}});
  EXPECT_EQ(l.inequalities().size(), 1u);  // 2x ≥ 0 is the same row as x ≥ 0
  const auto p = plane({"x1 >= 0", "y1 >= 0", "x1 + y1 >= 0"});
  EXPECT_FALSE(is_redundant(p, 0).implied);
  EXPECT_FALSE(is_redundant(p, 1).implied);
  const auto third = is_redundant(p, 2);
  ASSERT_TRUE(third.implied);
  ASSERT_TRUE(third.certificate);
  EXPECT_TRUE(check_certificate(p, *third.certificate, p.inequalities()[2].coeffs));
}

TEST(Redundancy, EqualitiesTakePart) {
  auto p = plane({"x1 >= 0", "y1 >= 0"});
  p.add_equality({1, -1});
  // With x = y, each of x ≥ 0 and y ≥ 0 implies the other.
  EXPECT_TRUE(is_redundant(p, 0).implied);
  const auto report = minimize_description(p);
  EXPECT_EQ(report.kept.size(), 1u);
  EXPECT_EQ(report.dropped.size(), 1u);
}

TEST(Redundancy, WitnessViolatesRow) {
  const auto p = plane({"x1 >= 0", "y1 >= 0", "x1 - y1 >= 0"});
  const auto r = is_redundant(p, 2);
  ASSERT_FALSE(r.implied);
  EXPECT_LT(r.witness[0] - r.witness[1], 0);
  EXPECT_GE(r.witness[0], 0);
  EXPECT_GE(r.witness[1], 0);
}

TEST(Minimize, AlreadyMinimal) {
  const auto desc = a_description(2, 2, AMethod::Fflp, true);
  const auto report = minimize_description(desc);
  EXPECT_TRUE(report.dropped.empty());
  EXPECT_EQ(report.kept.size(), desc.inequalities().size());
}

TEST(Minimize, ThreeByThreeKeepsTwentyOne) {
  const auto report = minimize_description(a_description(3, 3, AMethod::Fflp, true), {2, {}});
  EXPECT_EQ(report.kept.size(), 21u);
}

TEST(Minimize, EmbedListReducesToFflpCone) {
  const auto embed = a_description(2, 2, AMethod::Embed, true);
  const auto fflp = a_description(2, 2, AMethod::Fflp, true);
  const auto report = minimize_description(embed);
  EXPECT_EQ(report.kept.size() + report.dropped.size(), embed.inequalities().size());
  EXPECT_TRUE(cones_equal(report.minimized, fflp).equal);
  for (const auto& d : report.dropped) {
    EXPECT_TRUE(check_certificate(embed, d.certificate, embed.inequalities()[d.index].coeffs));
  }
  // The result is irredundant.
  for (std::size_t i = 0; i < report.minimized.inequalities().size(); ++i) {
    EXPECT_FALSE(is_redundant(report.minimized, i).implied);
  }
}

TEST(Minimize, OrderDoesNotChangeTheCone) {
  const auto desc = s_description(2, 1, BlockMethod::Direct, true);
  std::vector<std::size_t> reversed(desc.inequalities().size());
  std::iota(reversed.rbegin(), reversed.rend(), 0);
  const auto forward = minimize_description(desc).minimized;
  const auto backward = minimize_description(desc.subset(reversed)).minimized;
  EXPECT_TRUE(cones_equal(forward, backward).equal);
  EXPECT_TRUE(cones_equal(forward, desc).equal);
}

// Dropped rows hold on points of the kept cone found by random objectives.
TEST(Minimize, DroppedRowsHoldOnKeptCone) {
  const auto desc = s_description(2, 1, BlockMethod::Direct, true);
  const auto report = minimize_description(desc);
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    std::vector<std::int64_t> objective(desc.dimension());
    for (auto& c : objective) c = rng.uniform_int(-5, 5);
    std::vector<std::size_t> all(report.minimized.inequalities().size());
    std::iota(all.begin(), all.end(), 0);
    const auto point = implies(report.minimized, all, objective).witness;
    for (const auto& d : report.dropped) {
      EXPECT_GE(evaluate(desc.inequalities()[d.index], std::span<const Rational>(point)), 0);
    }
  }
}

TEST(ConesEqual, Basics) {
  const auto fflp = a_description(2, 2, AMethod::Fflp, true);
  EXPECT_TRUE(cones_equal(fflp, fflp).equal);
  std::vector<std::size_t> keep{1, 2, 3};
  for (std::size_t i = 4; i < fflp.inequalities().size(); ++i) keep.push_back(i);
  const auto fewer = fflp.subset(keep);
  const auto cmp = cones_equal(fflp, fewer);
  ASSERT_FALSE(cmp.equal);
  EXPECT_FALSE(cmp.in_first);
  EXPECT_TRUE(check_point(fewer, std::span<const Rational>(cmp.witness)).member);
  EXPECT_FALSE(check_point(fflp, std::span<const Rational>(cmp.witness)).member);
  EXPECT_THROW(cones_equal(fflp, a_description(3, 3, AMethod::Fflp)), Error);
}
