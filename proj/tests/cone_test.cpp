#include <gtest/gtest.h>

#include "conespec/cone.hpp"
#include "support.hpp"

using namespace conespec;

namespace {

ConeDescription two_blocks() {
  return ConeDescription("demo", {{"lambda", "λ", 4, ChamberKind::Sorted, true},
                                  {"s", "s", 2, ChamberKind::SortedNonneg, false}});
}

}  // namespace

TEST(Canonicalize, DividesByGcd) {
  const auto row = canonicalize({{2, -4, 6}, Relation::GreaterEqual, ""});
  EXPECT_EQ(row.coeffs, (std::vector<std::int64_t>{1, -2, 3}));
  const auto eq = canonicalize({{-3, 6, 0}, Relation::Equal, ""});
  EXPECT_EQ(eq.coeffs, (std::vector<std::int64_t>{1, -2, 0}));
  EXPECT_TRUE(is_zero(canonicalize({{0, 0}, Relation::GreaterEqual, ""})));
}

TEST(ConeDescription, RejectsDuplicatesAndZeroRows) {
  auto desc = two_blocks();
  EXPECT_TRUE(desc.add_inequality({1, 0, 0, -1, -2, 0}));
  EXPECT_FALSE(desc.add_inequality({2, 0, 0, -2, -4, 0}));
  EXPECT_FALSE(desc.add_inequality({0, 0, 0, 0, 0, 0}));
  EXPECT_THROW(desc.add_inequality({1, 2}), Error);
  EXPECT_EQ(desc.inequalities().size(), 1u);
}

TEST(ConeDescription, RendersDisplayForm) {
  auto desc = two_blocks();
  desc.add_inequality({1, 1, -1, -1, -2, -2});
  desc.add_inequality({1, 0, 0, -1, -2, 0});
  EXPECT_EQ(desc.render(desc.inequalities()[0]), "λ1 + λ2 − λ3 − λ4 ≥ 2s1 + 2s2");
  EXPECT_EQ(desc.render(desc.inequalities()[1]), "λ1 − λ4 ≥ 2s1");
  auto single = two_blocks();
  single.add_inequality({0, 0, 0, 0, -1, 1});
  EXPECT_EQ(single.render(single.inequalities()[0]), "s2 ≥ s1");
}

TEST(ConeDescription, ChamberRows) {
  const auto desc = two_blocks();
  const auto rows = desc.chamber_rows();
  // λ: 3 ordering rows; s: one ordering row and s2 ≥ 0.
  EXPECT_EQ(rows.size(), 5u);
  for (const auto& row : rows) EXPECT_TRUE(implied_by_chamber(desc, row));
}

TEST(ImpliedByChamber, PrefixSums) {
  const auto desc = two_blocks();
  // λ1 - λ4 ≥ 0 follows from ordering; λ1 ≥ 0 does not (λ may be negative).
  EXPECT_TRUE(implied_by_chamber(desc, {{1, 0, 0, -1, 0, 0}, Relation::GreaterEqual, ""}));
  EXPECT_FALSE(implied_by_chamber(desc, {{1, 0, 0, 0, 0, 0}, Relation::GreaterEqual, ""}));
  // s1 ≥ 0 and s1 + s2 ≥ 0 follow; -s1 ≥ 0 does not.
  EXPECT_TRUE(implied_by_chamber(desc, {{0, 0, 0, 0, 1, 0}, Relation::GreaterEqual, ""}));
  EXPECT_TRUE(implied_by_chamber(desc, {{0, 0, 0, 0, 1, 1}, Relation::GreaterEqual, ""}));
  EXPECT_FALSE(implied_by_chamber(desc, {{0, 0, 0, 0, -1, 0}, Relation::GreaterEqual, ""}));
  EXPECT_FALSE(implied_by_chamber(desc, {{1, 0, 0, -1, -1, 0}, Relation::GreaterEqual, ""}));
}

TEST(ConeDescription, WithoutChamberImplied) {
  auto desc = two_blocks();
  desc.add_inequality({1, -1, 0, 0, 0, 0});
  desc.add_inequality({1, 0, 0, -1, -2, 0});
  EXPECT_EQ(desc.without_chamber_implied().inequalities().size(), 1u);
}

TEST(Pullback, ComposesRows) {
  // Cone {(a, b) : a - b ≥ 0} pulled back along v ↦ (v, -v) gives v ≥ 0.
  ConeDescription target("t", {{"a", "a", 1, ChamberKind::Sorted, true}, {"b", "b", 1, ChamberKind::Sorted, false}});
  target.add_inequality({1, -1});
  LinearMap map{{{"v", "v", 1, ChamberKind::SortedNonneg, true}}, target.blocks(), {{1}, {-1}}};
  const auto back = pullback(target, map, "back");
  ASSERT_EQ(back.inequalities().size(), 1u);
  EXPECT_EQ(back.inequalities()[0].coeffs, (std::vector<std::int64_t>{1}));
}

TEST(CheckPoint, ExactAndFloat) {
  auto desc = two_blocks();
  desc.add_inequality({1, 0, 0, -1, -2, 0});
  const std::vector<Rational> inside{1, 0, 0, -1, 1, 0};
  const std::vector<Rational> outside{1, 0, 0, 0, 1, 0};
  EXPECT_TRUE(check_point(desc, std::span<const Rational>(inside)).member);
  const auto fail = check_point(desc, std::span<const Rational>(outside));
  EXPECT_FALSE(fail.member);
  ASSERT_EQ(fail.violated.size(), 1u);
  EXPECT_EQ(make_verdict(desc, fail).violated.front(), "λ1 − λ4 ≥ 2s1");
  const std::vector<double> near{1, 0, 0, -1 + 1e-10, 1, 0};
  EXPECT_TRUE(check_point(desc, std::span<const double>(near), 1e-8).member);
  EXPECT_FALSE(check_point(desc, std::span<const double>(near), 1e-12).member);
  const std::vector<Rational> short_point{1, 2};
  EXPECT_THROW(check_point(desc, std::span<const Rational>(short_point)), Error);
}

TEST(SupportParser, ReadsRows) {
  const auto desc = testing_support::described(two_blocks(), {"lambda1 - lambda4 >= 2s1", "s2 <= s1"});
  EXPECT_EQ(desc.inequalities()[0].coeffs, (std::vector<std::int64_t>{1, 0, 0, -1, -2, 0}));
  EXPECT_EQ(desc.inequalities()[1].coeffs, (std::vector<std::int64_t>{0, 0, 0, 0, 1, -1}));
}
