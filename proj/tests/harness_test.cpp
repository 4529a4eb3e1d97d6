#include <gtest/gtest.h>

#include <cstdlib>

#include "conespec/harness.hpp"

using namespace conespec;

namespace {

HarnessConfig config(ConeKind kind, std::map<std::string, int> params, unsigned workers) {
  HarnessConfig c;
  c.cone = normalize({kind, std::move(params)});
  c.samples = 200;
  c.seed = 5;
  c.workers = workers;
  return c;
}

}  // namespace

TEST(Harness, AllConesPass) {
  for (const auto& c : {config(ConeKind::Horn, {{"n", 3}}, 1), config(ConeKind::LRmn, {{"m", 2}, {"n", 2}}, 1),
                        config(ConeKind::A, {{"p", 2}, {"q", 2}}, 1), config(ConeKind::S, {{"p", 2}, {"q", 1}}, 1),
                        config(ConeKind::T, {{"p", 3}, {"q", 1}}, 1), config(ConeKind::Thompson, {{"p", 4}}, 1)}) {
    const auto r = run_harness(c);
    EXPECT_EQ(r.passed, 200u) << to_string(c.cone.kind);
    EXPECT_EQ(r.failed, 0u);
    EXPECT_GE(r.min_slack, -1e-8);
  }
}

TEST(Harness, ResultIndependentOfWorkers) {
  const auto one = run_harness(config(ConeKind::S, {{"p", 2}, {"q", 2}}, 1));
  const auto four = run_harness(config(ConeKind::S, {{"p", 2}, {"q", 2}}, 4));
  EXPECT_EQ(one.passed, four.passed);
  EXPECT_EQ(one.min_slack, four.min_slack);
}

TEST(Harness, TightToleranceCatchesViolations) {
  // A tolerance of -10 demands slack of at least 10 on every row.
  auto c = config(ConeKind::Thompson, {{"p", 3}}, 1);
  c.tol = -10;
  EXPECT_GT(run_harness(c).failed, 0u);
}

TEST(Harness, WorkersFromEnv) {
  setenv("CONESPEC_WORKERS", "3", 1);
  EXPECT_EQ(workers_from_env(), 3u);
  unsetenv("CONESPEC_WORKERS");
  EXPECT_EQ(workers_from_env(), 1u);
}
