#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <gtest/gtest.h>

#include "nijcheck/parallel.hpp"
#include "nijcheck/sampling.hpp"
#include "nijcheck/selfcheck.hpp"

namespace nijcheck {
namespace {

class ThreadsEnv : public ::testing::Test {
 protected:
  void TearDown() override { unsetenv("NIJCHECK_THREADS"); }
};

TEST_F(ThreadsEnv, ThreadCountOverride) {
  setenv("NIJCHECK_THREADS", "3", 1);
  EXPECT_EQ(thread_count(), 3u);
  setenv("NIJCHECK_THREADS", "junk", 1);
  EXPECT_GE(thread_count(), 1u);
  setenv("NIJCHECK_THREADS", "0", 1);
  EXPECT_GE(thread_count(), 1u);
}

TEST_F(ThreadsEnv, ParallelForVisitsEveryIndexOnce) {
  for (const char* threads : {"1", "2", "7"}) {
    setenv("NIJCHECK_THREADS", threads, 1);
    std::vector<std::atomic<int>> hits(101);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) ASSERT_EQ(h.load(), 1);
  }
}

TEST_F(ThreadsEnv, ParallelForRethrowsLowestIndex) {
  setenv("NIJCHECK_THREADS", "4", 1);
  try {
    parallel_for(40, [](std::size_t i) {
      if (i == 33 || i == 12) throw std::runtime_error(std::to_string(i));
    });
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "12");
  }
}

TEST(Sampling, DeterministicAndWithinRadiusRange) {
  SamplePlan plan;
  plan.dim = 6;
  plan.count = 300;
  plan.seed = 5;
  plan.r_min = 0.2;
  plan.r_max = 4.0;
  const auto a = sample_points(plan);
  const auto b = sample_points(plan);
  ASSERT_EQ(a.size(), 300u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].x, b[k].x);
    EXPECT_EQ(a[k].chart, Chart::North);
    const double r = norm(a[k].x);
    EXPECT_GE(r, 0.2);
    EXPECT_LE(r, 4.0);
  }
  plan.seed = 6;
  EXPECT_NE(sample_points(plan)[0].x, a[0].x);
}

// Ambient-uniform sampling: the last ambient coordinate of a uniform point on
// S^n has mean 0, so about half the chart points lie inside the unit ball.
TEST(Sampling, AmbientUniformSplitsAtUnitRadius) {
  SamplePlan plan;
  plan.dim = 6;
  plan.count = 4000;
  plan.seed = 8;
  plan.r_max = 1e9;
  std::size_t inside = 0;
  for (const ChartPoint& p : sample_points(plan)) inside += norm(p.x) < 1.0;
  EXPECT_NEAR(double(inside) / 4000.0, 0.5, 0.04);
}

TEST(Sampling, BoxModeStaysInsideMargin) {
  SamplePlan plan;
  plan.dim = 2;
  plan.count = 200;
  plan.box = Box{{0.0, -1.0}, {1.0, 1.0}};
  for (const ChartPoint& p : sample_points(plan)) {
    EXPECT_TRUE(plan.box->contains(p.x, 0.1 - 1e-12)) << p.x[0] << "," << p.x[1];
    EXPECT_GE(p.x[0], 0.1);
    EXPECT_LE(p.x[0], 0.9);
  }
}

TEST(Sampling, InvalidPlansAreConfigErrors) {
  SamplePlan plan;
  plan.r_min = 1e-5;
  EXPECT_THROW(validate_plan(plan), ConfigError);
  plan = SamplePlan{};
  plan.r_max = plan.r_min;
  EXPECT_THROW(validate_plan(plan), ConfigError);
  plan = SamplePlan{};
  plan.box = Box{{0.0}, {1.0}};
  EXPECT_THROW(validate_plan(plan), ConfigError);
  plan = SamplePlan{};
  plan.r_min = 1e6;
  plan.r_max = 1e6 + 1e-9;
  EXPECT_THROW(sample_points(plan), ConfigError);
}

TEST(Sampling, ContinuitySweepRadii) {
  const auto r = continuity_sweep_radii();
  ASSERT_EQ(r.size(), 12u);
  EXPECT_DOUBLE_EQ(r.front(), 0.9);
  EXPECT_DOUBLE_EQ(r.back(), 1.1);
  EXPECT_NEAR(r[5], 1.0 - 1e-6, 1e-18);
  EXPECT_NEAR(r[6], 1.0 + 1e-6, 1e-18);
}

TEST(SelfTest, DefaultPassesAndFaultFails) {
  const auto lines = run_selftest();
  ASSERT_FALSE(lines.empty());
  for (const CheckLine& l : lines) EXPECT_TRUE(l.pass) << l.name << " " << l.residual;
  SelfTestOptions opts;
  opts.inject_fault = true;
  std::size_t failing = 0;
  for (const CheckLine& l : run_selftest(opts)) failing += !l.pass;
  EXPECT_GT(failing, 0u);
}

TEST(SelfTest, KoszulOracleAtOriginVanishes) {
  const Array3 g = koszul_christoffel_fd({Vec<double>(4, 0.0), Chart::North});
  EXPECT_LT(sup_norm(g.data()), 1e-9);
}

}  // namespace
}  // namespace nijcheck
