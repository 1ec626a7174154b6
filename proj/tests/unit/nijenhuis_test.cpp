#include <cmath>

#include <gtest/gtest.h>

#include "nijcheck/acs_catalog.hpp"
#include "nijcheck/nijenhuis.hpp"
#include "nijcheck/sampling.hpp"
#include "oracles.hpp"

namespace nijcheck {
namespace {

// min over 100 seeded points (dim 6, seed 42) of max_ijk |N_ij^k| for the
// octonionic structure. Measured once at 0.69204807656367695 by comparing the
// coordinate and bracket methods, then frozen slightly below as a regression bound.
constexpr double kOctonionicNijenhuisFloor = 0.69;

std::vector<ChartPoint> random_points(std::size_t dim, std::size_t count, std::uint64_t seed,
                                      double r_max = 10.0) {
  SamplePlan plan;
  plan.dim = dim;
  plan.count = count;
  plan.seed = seed;
  plan.r_max = r_max;
  return sample_points(plan);
}

double max_abs(const Array3& a) { return sup_norm(a.data()); }

double max_abs_diff(const Array3& a, const Array3& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

TEST(NijenhuisCoordinate, ConstantStructuresVanish) {
  for (std::size_t n : {2u, 4u, 6u}) {
    const Tensor11Field j = constant_acs(standard_block_structure(n));
    for (const ChartPoint& p : random_points(n, 50, n)) EXPECT_EQ(max_abs(nijenhuis_coordinate(j, p).components), 0.0);
  }
  const Tensor11Field s2 = s2_standard();
  for (const ChartPoint& p : random_points(2, 50, 9)) EXPECT_EQ(max_abs(nijenhuis_coordinate(s2, p).components), 0.0);
}

TEST(NijenhuisCoordinate, ExactlyAntisymmetric) {
  const Tensor11Field j = octonionic_acs_s6();
  for (const ChartPoint& p : random_points(6, 30, 1)) {
    const Array3 n = nijenhuis_coordinate(j, p).components;
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b)
        for (std::size_t c = 0; c < 6; ++c) ASSERT_EQ(n(a, b, c), -n(b, a, c));
  }
}

TEST(NijenhuisCoordinate, MatchesFiniteDifferenceBracketOracle) {
  const Tensor11Field oct = octonionic_acs_s6();
  const Tensor11Field conj = testing::conjugated_block_field(4);
  for (const ChartPoint& p : random_points(6, 40, 2, 4.0))
    ASSERT_LT(max_abs_diff(nijenhuis_coordinate(oct, p).components,
                           testing::brute_force_nijenhuis(oct, p)),
              1e-6);
  for (const ChartPoint& p : random_points(4, 40, 3, 4.0)) {
    const Array3 n = nijenhuis_coordinate(conj, p).components;
    ASSERT_LT(max_abs_diff(n, testing::brute_force_nijenhuis(conj, p)), 1e-6);
  }
}

TEST(NijenhuisCoordinate, ConjugatedFieldIsNotIntegrable) {
  const Tensor11Field conj = testing::conjugated_block_field(4);
  double worst = 0.0;
  for (const ChartPoint& p : random_points(4, 20, 4, 3.0))
    worst = std::max(worst, max_abs(nijenhuis_coordinate(conj, p).components));
  EXPECT_GT(worst, 1e-3);
}

TEST(NijenhuisBracket, SameFieldsGiveZero) {
  const Tensor11Field j = octonionic_acs_s6();
  const auto x = VectorField::from_generic([](auto v) {
    using V = std::remove_cv_t<typename decltype(v)::element_type>;
    Vec<V> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[(i + 1) % v.size()] * v[i] + V(1.0);
    return out;
  });
  for (const ChartPoint& p : random_points(6, 10, 5)) {
    const Vec<double> n = nijenhuis_bracket(j, x, x, p);
    for (double v : n) EXPECT_NEAR(v, 0.0, 1e-12);
  }
}

TEST(NijenhuisBracket, ConstantStructureCoordinateFields) {
  const Tensor11Field j = constant_acs(standard_block_structure(4));
  const ChartPoint p{{0.2, -0.5, 1.3, 0.7}, Chart::North};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const Vec<double> n =
          nijenhuis_bracket(j, VectorField::coordinate(4, a), VectorField::coordinate(4, b), p);
      for (double v : n) EXPECT_EQ(v, 0.0);
    }
}

TEST(NijenhuisBracket, TensorialInFirstArgument) {
  const Tensor11Field j = octonionic_acs_s6();
  const auto x = VectorField::coordinate(6, 1);
  const auto y = VectorField::coordinate(6, 4);
  const auto fx = VectorField::from_generic([](auto v) {
    using V = std::remove_cv_t<typename decltype(v)::element_type>;
    Vec<V> out(v.size(), V(0.0));
    out[1] = V(1.0) + v[0] * v[2] + v[3] * v[3];  // f(x) d_2
    return out;
  });
  for (const ChartPoint& p : random_points(6, 50, 6, 4.0)) {
    const double f = 1.0 + p.x[0] * p.x[2] + p.x[3] * p.x[3];
    const Vec<double> a = nijenhuis_bracket(j, fx, y, p);
    const Vec<double> b = nijenhuis_bracket(j, x, y, p);
    for (std::size_t k = 0; k < 6; ++k) ASSERT_NEAR(a[k], f * b[k], 1e-6);
  }
}

TEST(NijenhuisBracket, CompatibilityWithJ) {
  // N(JX, Y) = -J N(X, Y) for an almost-complex J
  const Tensor11Field j = octonionic_acs_s6();
  for (const ChartPoint& p : random_points(6, 100, 7, 4.0)) {
    const std::size_t a = std::size_t(p.x[0] * 1000.0 + 1000.0) % 6;
    const std::size_t b = (a + 3) % 6;
    const auto x = VectorField::coordinate(6, a);
    const auto y = VectorField::coordinate(6, b);
    const Vec<double> lhs = nijenhuis_bracket(j, apply(j, x, p.chart), y, p);
    const Vec<double> n = nijenhuis_bracket(j, x, y, p);
    const Vec<double> jn = apply_at(j(p), n);
    for (std::size_t k = 0; k < 6; ++k) ASSERT_NEAR(lhs[k], -jn[k], 1e-6);
  }
}

TEST(Crosscheck, S2) {
  SamplePlan plan;
  plan.dim = 2;
  plan.count = 100;
  const CrosscheckReport r = crosscheck(s2_standard(), plan);
  EXPECT_EQ(r.points, 100u);
  EXPECT_LT(r.max_deviation, 1e-10);
  EXPECT_LT(r.max_component, 1e-10);
}

TEST(Crosscheck, OctonionicAgreementAndFrozenFloor) {
  SamplePlan plan;
  plan.dim = 6;
  plan.count = 100;
  plan.seed = 42;
  const CrosscheckReport r = crosscheck(octonionic_acs_s6(), plan);
  EXPECT_LT(r.max_deviation, 1e-6);
  EXPECT_GT(r.min_max_component, 0.01);
  EXPECT_GT(r.min_max_component, kOctonionicNijenhuisFloor);
  ASSERT_EQ(r.g_norms.size(), 100u);
  for (double g : r.g_norms) EXPECT_GT(g, 0.0);
}

TEST(Crosscheck, ConstantGrid) {
  const Tensor11Field g =
      grid_acs(load_grid(std::string(NIJCHECK_TEST_DATA_DIR) + "/constant_s2_grid.csv"));
  SamplePlan plan;
  plan.dim = 2;
  plan.count = 50;
  const CrosscheckReport r = crosscheck(g, plan_for(g, plan));
  EXPECT_EQ(r.points, 50u);
  EXPECT_LT(r.max_component, 1e-8);
}

TEST(Crosscheck, IndependentOfThreadCount) {
  SamplePlan plan;
  plan.dim = 6;
  plan.count = 40;
  setenv("NIJCHECK_THREADS", "1", 1);
  const CrosscheckReport a = crosscheck(octonionic_acs_s6(), plan);
  setenv("NIJCHECK_THREADS", "4", 1);
  const CrosscheckReport b = crosscheck(octonionic_acs_s6(), plan);
  unsetenv("NIJCHECK_THREADS");
  EXPECT_EQ(a.deviations, b.deviations);
  EXPECT_EQ(a.g_norms, b.g_norms);
}

TEST(ChartCovariance, SouthComponentsAreTransportedNorth) {
  const Tensor11Field j = octonionic_acs_s6();
  for (const ChartPoint& p : random_points(6, 50, 8, 4.0)) {
    if (norm(p.x) < 0.05) continue;
    const ChartPoint q = chart_transition(p);
    const Array3 north = nijenhuis_coordinate(j, p).components;
    const Array3 south = nijenhuis_coordinate(j, q).components;
    const Array3 moved = transport_12(north, p);
    ASSERT_LT(max_abs_diff(south, moved), 1e-6 * (1.0 + max_abs(south)));
  }
}

TEST(GNorm, RoundMetricScaling) {
  Array3 n(2);
  n(0, 1, 0) = 3.0;
  n(1, 0, 0) = -3.0;
  n(0, 1, 1) = 4.0;
  n(1, 0, 1) = -4.0;
  // |N|_Euclid = sqrt(2) * 5 ; nu = 1 at |x| = 1 and 5/2 at |x| = 2
  EXPECT_NEAR(nijenhuis_g_norm(n, {{1.0, 0.0}, Chart::North}), 5.0 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(nijenhuis_g_norm(n, {{2.0, 0.0}, Chart::North}), 2.5 * 5.0 * std::sqrt(2.0), 1e-13);
}

}  // namespace
}  // namespace nijcheck
