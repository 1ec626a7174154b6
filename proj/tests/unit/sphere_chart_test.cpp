#include <cmath>

#include <gtest/gtest.h>

#include "nijcheck/sampling.hpp"
#include "nijcheck/sphere_chart.hpp"
#include "oracles.hpp"

namespace nijcheck {
namespace {

std::vector<ChartPoint> random_points(std::size_t dim, std::size_t count, std::uint64_t seed,
                                      double r_max = 10.0) {
  SamplePlan plan;
  plan.dim = dim;
  plan.count = count;
  plan.seed = seed;
  plan.r_max = r_max;
  return sample_points(plan);
}

void expect_vec_near(const Vec<double>& a, const Vec<double>& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "component " << i;
}

TEST(ChartToSphere, Examples) {
  expect_vec_near(chart_to_sphere({{0.0, 0.0}, Chart::North}).y, {0.0, 0.0, -1.0}, 0.0);
  expect_vec_near(chart_to_sphere({{1.0, 0.0}, Chart::North}).y, {1.0, 0.0, 0.0}, 0.0);
  const Vec<double> ones(6, 1.0);
  Vec<double> expected(7, 2.0 / 7.0);
  expected[6] = 5.0 / 7.0;
  expect_vec_near(chart_to_sphere({ones, Chart::North}).y, expected, 1e-15);
}

TEST(ChartToSphere, SouthFlipsLastCoordinate) {
  const Vec<double> x{0.3, -0.8, 1.4};
  const auto n = chart_to_sphere({x, Chart::North}).y;
  const auto s = chart_to_sphere({x, Chart::South}).y;
  EXPECT_DOUBLE_EQ(n[3], -s[3]);
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(n[i], s[i]);
}

TEST(SphereToChart, Examples) {
  expect_vec_near(sphere_to_chart({{0.0, 0.0, -1.0}}, Chart::North).x, {0.0, 0.0}, 0.0);
  expect_vec_near(sphere_to_chart({{1.0, 0.0, 0.0}}, Chart::North).x, {1.0, 0.0}, 0.0);
  EXPECT_THROW(sphere_to_chart({{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0}}, Chart::North), PoleSingularity);
  EXPECT_THROW(sphere_to_chart({{0.0, 0.0, -1.0}}, Chart::South), PoleSingularity);
}

TEST(SphereToChart, RoundTripBothCharts) {
  for (std::size_t n : {2u, 4u, 6u}) {
    for (const ChartPoint& p : random_points(n, 200, 11 + n)) {
      for (Chart c : {Chart::North, Chart::South}) {
        const ChartPoint q{p.x, c};
        const ChartPoint back = sphere_to_chart(chart_to_sphere(q), c);
        for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(back.x[i], q.x[i], 1e-12);
      }
    }
  }
}

TEST(ConformalScalars, Examples) {
  const ConformalScalars at0 = conformal_scalars({{0.0, 0.0}, Chart::North});
  EXPECT_DOUBLE_EQ(at0.mu, 2.0);
  EXPECT_DOUBLE_EQ(at0.nu, 0.5);
  ASSERT_TRUE(at0.xi.has_value());
  EXPECT_DOUBLE_EQ(*at0.xi, -1.0);

  const ConformalScalars at3 = conformal_scalars({{1.0, 1.0, 1.0}, Chart::North});
  EXPECT_DOUBLE_EQ(at3.mu, 0.5);
  EXPECT_DOUBLE_EQ(at3.nu, 2.0);
  EXPECT_DOUBLE_EQ(*at3.xi, 2.0);

  const ConformalScalars ring = conformal_scalars({{0.6, 0.8}, Chart::North});
  EXPECT_TRUE(ring.singular_ring());
  EXPECT_FALSE(ring.xi.has_value());
  EXPECT_TRUE(conformal_scalars({{1.0005, 0.0}, Chart::North}).singular_ring());
  EXPECT_FALSE(conformal_scalars({{1.002, 0.0}, Chart::North}).singular_ring());
}

TEST(ConformalScalars, MuTimesNuIsOne) {
  for (const ChartPoint& p : random_points(6, 300, 3)) {
    const ConformalScalars s = conformal_scalars(p);
    ASSERT_NEAR(s.mu * s.nu, 1.0, 1e-15);
  }
}

TEST(EmbeddingJacobian, AtOrigin) {
  const Mat e = embedding_jacobian({{0.0, 0.0}, Chart::North});
  ASSERT_EQ(e.rows(), 3u);
  ASSERT_EQ(e.cols(), 2u);
  expect_vec_near(e.col(0), {2.0, 0.0, 0.0}, 0.0);
  expect_vec_near(e.col(1), {0.0, 2.0, 0.0}, 0.0);
}

TEST(EmbeddingJacobian, MatchesFiniteDifferencesTangencyAndGram) {
  for (std::size_t n : {2u, 6u}) {
    for (const ChartPoint& base : random_points(n, 100, 21, 5.0)) {
      for (Chart c : {Chart::North, Chart::South}) {
        const ChartPoint p{base.x, c};
        const Mat e = embedding_jacobian(p);
        const Mat fd = testing::fd_embedding_jacobian(p);
        Mat diff = e - fd;
        ASSERT_LT(sup_norm(diff), 1e-8);
        const Vec<double> y = chart_to_sphere(p).y;
        for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(dot<double>(y, e.col(i)), 0.0, 1e-10);
        const double mu = conformal_mu<double>(p.x);
        Mat gram = e.transposed() * e;
        Mat expected = Mat::identity(n);
        expected *= mu * mu;
        gram -= expected;
        ASSERT_LT(sup_norm(gram), 1e-10);
      }
    }
  }
}

TEST(AmbientFrame, LiteralFormulaExamples) {
  const auto f = ambient_frame_in_chart({{1.0, 0.0}, Chart::North});
  ASSERT_EQ(f.size(), 3u);
  expect_vec_near(f[0], {1.0, 0.0}, 0.0);
  expect_vec_near(f[2], {1.0, 0.0}, 0.0);
  const auto f0 = ambient_frame_in_chart({{0.0, 0.0, 0.0}, Chart::North});
  expect_vec_near(f0[3], {0.0, 0.0, 0.0}, 0.0);
  expect_vec_near(f0[1], {0.0, 0.5, 0.0}, 0.0);
}

// The chart vectors whose push-forward is the tangential part of each ambient
// basis vector are nu^2 E^T e_i; the literal frame differs from them.
TEST(AmbientFrame, ProjectedFrameSatisfiesPushForwardInvariant) {
  for (const ChartPoint& p : random_points(6, 100, 31, 5.0)) {
    const auto oracle = testing::projected_ambient_frame(p);
    const Mat e = embedding_jacobian(p);
    const Vec<double> y = chart_to_sphere(p).y;
    const double nu = conformal_scalars(p).nu;
    for (std::size_t i = 0; i <= 6; ++i) {
      const Vec<double> pushed = e * std::span<const double>(oracle[i]);
      const Vec<double> target = testing::tangential_part(y, i);
      for (std::size_t r = 0; r <= 6; ++r) ASSERT_NEAR(pushed[r], target[r], 1e-8);
      for (std::size_t a = 0; a < 6; ++a) ASSERT_NEAR(oracle[i][a], nu * nu * e(i, a), 1e-8);
    }
  }
}

TEST(AmbientFrame, LiteralFrameDoesNotSatisfyPushForwardInvariant) {
  double worst = 0.0;
  for (const ChartPoint& p : random_points(6, 100, 31, 5.0)) {
    const auto literal = ambient_frame_in_chart(p);
    const Mat e = embedding_jacobian(p);
    const Vec<double> y = chart_to_sphere(p).y;
    for (std::size_t i = 0; i <= 6; ++i) {
      const Vec<double> pushed = e * std::span<const double>(literal[i]);
      const Vec<double> target = testing::tangential_part(y, i);
      for (std::size_t r = 0; r <= 6; ++r) worst = std::max(worst, std::abs(pushed[r] - target[r]));
    }
  }
  EXPECT_GT(worst, 0.1);
}

TEST(ChartTransition, Examples) {
  const ChartPoint a = chart_transition({{1.0, 0.0}, Chart::North});
  EXPECT_EQ(a.chart, Chart::South);
  expect_vec_near(a.x, {1.0, 0.0}, 0.0);
  const ChartPoint b = chart_transition({{2.0, 0.0}, Chart::North});
  expect_vec_near(b.x, {0.5, 0.0}, 0.0);
  EXPECT_THROW(chart_transition({{0.0, 0.0}, Chart::North}), OriginSingularity);
  EXPECT_THROW(chart_transition({{5e-4, 0.0}, Chart::South}), OriginSingularity);
}

TEST(ChartTransition, SamePointAndInvolution) {
  for (std::size_t n : {2u, 6u}) {
    for (const ChartPoint& p : random_points(n, 200, 41, 10.0)) {
      const ChartPoint q = chart_transition(p);
      expect_vec_near(chart_to_sphere(q).y, chart_to_sphere(p).y, 1e-12);
      const ChartPoint back = chart_transition(q);
      EXPECT_EQ(back.chart, p.chart);
      expect_vec_near(back.x, p.x, 1e-12);
    }
  }
}

TEST(TransitionJacobian, MatchesFiniteDifferences) {
  for (const ChartPoint& p : random_points(4, 50, 51, 4.0)) {
    if (norm(p.x) < 0.1) continue;
    const Mat d = transition_jacobian(p);
    for (std::size_t i = 0; i < 4; ++i) {
      Vec<double> xp = p.x, xm = p.x;
      xp[i] += 1e-6;
      xm[i] -= 1e-6;
      const Vec<double> fp = chart_transition({xp, p.chart}).x;
      const Vec<double> fm = chart_transition({xm, p.chart}).x;
      for (std::size_t a = 0; a < 4; ++a) ASSERT_NEAR(d(a, i), (fp[a] - fm[a]) / 2e-6, 1e-6);
    }
  }
}

TEST(Transport, RoundTripIsIdentity) {
  for (const ChartPoint& p : random_points(4, 50, 61, 4.0)) {
    Mat m(4, 4);
    Array3 t(4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        m(a, b) = std::sin(1.0 + a + 3.0 * b);
        for (std::size_t c = 0; c < 4; ++c) t(a, b, c) = std::cos(a + 2.0 * b - c);
      }
    const ChartPoint q = chart_transition(p);
    Mat back = transport_11(transport_11(m, p), q);
    back -= m;
    ASSERT_LT(sup_norm(back), 1e-10 * (1.0 + squared_radius<double>(p.x)));
    const Array3 t2 = transport_12(transport_12(t, p), q);
    for (std::size_t k = 0; k < t.data().size(); ++k)
      ASSERT_NEAR(t2.data()[k], t.data()[k], 1e-10 * (1.0 + squared_radius<double>(p.x)));
  }
}

}  // namespace
}  // namespace nijcheck
