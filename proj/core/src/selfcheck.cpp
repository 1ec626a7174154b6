#include "nijcheck/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nijcheck/acs_catalog.hpp"
#include "nijcheck/octonion.hpp"
#include "nijcheck/round_geometry.hpp"
#include "nijcheck/sampling.hpp"

namespace nijcheck {

Array3 koszul_christoffel_fd(const ChartPoint& p, double h) {
  const std::size_t n = p.dim();
  if (h <= 0.0) h = default_first_step(p.x);
  auto metric = [](std::span<const double> x) { return metric_coords<double>(x); };
  std::vector<Mat> dg;  // dg[l](i, j) = d_l g_ij
  for (std::size_t l = 0; l < n; ++l) dg.push_back(central_diff_of(metric, p.x, l, h));
  const Mat ginv = inverse(metric_at(p));
  Array3 gamma(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l)
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        gamma(k, i, j) = 0.5 * s;
      }
  return gamma;
}

namespace {

std::vector<ChartPoint> points(std::size_t dim, std::size_t count, std::uint64_t seed,
                               double r_max) {
  SamplePlan plan;
  plan.dim = dim;
  plan.count = count;
  plan.seed = seed;
  plan.r_max = r_max;
  return sample_points(plan);
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

Octonion random_octonion(std::mt19937_64& rng, bool imaginary = false) {
  std::normal_distribution<double> g(0.0, 1.0);
  Octonion a{};
  for (std::size_t k = imaginary ? 1 : 0; k < 8; ++k) a[k] = g(rng);
  return a;
}

CheckLine line(std::string name, double residual, double tol) {
  return {std::move(name), residual, tol, residual < tol};
}

}  // namespace

std::vector<CheckLine> run_selftest(const SelfTestOptions& opts) {
  std::vector<CheckLine> out;

  for (std::size_t n : {2u, 6u}) {
    const auto pts = points(n, opts.points, opts.seed, 3.0);
    double nabla_g = 0.0, gamma_dev = 0.0;
    for (const ChartPoint& p : pts) {
      nabla_g = std::max(nabla_g, sup_norm(metric_covariant_derivative(p).data()));
      gamma_dev = std::max(gamma_dev, max_abs_diff(christoffel_at(p).data(),
                                                   koszul_christoffel_fd(p).data()));
    }
    if (opts.inject_fault) gamma_dev += 1e-3;
    const std::string suffix = " (n=" + std::to_string(n) + ")";
    out.push_back(line("metric compatibility" + suffix, nabla_g, 1e-8));
    out.push_back(line("christoffel vs koszul" + suffix, gamma_dev, 1e-6));
  }

  for (std::size_t n : {2u, 6u}) {
    const auto pts = points(n, opts.points, opts.seed + 1, 10.0);
    double round_trip = 0.0, involution = 0.0;
    for (const ChartPoint& p : pts) {
      const ChartPoint back = sphere_to_chart(chart_to_sphere(p), Chart::North);
      round_trip = std::max(round_trip, max_abs_diff(back.x, p.x));
      const ChartPoint twice = chart_transition(chart_transition(p));
      involution = std::max(involution, max_abs_diff(twice.x, p.x));
    }
    const std::string suffix = " (n=" + std::to_string(n) + ")";
    out.push_back(line("chart round-trip" + suffix, round_trip, 1e-12));
    out.push_back(line("transition involution" + suffix, involution, 1e-12));
  }

  {
    std::mt19937_64 rng(opts.seed + 2);
    double norm_mult = 0.0, alternative = 0.0, left_square = 0.0;
    for (std::size_t t = 0; t < opts.points; ++t) {
      const Octonion a = random_octonion(rng);
      const Octonion b = random_octonion(rng);
      norm_mult = std::max(norm_mult, std::abs(octonion_norm(octonion_multiply(a, b)) -
                                               octonion_norm(a) * octonion_norm(b)));
      const Octonion lhs = octonion_multiply(a, octonion_multiply(a, b));
      const Octonion rhs = octonion_multiply(octonion_multiply(a, a), b);
      alternative = std::max(alternative, max_abs_diff(lhs, rhs));
      // unit imaginary p and v orthogonal to 1 and p
      Octonion p = random_octonion(rng, true);
      const double pn = octonion_norm(p);
      for (double& v : p) v /= pn;
      Octonion v = random_octonion(rng, true);
      double proj = 0.0;
      for (std::size_t k = 1; k < 8; ++k) proj += v[k] * p[k];
      for (std::size_t k = 1; k < 8; ++k) v[k] -= proj * p[k];
      Octonion twice = octonion_multiply(p, octonion_multiply(p, v));
      for (std::size_t k = 0; k < 8; ++k) twice[k] += v[k];
      left_square = std::max(left_square, sup_norm(twice));
    }
    out.push_back(line("octonion norm multiplicativity", norm_mult, 1e-12));
    out.push_back(line("octonion alternativity", alternative, 1e-12));
    out.push_back(line("octonion left multiplication squares to -1", left_square, 1e-12));
  }

  {
    const Tensor11Field j = octonionic_acs_s6();
    const auto pts = points(6, opts.points, opts.seed + 3, 3.0);
    double square = 0.0, deriv = 0.0;
    for (const ChartPoint& p : pts) {
      Mat sq = j(p) * j(p);
      sq += Mat::identity(6);
      square = std::max(square, sup_norm(sq));
      const Array3 dual = j.partials(p);
      const Array3 fd = j.partials_fd(p);
      for (std::size_t k = 0; k < dual.data().size(); ++k) {
        const double a = dual.data()[k], b = fd.data()[k];
        const double scale = std::max(std::abs(a), 1e-3);
        deriv = std::max(deriv, std::abs(a - b) / scale);
      }
    }
    out.push_back(line("octonionic J^2 = -I", square, 1e-8));
    out.push_back(line("dual vs finite-difference partials (relative)", deriv, 1e-6));
  }
  return out;
}

}  // namespace nijcheck
