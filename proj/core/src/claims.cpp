#include "nijcheck/claims.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "nijcheck/acs_catalog.hpp"
#include "nijcheck/nijenhuis.hpp"
#include "nijcheck/parallel.hpp"
#include "nijcheck/round_geometry.hpp"
#include "nijcheck/version.hpp"

namespace nijcheck {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(ResidualUnit u) {
  switch (u) {
    case ResidualUnit::GNorm:
      return "g-norm";
    case ResidualUnit::SupNorm:
      return "sup-norm";
    case ResidualUnit::Absolute:
      return "abs";
  }
  return "sup-norm";
}

Verdict classify(double max_residual, std::size_t points_evaluated, const Tolerances& tol) {
  if (points_evaluated == 0) return Verdict::Inconclusive;
  if (max_residual < tol.hold) return Verdict::Holds;
  if (max_residual > tol.fail) return Verdict::Fails;
  return Verdict::Inconclusive;
}

// --- pointwise residuals ----------------------------------------------------

namespace residual {

namespace {

void require_away_from_origin(const ChartPoint& p, double delta_ball) {
  if (norm(p.x) < delta_ball) throw OriginSingularity("claim needs |x| >= delta_ball");
}

double require_xi(const ChartPoint& p, double delta_ring) {
  const ConformalScalars s = conformal_scalars(p, delta_ring);
  if (!s.xi) throw SingularRing("claim needs xi, undefined near |x| = 1");
  return *s.xi;
}

/// (i, k) = x^p d_i J_p^k
Mat radial_contraction(const Array3& d, std::span<const double> x) {
  const std::size_t n = x.size();
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      double s = 0.0;
      for (std::size_t p = 0; p < n; ++p) s += x[p] * d(i, p, k);
      out(i, k) = s;
    }
  return out;
}

double closed_form_scale(std::span<const double> x) {
  const double r2 = squared_radius(x);
  return 2.0 / (r2 * (r2 + 1.0));
}

}  // namespace

double c1(const ChartPoint& p) {
  const std::size_t n = p.dim();
  const AmbientPoint a = chart_to_sphere(p);
  const auto frame = ambient_frame_in_chart(p);
  Vec<double> sum(n, 0.0);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = 0; k < n; ++k) sum[k] += a.y[i] * frame[i][k];
  return g_norm(p, sum);
}

double c2(const Tensor11Field& j, const ChartPoint& p) {
  const std::size_t n = p.dim();
  const ConformalScalars s = conformal_scalars(p);
  const Mat jm = j(p);
  Vec<double> first(n), second(n);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = s.mu * p.x[i] * s.nu;
    second[i] = (1.0 - s.mu) * s.nu * p.x[i];
  }
  const Vec<double> a = apply_at(jm, first);
  const Vec<double> b = apply_at(jm, second);
  Vec<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a[k] + b[k];
  return g_norm(p, v);
}

double c3(const Tensor11Field& j, const ChartPoint& p) {
  return g_norm(p, apply_at(j(p), p.x));
}

Mat c4a(const Tensor11Field& j, const ChartPoint& p) {
  const Mat jm = j(p);
  const Mat radial = radial_contraction(j.partials(p), p.x);
  const double mu = conformal_mu<double>(p.x);
  const double r2 = squared_radius<double>(p.x);
  Mat r = jm + radial;
  Mat scaled = jm;
  scaled *= mu * r2;
  return r - scaled;
}

Mat c4b(const Tensor11Field& j, const ChartPoint& p, double delta_ring) {
  const double xi = require_xi(p, delta_ring);
  Mat rhs = radial_contraction(j.partials(p), p.x);
  rhs *= xi;
  return j(p) - rhs;
}

Array3 closed_form_antisymmetric_partials(const Mat& j, std::span<const double> x) {
  const std::size_t n = x.size();
  const double c = closed_form_scale(x);
  Array3 out(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k) out(p, jj, k) = c * (-x[p] * j(jj, k) + x[jj] * j(p, k));
  return out;
}

Array3 closed_form_nijenhuis(const Mat& j, std::span<const double> x) {
  const std::size_t n = x.size();
  const double c = closed_form_scale(x);
  // xj[i] = x^p J_i^p, contracted as written over the upper index.
  Vec<double> xj(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p) xj[i] += x[p] * j(i, p);
  Array3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k) {
        double s = xj[jj] * j(i, k) - xj[i] * j(jj, k);
        if (jj == k) s += x[i];
        if (i == k) s -= x[jj];
        out(i, jj, k) = c * s;
      }
  return out;
}

Array3 c5(const Tensor11Field& j, const ChartPoint& p, double delta_ball) {
  require_away_from_origin(p, delta_ball);
  const std::size_t n = p.dim();
  const Array3 d = j.partials(p);
  const Array3 rhs = closed_form_antisymmetric_partials(j(p), p.x);
  Array3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) out(a, b, k) = (d(a, b, k) - d(b, a, k)) - rhs(a, b, k);
  return out;
}

Array3 c6(const Tensor11Field& j, const ChartPoint& p, double delta_ball) {
  require_away_from_origin(p, delta_ball);
  const std::size_t n = p.dim();
  const Array3 lhs = nijenhuis_coordinate(j, p).components;
  const Array3 rhs = closed_form_nijenhuis(j(p), p.x);
  Array3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) out(a, b, k) = lhs(a, b, k) - rhs(a, b, k);
  return out;
}

double c8(const Tensor11Field& j, const ChartPoint& p) {
  const Array3 coord = nijenhuis_coordinate(j, p).components;
  const Array3 brk = nijenhuis_bracket_components(j, p).components;
  double dev = 0.0;
  for (std::size_t k = 0; k < coord.data().size(); ++k)
    dev = std::max(dev, std::abs(coord.data()[k] - brk.data()[k]));
  return dev;
}

Array3 c9(const Tensor11Field& j, const ChartPoint& p, double fd_step, double delta_ring) {
  const double xi = require_xi(p, delta_ring);
  const std::size_t n = p.dim();
  const auto& x = p.x;
  const Array3 d = j.partials(p);
  // dd[a * n + b] = d_a d_b J
  std::vector<Mat> dd(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      dd[a * n + b] = j.second_partial_fd(p, a, b, fd_step);
      dd[b * n + a] = dd[a * n + b];
    }
  const Mat radial = radial_contraction(d, x);  // (jj, k) = x^q d_jj J_q^k
  const double shift = (xi - 1.0) * (xi - 1.0);
  Array3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Mat& second = dd[a * n + b];
      for (std::size_t k = 0; k < n; ++k) {
        double tail = 0.0;
        for (std::size_t q = 0; q < n; ++q) tail += x[q] * second(q, k);
        const double rhs = -shift * x[a] * radial(b, k) + xi * d(b, a, k) + xi * tail;
        out(a, b, k) = d(a, b, k) - rhs;
      }
    }
  return out;
}

}  // namespace residual

// --- C7 ---------------------------------------------------------------------

double stated_trace_sum_n_squared(std::size_t n) {
  const double nn = static_cast<double>(n);
  return 2.0 * (2.0 - nn) / (nn * (nn * nn + 1.0));
}

double stated_trace_sum_x_squared(std::size_t n) {
  const double nn = static_cast<double>(n);
  return 2.0 * (2.0 - nn) / (nn * (nn + 1.0));
}

double closed_form_trace_sum(const Mat& j) {
  const std::size_t n = j.rows();
  const Vec<double> ones(n, 1.0);
  const Array3 rhs = residual::closed_form_nijenhuis(j, ones);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj) s += rhs(i, jj, i);
  return s;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step so neighbouring indices give unrelated streams
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double inf_norm(const Mat& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double sum = 0.0;
    for (double v : m.row(r)) sum += std::abs(v);
    best = std::max(best, sum);
  }
  return best;
}

Mat random_structure_from(std::size_t n, std::mt19937_64& rng) {
  // Conjugators are redrawn until cond_inf(S) <= 50: a nearly singular S makes
  // |J| large and J^2 + I sits at eps |J|^2 instead of rounding level.
  constexpr double kMaxCondition = 50.0;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Mat s = Mat::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) += 0.3 * gauss(rng);
    const Mat s_inv = inverse(s);
    if (inf_norm(s) * inf_norm(s_inv) <= kMaxCondition) return s * standard_block_structure(n) * s_inv;
  }
}

}  // namespace

Mat random_complex_structure(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_structure_from(n, rng);
}

TraceSumValues trace_sum_values(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n == 0 || n % 2 != 0) throw DimensionMismatch("trace sum needs an even dimension");
  TraceSumValues v;
  v.trials = trials;
  v.stated_n_squared = stated_trace_sum_n_squared(n);
  v.stated_x_squared = stated_trace_sum_x_squared(n);
  double lo = 0.0, hi = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double s = closed_form_trace_sum(random_complex_structure(n, mix_seed(seed, t)));
    if (t == 0) {
      v.independent_sum = s;
      lo = hi = s;
    }
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  v.spread = hi - lo;
  return v;
}

// --- conditional substitution check ----------------------------------------

double conditional_nijk_residual(const Mat& j, std::span<const double> x, const Array3& sym) {
  const std::size_t n = x.size();
  const Array3 anti = residual::closed_form_antisymmetric_partials(j, x);
  Array3 d(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k) d(p, jj, k) = sym(p, jj, k) + 0.5 * anti(p, jj, k);
  const Array3 lhs = nijenhuis_from_partials(j, d);
  const Array3 rhs = residual::closed_form_nijenhuis(j, x);
  double r = 0.0;
  for (std::size_t k = 0; k < lhs.data().size(); ++k)
    r = std::max(r, std::abs(lhs.data()[k] - rhs.data()[k]));
  return r;
}

ConditionalSummary conditional_nijk_check(std::size_t n, std::size_t trials, std::uint64_t seed,
                                          bool with_symmetric_part) {
  if (n == 0 || n % 2 != 0) throw DimensionMismatch("conditional check needs an even dimension");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  ConditionalSummary summary;
  summary.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Vec<double> x(n);
    for (double& v : x) v = gauss(rng);
    const double scale = radius(rng) / norm(x);
    for (double& v : x) v *= scale;
    const Mat j = random_structure_from(n, rng);
    Array3 sym(n);
    if (with_symmetric_part) {
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q)
          for (std::size_t k = 0; k < n; ++k) {
            const double v = gauss(rng);
            sym(p, q, k) = v;
            sym(q, p, k) = v;
          }
    }
    Mat sq = j * j;
    sq += Mat::identity(n);
    summary.max_square_residual = std::max(summary.max_square_residual, sup_norm(sq));
    summary.max_residual = std::max(summary.max_residual, conditional_nijk_residual(j, x, sym));
  }
  return summary;
}

// --- claim runners ----------------------------------------------------------

namespace {

/// Pointwise evaluator: residual at a point given (delta_ball, delta_ring).
using PointEval = std::function<double(const ChartPoint&, double, double)>;

struct ClaimSpec {
  std::string id;
  ResidualUnit unit;
  std::string notes;
};

ClaimResult run_pointwise(const ClaimSpec& spec, const std::string& structure,
                          const std::vector<ChartPoint>& points, const SamplePlan& plan,
                          const ClaimOptions& opts, const PointEval& eval) {
  struct Outcome {
    std::optional<double> residual;
    std::string excluded;
  };
  std::vector<Outcome> outcomes(points.size());
  parallel_for(points.size(), [&](std::size_t idx) {
    Outcome o;
    try {
      o.residual = eval(points[idx], plan.delta_ball, plan.delta_ring);
    } catch (const SingularRing&) {
      o.excluded = "singular_ring";
    } catch (const OriginSingularity&) {
      o.excluded = "origin";
    } catch (const OutOfDomain&) {
      o.excluded = "out_of_domain";
    }
    outcomes[idx] = std::move(o);
  });

  ClaimResult r;
  r.claim_id = spec.id;
  r.structure = structure;
  r.unit = spec.unit;
  r.notes = spec.notes;
  double sum = 0.0;
  for (const Outcome& o : outcomes) {
    if (o.residual) {
      if (!std::isfinite(*o.residual)) throw NumericalFailure(spec.id + ": non-finite residual");
      ++r.points_evaluated;
      sum += *o.residual;
      r.max_residual = std::max(r.max_residual, *o.residual);
    } else {
      ++r.points_excluded;
      ++r.exclusions[o.excluded];
    }
  }
  r.mean_residual = r.points_evaluated ? sum / static_cast<double>(r.points_evaluated) : 0.0;
  r.verdict = classify(r.max_residual, r.points_evaluated, opts.tol);

  if (plan.continuity_sweep) {
    const double inv = 1.0 / std::sqrt(static_cast<double>(plan.dim));
    for (double radius : continuity_sweep_radii()) {
      ChartPoint p{Vec<double>(plan.dim, radius * inv), Chart::North};
      SweepSample s{radius, std::nullopt};
      try {
        const double v = eval(p, plan.delta_ball, 0.0);
        if (std::isfinite(v)) s.residual = v;
      } catch (const SingularRing&) {
      } catch (const OriginSingularity&) {
      } catch (const OutOfDomain&) {
      }
      r.sweep.push_back(s);
    }
  }
  return r;
}

std::vector<ChartPoint> points_for(const Tensor11Field& j, const SamplePlan& plan) {
  return sample_points(plan_for(j, plan));
}

ClaimResult c1_on(const std::string& structure, const std::vector<ChartPoint>& pts,
                  const SamplePlan& plan, const ClaimOptions& opts) {
  return run_pointwise({"C1", ResidualUnit::GNorm,
                        "structure-independent; ambient fields read in the chart sense"},
                       structure, pts, plan, opts,
                       [](const ChartPoint& p, double, double) { return residual::c1(p); });
}

ClaimResult c2_on(const Tensor11Field& j, const std::vector<ChartPoint>& pts,
                  const SamplePlan& plan, const ClaimOptions& opts) {
  return run_pointwise({"C2", ResidualUnit::GNorm, ""}, j.name(), pts, plan, opts,
                       [&](const ChartPoint& p, double, double) { return residual::c2(j, p); });
}

ClaimResult c3_on(const Tensor11Field& j, const std::vector<ChartPoint>& pts,
                  const SamplePlan& plan, const ClaimOptions& opts) {
  return run_pointwise({"C3", ResidualUnit::GNorm, ""}, j.name(), pts, plan, opts,
                       [&](const ChartPoint& p, double, double) { return residual::c3(j, p); });
}

std::vector<ClaimResult> c4_on(const Tensor11Field& j, const std::vector<ChartPoint>& pts,
                               const SamplePlan& plan, const ClaimOptions& opts) {
  std::vector<ClaimResult> out;
  out.push_back(run_pointwise({"C4a", ResidualUnit::SupNorm, ""}, j.name(), pts, plan, opts,
                              [&](const ChartPoint& p, double, double) {
                                return sup_norm(residual::c4a(j, p));
                              }));
  out.push_back(run_pointwise({"C4b", ResidualUnit::SupNorm, "ring |x| = 1 excluded"}, j.name(),
                              pts, plan, opts, [&](const ChartPoint& p, double, double ring) {
                                return sup_norm(residual::c4b(j, p, ring));
                              }));
  return out;
}

ClaimResult c5_on(const Tensor11Field& j, const std::vector<ChartPoint>& pts,
                  const SamplePlan& plan, const ClaimOptions& opts) {
  return run_pointwise({"C5", ResidualUnit::SupNorm, "origin excluded"}, j.name(), pts, plan,
                       opts, [&](const ChartPoint& p, double ball, double) {
                         return sup_norm(residual::c5(j, p, ball).data());
                       });
}

ClaimResult c6_on(const Tensor11Field& j, const std::vector<ChartPoint>& pts,
                  const SamplePlan& plan, const ClaimOptions& opts) {
  return run_pointwise(
      {"C6", ResidualUnit::SupNorm,
       "x^p J_j^p contracted as written (Euclidean sum over p); origin excluded"},
      j.name(), pts, plan, opts, [&](const ChartPoint& p, double ball, double) {
        return sup_norm(residual::c6(j, p, ball).data());
      });
}

ClaimResult c8_on(const Tensor11Field& j, const std::vector<ChartPoint>& pts,
                  const SamplePlan& plan, const ClaimOptions& opts) {
  return run_pointwise({"C8", ResidualUnit::SupNorm, "coordinate vs bracket components"},
                       j.name(), pts, plan, opts,
                       [&](const ChartPoint& p, double, double) { return residual::c8(j, p); });
}

ClaimResult c9_on(const Tensor11Field& j, const std::vector<ChartPoint>& pts,
                  const SamplePlan& plan, const ClaimOptions& opts) {
  return run_pointwise({"C9", ResidualUnit::SupNorm,
                        "second derivatives by central differences; ring |x| = 1 excluded"},
                       j.name(), pts, plan, opts, [&](const ChartPoint& p, double, double ring) {
                         return sup_norm(residual::c9(j, p, opts.fd_step, ring).data());
                       });
}

}  // namespace

ClaimResult run_claim_c1(const SamplePlan& plan, const ClaimOptions& opts) {
  return c1_on("none", sample_points(plan), plan, opts);
}

ClaimResult run_claim_c2(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts) {
  return c2_on(j, points_for(j, plan), plan_for(j, plan), opts);
}

ClaimResult run_claim_c3(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts) {
  return c3_on(j, points_for(j, plan), plan_for(j, plan), opts);
}

std::vector<ClaimResult> run_claim_c4(const Tensor11Field& j, const SamplePlan& plan,
                                      const ClaimOptions& opts) {
  return c4_on(j, points_for(j, plan), plan_for(j, plan), opts);
}

ClaimResult run_claim_c5(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts) {
  return c5_on(j, points_for(j, plan), plan_for(j, plan), opts);
}

ClaimResult run_claim_c6(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts) {
  return c6_on(j, points_for(j, plan), plan_for(j, plan), opts);
}

ClaimResult run_claim_c7(std::size_t n, std::size_t trials, std::uint64_t seed,
                         const ClaimOptions& opts) {
  const TraceSumValues v = trace_sum_values(n, trials, seed);
  ClaimResult r;
  r.claim_id = "C7";
  r.structure = "random constrained J";
  r.unit = ResidualUnit::Absolute;
  r.points_evaluated = trials;
  if (trials > 0) {
    const double diff_a = std::abs(v.independent_sum - v.stated_n_squared);
    const double diff_b = std::abs(v.independent_sum - v.stated_x_squared);
    r.max_residual = std::min(diff_a, diff_b);
    r.mean_residual = r.max_residual;
    r.values["independent_sum"] = v.independent_sum;
    r.values["independent_spread"] = v.spread;
    r.values["abs_diff_n_squared"] = diff_a;
    r.values["abs_diff_x_squared"] = diff_b;
  }
  r.values["stated_n_squared"] = v.stated_n_squared;
  r.values["stated_x_squared"] = v.stated_x_squared;
  r.verdict = classify(r.max_residual, r.points_evaluated, opts.tol);
  std::ostringstream notes;
  notes << "x = (1,...,1), n = " << n << "; each trial draws J = S J_block S^-1; residual is the "
        << "distance to the nearer reading of |n|^2 (n^2 or |x|^2 = n)";
  r.notes = notes.str();
  return r;
}

ClaimResult run_claim_c8(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts) {
  return c8_on(j, points_for(j, plan), plan_for(j, plan), opts);
}

ClaimResult run_claim_c9(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts) {
  return c9_on(j, points_for(j, plan), plan_for(j, plan), opts);
}

ChainReport chain_report(const Tensor11Field& j, const SamplePlan& requested,
                         const ClaimOptions& opts) {
  const SamplePlan plan = plan_for(j, requested);
  const std::vector<ChartPoint> pts = sample_points(plan);
  ChainReport report;
  report.structure = j.name();
  report.dim = j.dim();
  report.seed = plan.seed;
  report.points = plan.count;
  report.tol = opts.tol;
  report.fd_step = opts.fd_step;
  report.plan = plan;
  report.library_version = kLibraryVersion;

  report.claims.push_back(c1_on(j.name(), pts, plan, opts));
  report.claims.push_back(c2_on(j, pts, plan, opts));
  report.claims.push_back(c3_on(j, pts, plan, opts));
  for (ClaimResult& r : c4_on(j, pts, plan, opts)) report.claims.push_back(std::move(r));
  report.claims.push_back(c5_on(j, pts, plan, opts));
  report.claims.push_back(c6_on(j, pts, plan, opts));
  ClaimResult c7 = run_claim_c7(j.dim(), plan.count, plan.seed, opts);
  c7.structure = j.name();
  report.claims.push_back(std::move(c7));
  report.claims.push_back(c8_on(j, pts, plan, opts));
  report.claims.push_back(c9_on(j, pts, plan, opts));

  for (const ClaimResult& r : report.claims) {
    if (r.verdict == Verdict::Fails) {
      report.first_break = r.claim_id;
      break;
    }
  }
  return report;
}

}  // namespace nijcheck
