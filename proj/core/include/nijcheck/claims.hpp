#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nijcheck/field.hpp"
#include "nijcheck/sampling.hpp"

namespace nijcheck {

// Claim registry.
//
// Each claim is one identity in a chain of steps about almost-
// complex structures on round spheres, evaluated pointwise as a residual
// (left side minus right side) against a concrete structure:
//
//   C1   sum_{i<=n+1} y^i d/dy^i = 0 with d/dy^i = nu d_i, d/dy^{n+1} = nu x^p d_p
//   C2   mu x^i nu J d_i + (1 - mu) nu x^j J d_j = 0
//   C3   x^i J_i^k d_k = 0
//   C4a  J_i^q + x^p d_i J_p^q - mu |x|^2 J_i^q = 0
//   C4b  J_i^j = xi x^p d_i J_p^j                      (ring |x| = 1 excluded)
//   C5   d_p J_j^k - d_j J_p^k = c (-x^p J_j^k + x^j J_p^k),  c = 2 / (|x|^2 (|x|^2 + 1))
//   C6   N_ij^k = c (x^p J_j^p J_i^k - x^p J_i^p J_j^k + delta_j^k x^i - delta_i^k x^j)
//   C7   sum_i sum_j N_ij^i at x = (1, ..., 1) equals the stated closed form
//   C8   coordinate formula for N agrees with the bracket definition
//   C9   d_p J_j^k = -(xi - 1)^2 x^p x^q d_j J_q^k + xi d_j J_p^k + xi x^q d_p d_j J_q^k
//
// Vector identities are measured in the round-metric norm, matrix and array
// identities in the sup norm. Verdicts are per claim and per structure only.

enum class Verdict { Holds, Fails, Inconclusive };
enum class ResidualUnit { GNorm, SupNorm, Absolute };

std::string_view to_string(Verdict v);
std::string_view to_string(ResidualUnit u);

struct Tolerances {
  double hold = 1e-6;
  double fail = 1e-3;
};

/// holds iff max < hold, fails iff max > fail, otherwise inconclusive.
/// No evaluated points is always inconclusive.
Verdict classify(double max_residual, std::size_t points_evaluated, const Tolerances& tol);

struct ClaimOptions {
  Tolerances tol;
  /// Finite-difference step for second derivatives; <= 0 selects 1e-4 (1 + |x|).
  double fd_step = 0.0;
};

struct SweepSample {
  double radius = 0.0;
  std::optional<double> residual;
};

struct ClaimResult {
  std::string claim_id;
  std::string structure;
  std::size_t points_evaluated = 0;
  std::size_t points_excluded = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  ResidualUnit unit = ResidualUnit::SupNorm;
  Verdict verdict = Verdict::Inconclusive;
  std::string notes;
  /// reason -> number of excluded points
  std::map<std::string, std::size_t> exclusions;
  /// Residuals along the diagonal ray at radii approaching 1 (continuity sweep).
  std::vector<SweepSample> sweep;
  /// Named scalar outputs (C7).
  std::map<std::string, double> values;
};

struct ChainReport {
  std::string structure;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t points = 0;
  Tolerances tol;
  double fd_step = 0.0;
  SamplePlan plan;
  std::vector<ClaimResult> claims;
  std::optional<std::string> first_break;
  std::string library_version;
};

// --- pointwise residuals ----------------------------------------------------

namespace residual {

double c1(const ChartPoint& p);
double c2(const Tensor11Field& j, const ChartPoint& p);
double c3(const Tensor11Field& j, const ChartPoint& p);
Mat c4a(const Tensor11Field& j, const ChartPoint& p);
/// Throws SingularRing near |x| = 1.
Mat c4b(const Tensor11Field& j, const ChartPoint& p, double delta_ring = kDeltaRing);
/// (p, j, k) = LHS - RHS of C5. Throws OriginSingularity near x = 0.
Array3 c5(const Tensor11Field& j, const ChartPoint& p, double delta_ball = kDeltaBall);
/// (i, j, k) = N_ij^k - RHS of C6. Throws OriginSingularity near x = 0.
Array3 c6(const Tensor11Field& j, const ChartPoint& p, double delta_ball = kDeltaBall);
double c8(const Tensor11Field& j, const ChartPoint& p);
/// (p, j, k) = LHS - RHS of C9. Throws SingularRing near |x| = 1.
Array3 c9(const Tensor11Field& j, const ChartPoint& p, double fd_step = 0.0,
          double delta_ring = kDeltaRing);

/// c (x^p J_j^p J_i^k - x^p J_i^p J_j^k + delta_j^k x^i - delta_i^k x^j) as (i, j, k),
/// with x^p J_j^p the Euclidean contraction over p.
Array3 closed_form_nijenhuis(const Mat& j, std::span<const double> x);

/// c (-x^p J_j^k + x^j J_p^k) as (p, j, k).
Array3 closed_form_antisymmetric_partials(const Mat& j, std::span<const double> x);

}  // namespace residual

// --- C7 ---------------------------------------------------------------------

/// The claimed closed form for sum_i sum_j N_ij^i at x = (1,...,1),
/// 2 (2 - n) / (n (|n|^2 + 1)), under the two readings of |n|^2.
double stated_trace_sum_n_squared(std::size_t n);   // |n|^2 -> n^2
double stated_trace_sum_x_squared(std::size_t n);   // |n|^2 -> |x|^2 = n

/// sum_i sum_j of the C6 right-hand side at x = (1,...,1) for a given J.
double closed_form_trace_sum(const Mat& j);

/// Random J = S J_block S^-1 with J^2 = -I up to rounding (trace zero); S is
/// redrawn until its infinity-norm condition number is at most 50.
Mat random_complex_structure(std::size_t n, std::uint64_t seed);

struct TraceSumValues {
  std::size_t trials = 0;
  double independent_sum = 0.0;
  /// max - min over the trials
  double spread = 0.0;
  double stated_n_squared = 0.0;
  double stated_x_squared = 0.0;
};

TraceSumValues trace_sum_values(std::size_t n, std::size_t trials, std::uint64_t seed);

// --- conditional substitution check ----------------------------------------

/// Residual of the coordinate Nijenhuis formula evaluated with the synthetic
/// derivative array D = sym + (c/2)(-x^p J_j^k + x^j J_p^k) against the C6
/// closed form. `sym` must be symmetric in its first two indices.
double conditional_nijk_residual(const Mat& j, std::span<const double> x, const Array3& sym);

struct ConditionalSummary {
  std::size_t trials = 0;
  double max_residual = 0.0;
  double max_square_residual = 0.0;  // sup |J^2 + I| over trials
};

/// Draws x (0.5 <= |x| <= 2), J = S J_block S^-1 and a random symmetric part
/// per trial (zero when `with_symmetric_part` is false).
ConditionalSummary conditional_nijk_check(std::size_t n, std::size_t trials, std::uint64_t seed,
                                          bool with_symmetric_part = true);

// --- claim runners ----------------------------------------------------------

ClaimResult run_claim_c1(const SamplePlan& plan, const ClaimOptions& opts = {});
ClaimResult run_claim_c2(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts = {});
ClaimResult run_claim_c3(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts = {});
/// {C4a, C4b}
std::vector<ClaimResult> run_claim_c4(const Tensor11Field& j, const SamplePlan& plan,
                                      const ClaimOptions& opts = {});
ClaimResult run_claim_c5(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts = {});
ClaimResult run_claim_c6(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts = {});
/// Residual is the distance of the independent sum to the nearer stated reading.
ClaimResult run_claim_c7(std::size_t n, std::size_t trials, std::uint64_t seed,
                         const ClaimOptions& opts = {});
ClaimResult run_claim_c8(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts = {});
ClaimResult run_claim_c9(const Tensor11Field& j, const SamplePlan& plan, const ClaimOptions& opts = {});

/// All claims in derivation order; first_break is the earliest failing claim.
ChainReport chain_report(const Tensor11Field& j, const SamplePlan& plan,
                         const ClaimOptions& opts = {});

}  // namespace nijcheck
