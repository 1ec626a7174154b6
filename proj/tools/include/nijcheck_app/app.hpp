#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nijcheck/acs_catalog.hpp"

namespace nijcheck::app {

/// Process exit codes. Claim verdicts never influence them.
enum ExitCode : int {
  kSuccess = 0,
  kSelfTestFailure = 1,
  kConfigError = 2,
  kNumericalFailure = 3,
};

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::size_t dim = 6;
  /// constant | s2 | octonion-s6 | grid:<path>
  std::string structure = "octonion-s6";
  std::size_t points = 100;
  std::uint64_t seed = 42;
  double fd_step = 0.0;
  double tol_hold = 1e-6;
  double tol_fail = 1e-3;
  std::string output;  // empty: standard output
  OutputFormat format = OutputFormat::Json;
  bool sweep = false;
};

/// Throws ConfigError when the configuration is inconsistent.
void validate_config(const RunConfig& config);

/// Builds the structure named in the configuration. Throws DimensionMismatch
/// or ConfigError.
Tensor11Field make_structure(const std::string& spec, std::size_t dim);

/// Comma-separated list of reals. Throws ConfigError.
std::vector<double> parse_reals(const std::string& text);

/// Runs the claim chain and writes the report. Returns an exit code.
int cmd_claims(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Entry point shared by the executable and the integration tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nijcheck::app
