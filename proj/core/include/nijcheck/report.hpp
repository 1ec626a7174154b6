#pragma once

#include <string>

#include "nijcheck/claims.hpp"

namespace nijcheck {

inline constexpr const char* kReportSchemaVersion = "1.0.0";

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// Report JSON: {schema_version, structure, dim, seed, points, tolerances,
/// claims: [...], first_break, provenance}. Output depends only on the report
/// contents, so identical runs give byte-identical text.
std::string to_json(const ChainReport& report);

/// CSV with header
/// claim_id,structure,points_evaluated,points_excluded,max_residual,mean_residual,verdict
std::string to_csv(const ChainReport& report);

}  // namespace nijcheck
