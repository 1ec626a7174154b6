#pragma once

// A small JSON Schema validator covering the keywords used by
// schemas/report.schema.json: type, required, properties,
// additionalProperties, items, enum, const, minimum, exclusiveMinimum,
// minLength and local "#/$defs/..." references.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nijcheck::testing {

/// Returns one message per violation; empty when the document conforms.
std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                           const nlohmann::json& document);

nlohmann::json load_json_file(const std::string& path);

}  // namespace nijcheck::testing
