#pragma once

#include <string>

#include "permspec/classify.hpp"
#include "permspec/spectrum.hpp"

#include <json.hpp>

namespace permspec {

// Machine-readable report documents. Field names and their order are a
// stable contract; big integers are rendered as decimal strings so no
// precision is ever lost. Points in witness blocks are 1-based, matching
// cycle notation.
using JsonDocument = nlohmann::ordered_json;

JsonDocument to_json(const Spectrum& spectrum);
JsonDocument to_json(const DivisibilityReport& report);
JsonDocument to_json(const FrobeniusReport& report);
JsonDocument to_json(const BochertReport& report);
JsonDocument to_json(const ClassificationReport& report);

Spectrum spectrum_from_json(const JsonDocument& doc);
DivisibilityReport divisibility_report_from_json(const JsonDocument& doc);
FrobeniusReport frobenius_report_from_json(const JsonDocument& doc);
BochertReport bochert_report_from_json(const JsonDocument& doc);
ClassificationReport classification_report_from_json(const JsonDocument& doc);

} // namespace permspec
