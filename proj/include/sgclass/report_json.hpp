#pragma once

#include <string>

#include <json.hpp>

#include "sgclass/harness.hpp"

namespace sgclass {

/// All serialization uses nlohmann::json with its default object storage, so
/// keys come out sorted and byte-identical output follows from value-identical
/// reports. Vector arrays inherit the canonical lexicographic order of the
/// underlying containers.

nlohmann::json to_json(const LatticeVector& v);
nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json to_json(const Violation& violation);
nlohmann::json to_json(const FixtureResult& result);

/// Aligned key: value rendering carrying the same facts as the JSON form.
std::string report_to_text(const ClassificationReport& report);

std::string sweep_csv_header();
std::string sweep_line_json(std::uint64_t index, const ClassificationReport& report,
                            const std::vector<Violation>& violations,
                            const std::vector<std::string>& applied);
std::string sweep_line_csv(const ClassificationReport& report,
                           const std::vector<Violation>& violations);
std::string sweep_error_json(std::uint64_t index, const AffineSemigroup& s,
                             const std::string& message);
std::string sweep_error_csv(const AffineSemigroup& s);

/// "6,0;0,6;2,1;1,2" inline form shared by the CLI and the CSV summary.
std::string generators_compact(const std::vector<LatticeVector>& generators);

} // namespace sgclass
