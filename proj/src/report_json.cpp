#include "sgclass/report_json.hpp"

#include <sstream>

namespace sgclass {

using nlohmann::json;

json to_json(const LatticeVector& v) {
    json arr = json::array();
    for (std::int64_t c : v.coords()) arr.push_back(c);
    return arr;
}

namespace {

json vectors_to_json(const std::vector<LatticeVector>& vectors) {
    json arr = json::array();
    for (const auto& v : vectors) arr.push_back(to_json(v));
    return arr;
}

json vectors_to_json(const std::set<LatticeVector>& vectors) {
    json arr = json::array();
    for (const auto& v : vectors) arr.push_back(to_json(v));
    return arr;
}

} // namespace

json to_json(const ClassificationReport& report) {
    const AffineSemigroup& s = report.semigroup;
    json j;
    j["generators"] = vectors_to_json(s.generators());
    j["d"] = s.dim();
    j["r"] = s.codim();
    j["edim"] = s.embedding_dim();
    j["l_bounds"] = report.apery.l_bounds;
    j["apery"] = vectors_to_json(report.apery.elements);
    j["apery_count"] = report.apery.elements.size();
    j["maximal"] = vectors_to_json(report.apery.maximal);
    j["type"] = report.type_count;
    j["qf"] = vectors_to_json(report.qf);
    j["canonical_degrees"] = vectors_to_json(report.canonical_degrees);
    j["is_cm"] = report.is_cm;
    if (report.cm_witness) {
        j["cm_witness"] =
            json::array({to_json(report.cm_witness->first), to_json(report.cm_witness->second)});
    }
    j["is_gorenstein"] = report.is_gorenstein;
    if (report.is_nearly_gorenstein) j["is_nearly_gorenstein"] = *report.is_nearly_gorenstein;
    if (report.is_gps) j["is_gps"] = *report.is_gps;
    if (!report.generator_trace_flags.empty()) {
        json flags = json::array();
        for (bool b : report.generator_trace_flags) flags.push_back(b);
        j["generator_trace_flags"] = flags;
    }
    if (report.is_cm) {
        json t = json::array();
        for (std::size_t i = 0; i < report.t_assign.size(); ++i) {
            if (report.t_assign[i])
                t.push_back(json::array(
                    {to_json(s.extremal()[i]), to_json(*report.t_assign[i])}));
        }
        j["t_map"] = t;
    }
    if (report.gps_lambda) j["gps_lambda"] = *report.gps_lambda;
    if (report.trace_gaps) j["trace_gaps"] = vectors_to_json(*report.trace_gaps);
    j["caveats"] = report.caveats;
    return j;
}

json to_json(const Violation& violation) {
    json j;
    j["property"] = violation.property;
    j["expected"] = violation.expected;
    j["observed"] = violation.observed;
    return j;
}

json to_json(const FixtureResult& result) {
    json j;
    j["name"] = result.name;
    j["pass"] = result.pass;
    j["diffs"] = result.diffs;
    return j;
}

std::string report_to_text(const ClassificationReport& report) {
    json j = to_json(report);
    std::ostringstream out;
    for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
    return out.str();
}

std::string generators_compact(const std::vector<LatticeVector>& generators) {
    std::string out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ';';
        const auto& c = generators[i].coords();
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(c[k]);
        }
    }
    return out;
}

std::string sweep_csv_header() {
    return "generators,d,r,is_cm,type,gorenstein,ng,gps,violations";
}

namespace {

std::string opt_bool(const std::optional<bool>& b) {
    if (!b) return "";
    return *b ? "true" : "false";
}

std::string csv_row(const AffineSemigroup& s, const std::string& is_cm, const std::string& type,
                    const std::string& gorenstein, const std::string& ng, const std::string& gps,
                    const std::string& violations) {
    std::ostringstream out;
    out << '"' << generators_compact(s.generators()) << '"' << ',' << s.dim() << ','
        << s.codim() << ',' << is_cm << ',' << type << ',' << gorenstein << ',' << ng << ','
        << gps << ',' << violations;
    return out.str();
}

} // namespace

std::string sweep_line_json(std::uint64_t index, const ClassificationReport& report,
                            const std::vector<Violation>& violations,
                            const std::vector<std::string>& applied) {
    json j;
    j["index"] = index;
    j["report"] = to_json(report);
    json v = json::array();
    for (const auto& violation : violations) v.push_back(to_json(violation));
    j["violations"] = v;
    j["checks_applied"] = applied;
    return j.dump();
}

std::string sweep_line_csv(const ClassificationReport& report,
                           const std::vector<Violation>& violations) {
    std::string names;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) names += ';';
        names += violations[i].property;
    }
    return csv_row(report.semigroup, report.is_cm ? "true" : "false",
                   std::to_string(report.type_count), report.is_gorenstein ? "true" : "false",
                   opt_bool(report.is_nearly_gorenstein), opt_bool(report.is_gps), names);
}

std::string sweep_error_json(std::uint64_t index, const AffineSemigroup& s,
                             const std::string& message) {
    json j;
    j["index"] = index;
    j["error"] = message;
    j["generators"] = vectors_to_json(s.generators());
    return j.dump();
}

std::string sweep_error_csv(const AffineSemigroup& s) {
    return csv_row(s, "", "", "", "", "", "internal_invariant");
}

} // namespace sgclass
