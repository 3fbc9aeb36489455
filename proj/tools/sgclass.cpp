#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgclass/report_json.hpp"

using namespace sgclass;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> values;
    std::string cleaned;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') cleaned += c;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        std::size_t comma = cleaned.find(',', pos);
        std::string tok = cleaned.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            values.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw BadInput("cannot parse integer '" + tok + "' in '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

std::vector<LatticeVector> parse_inline_generators(const std::string& text) {
    std::vector<LatticeVector> gens;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        std::string part = text.substr(pos, semi == std::string::npos ? semi : semi - pos);
        gens.emplace_back(parse_int_list(part));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return gens;
}

std::vector<LatticeVector> load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open instance file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw BadInput("invalid JSON in '" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw BadInput("instance file must be an object with a 'generators' array");
    std::vector<LatticeVector> gens;
    for (const auto& row : j["generators"]) {
        if (!row.is_array()) throw BadInput("'generators' must contain arrays of integers");
        std::vector<std::int64_t> coords;
        for (const auto& entry : row) {
            if (!entry.is_number_integer() || entry.get<std::int64_t>() < 0)
                throw BadInput("generator entries must be nonnegative integers");
            coords.push_back(entry.get<std::int64_t>());
        }
        gens.emplace_back(std::move(coords));
    }
    if (gens.empty()) throw BadInput("'generators' is empty");
    for (const auto& g : gens)
        if (g.dim() != gens[0].dim()) throw BadInput("'generators' rows have unequal lengths");
    return gens;
}

struct InstanceArgs {
    std::string file;
    std::string inline_gens;

    std::vector<LatticeVector> load() const {
        if (!inline_gens.empty() && !file.empty())
            throw BadInput("give either an instance file or --gens, not both");
        if (!inline_gens.empty()) return parse_inline_generators(inline_gens);
        if (!file.empty()) return load_instance_file(file);
        throw BadInput("no instance given; pass a JSON file or --gens");
    }
};

AffineSemigroup build_or_fail(const std::vector<LatticeVector>& gens) {
    auto built = build_semigroup(gens);
    if (!built) throw BadInput("invalid generator set: " + built.error().str());
    return built.value();
}

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
    cmd->add_option("instance", args.file, "instance JSON file {\"generators\": [[...],...]}");
    cmd->add_option("--gens", args.inline_gens, "inline generators, e.g. \"6,0;0,6;2,1;1,2\"");
}

void emit(const std::string& format, const nlohmann::json& j, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification toolkit for simplicial affine semigroups"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    Limits limits;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--l-max", limits.l_max, "search bound for span multiples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--box-budget", limits.box_budget, "cell budget for membership tables")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    InstanceArgs analyze_args;
    auto* cmd_analyze = app.add_subcommand("analyze", "full classification of one instance");
    add_instance_options(cmd_analyze, analyze_args);

    InstanceArgs apery_args;
    auto* cmd_apery = app.add_subcommand("apery", "Apery set, maximal elements, representations");
    add_instance_options(cmd_apery, apery_args);

    InstanceArgs member_args;
    std::string member_z;
    auto* cmd_member = app.add_subcommand("member", "membership of a vector, both engines");
    add_instance_options(cmd_member, member_args);
    cmd_member->add_option("--z", member_z, "query vector, e.g. \"4,2\"")->required();

    InstanceArgs trace_args;
    std::string trace_z;
    auto* cmd_trace = app.add_subcommand("trace", "trace-ideal membership of a vector");
    add_instance_options(cmd_trace, trace_args);
    cmd_trace->add_option("--z", trace_z, "query vector, e.g. \"6,0\"")->required();

    SweepSpec spec;
    std::string codim_range = "2..3";
    std::string jsonl_path = "sweep.jsonl";
    std::string csv_path = "sweep.csv";
    unsigned jobs = 1;
    bool verbose = false;
    std::uint64_t count_limit = 0;
    std::uint64_t random_count = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    auto* cmd_sweep = app.add_subcommand("sweep", "enumerate instances and verify the theorems");
    cmd_sweep->add_option("--d", spec.d, "ambient dimension")->capture_default_str();
    cmd_sweep->add_option("--max-coord", spec.max_coordinate, "coordinate bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_sweep->add_option("--codim", codim_range, "codimension range A..B")->capture_default_str();
    cmd_sweep->add_option("--count-limit", count_limit, "stop after this many instances");
    cmd_sweep->add_option("--random", random_count, "random mode: number of instances");
    cmd_sweep->add_option("--seed", seed, "random-mode seed")->each([&](const std::string&) {
        seed_given = true;
    });
    cmd_sweep->add_option("--jsonl", jsonl_path, "per-instance JSONL output path")
        ->capture_default_str();
    cmd_sweep->add_option("--csv", csv_path, "CSV summary output path")->capture_default_str();
    cmd_sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd_sweep->add_flag("--verbose", verbose, "per-check applied/skipped counts on stderr");

    int corrupt_fixture = -1;
    auto* cmd_verify = app.add_subcommand("verify-paper", "recompute the bundled reference fixtures");
    cmd_verify->add_option("--corrupt-fixture", corrupt_fixture)->group(""); // self-test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*cmd_analyze) {
            AffineSemigroup s = build_or_fail(analyze_args.load());
            ClassificationReport report = classification_report(s, limits);
            emit(format, to_json(report), report_to_text(report));
            return kExitOk;
        }

        if (*cmd_apery) {
            AffineSemigroup s = build_or_fail(apery_args.load());
            AperyData apery = compute_apery(s, limits);
            nlohmann::json j;
            j["l_bounds"] = apery.l_bounds;
            j["apery"] = nlohmann::json::array();
            for (const auto& v : apery.elements) j["apery"].push_back(to_json(v));
            j["maximal"] = nlohmann::json::array();
            for (const auto& v : apery.maximal) j["maximal"].push_back(to_json(v));
            j["reps"] = nlohmann::json::array();
            for (const auto& [v, tuples] : apery.reps) {
                nlohmann::json entry;
                entry.push_back(to_json(v));
                nlohmann::json ts = nlohmann::json::array();
                for (const auto& t : tuples) ts.push_back(t);
                entry.push_back(ts);
                j["reps"].push_back(entry);
            }
            std::ostringstream text;
            for (const auto& [key, value] : j.items()) text << key << ": " << value.dump() << '\n';
            emit(format, j, text.str());
            return kExitOk;
        }

        if (*cmd_member) {
            AffineSemigroup s = build_or_fail(member_args.load());
            LatticeVector z(parse_int_list(member_z));
            if (z.dim() != s.dim()) throw BadInput("query vector has the wrong dimension");
            AperyData apery = compute_apery(s, limits);
            MembershipEngine engine(s, limits);
            engine.attach(apery);
            const bool dp = member_dp(s, z, limits);
            const bool ap = member_apery(engine, z);
            nlohmann::json j;
            j["z"] = to_json(z);
            j["member_dp"] = dp;
            j["member_apery"] = ap;
            std::ostringstream text;
            text << "member_dp: " << (dp ? "true" : "false") << '\n'
                 << "member_apery: " << (ap ? "true" : "false") << '\n';
            emit(format, j, text.str());
            return kExitOk;
        }

        if (*cmd_trace) {
            AffineSemigroup s = build_or_fail(trace_args.load());
            LatticeVector z(parse_int_list(trace_z));
            if (z.dim() != s.dim()) throw BadInput("query vector has the wrong dimension");
            AperyData apery = compute_apery(s, limits);
            MembershipEngine engine(s, limits);
            engine.attach(apery);
            TraceQuery q = in_trace(engine, z);
            nlohmann::json j;
            j["z"] = to_json(z);
            j["in_trace"] = q.present();
            if (q.present()) {
                j["witness_index"] = *q.witness_index;
                j["witness"] = to_json(apery.maximal[*q.witness_index]);
            }
            std::ostringstream text;
            if (q.present())
                text << "in tr(S), witness maximal element "
                     << apery.maximal[*q.witness_index].str() << " (index "
                     << *q.witness_index << ")\n";
            else
                text << "not in tr(S)\n";
            emit(format, j, text.str());
            return kExitOk;
        }

        if (*cmd_sweep) {
            if (count_limit > 0) spec.count_limit = count_limit;
            if (random_count > 0) spec.random_count = random_count;
            if (seed_given) spec.seed = seed;
            const auto sep = codim_range.find("..");
            if (sep == std::string::npos)
                throw BadInput("--codim expects a range like 2..3");
            spec.codim_lo = std::stoul(codim_range.substr(0, sep));
            spec.codim_hi = std::stoul(codim_range.substr(sep + 2));
            if (const char* env = std::getenv("SGCLASS_JOBS")) jobs = std::stoul(env);
            if (jobs == 0) jobs = 1;

            std::ofstream jsonl(jsonl_path);
            std::ofstream csv(csv_path);
            if (!jsonl || !csv) throw BadInput("cannot open sweep output files");
            std::vector<Violation> violations;
            SweepOutcome outcome = run_sweep(spec, limits, jobs, &jsonl, &csv, &violations);

            std::cerr << "instances: " << outcome.instances
                      << ", violations: " << outcome.violation_count << '\n';
            if (verbose) {
                for (const auto& id : theorem_check_ids())
                    std::cerr << "  " << id << ": applied " << outcome.applied.at(id)
                              << ", skipped " << outcome.skipped.at(id) << '\n';
            }
            for (const auto& v : violations)
                std::cerr << "violation [" << v.property << "] on "
                          << generators_compact(v.generators) << ": expected " << v.expected
                          << ", observed " << v.observed << '\n';
            return outcome.violation_count == 0 ? kExitOk : kExitViolation;
        }

        if (*cmd_verify) {
            auto results = run_fixtures(limits, corrupt_fixture);
            std::size_t passed = 0;
            nlohmann::json j = nlohmann::json::array();
            for (const auto& res : results) {
                j.push_back(to_json(res));
                if (res.pass) ++passed;
            }
            if (format == "json") {
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto& res : results) {
                    std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << '\n';
                    for (const auto& diff : res.diffs) std::cout << "  " << diff << '\n';
                }
                std::cout << passed << "/" << results.size() << " fixtures pass\n";
            }
            return passed == results.size() ? kExitOk : kExitViolation;
        }
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const NotInSemigroup& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const BoxBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const LBoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const ArithmeticOverflow& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    }
    return kExitOk;
}
