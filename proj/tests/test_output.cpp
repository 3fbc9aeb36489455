#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sgclass/report_json.hpp"

using namespace sgclass;

namespace {

ClassificationReport report_for(const std::vector<LatticeVector>& gens) {
    return classification_report(build_semigroup(gens).value());
}

} // namespace

TEST_CASE("report JSON is byte-stable with sorted keys and sorted vector arrays") {
    ClassificationReport report = report_for({{6, 0}, {0, 6}, {2, 1}, {1, 2}});
    const std::string once = to_json(report).dump();
    const std::string twice = to_json(report_for({{2, 1}, {1, 2}, {6, 0}, {0, 6}})).dump();
    CHECK(once == twice); // input order normalizes away

    nlohmann::json j = nlohmann::json::parse(once);
    std::string previous;
    for (const auto& item : j.items()) {
        CHECK(previous < item.key());
        previous = item.key();
    }
    auto apery = j.at("apery");
    for (std::size_t i = 0; i + 1 < apery.size(); ++i)
        CHECK(apery[i].get<std::vector<std::int64_t>>() <
              apery[i + 1].get<std::vector<std::int64_t>>());
}

TEST_CASE("text rendering carries the same facts as the JSON rendering") {
    for (const auto& gens : std::vector<std::vector<LatticeVector>>{
             {{6, 0}, {0, 6}, {2, 1}, {1, 2}},
             {{4, 0}, {0, 4}, {1, 3}, {3, 1}},
         }) {
        ClassificationReport report = report_for(gens);
        nlohmann::json j = to_json(report);
        std::istringstream text(report_to_text(report));
        std::string line;
        std::size_t keys = 0;
        while (std::getline(text, line)) {
            if (line.empty()) continue;
            const auto colon = line.find(": ");
            REQUIRE(colon != std::string::npos);
            const std::string key = line.substr(0, colon);
            nlohmann::json value = nlohmann::json::parse(line.substr(colon + 2));
            CHECK(j.at(key) == value);
            ++keys;
        }
        CHECK(keys == j.size());
    }
}

TEST_CASE("csv rows quote generators and expose the ladder") {
    ClassificationReport report = report_for({{6, 0}, {0, 6}, {2, 1}, {1, 2}});
    CHECK(sweep_csv_header() == "generators,d,r,is_cm,type,gorenstein,ng,gps,violations");
    CHECK(sweep_line_csv(report, {}) ==
          "\"0,6;6,0;1,2;2,1\",2,2,true,2,false,false,true,");

    ClassificationReport non_cm = report_for({{4, 0}, {0, 4}, {1, 3}, {3, 1}});
    CHECK(sweep_line_csv(non_cm, {}) == "\"0,4;4,0;1,3;3,1\",2,2,false,2,false,,,");
}

#ifndef _WIN32

// Subprocess checks of the installed command surface; the harness passes the
// binary path through SGCLASS_BIN.
TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("SGCLASS_BIN");
    REQUIRE(bin != nullptr);
    const std::string out_path =
        (std::filesystem::temp_directory_path() / "sgclass_cli_out.txt").string();
    const std::string cmd = std::string(bin) + " " + args + " >" + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::filesystem::remove(out_path);
    return {WEXITSTATUS(status), buffer.str()};
}

} // namespace

TEST_CASE("analyze reports the classification with exit 0") {
    RunResult r = run_cli("analyze --gens \"6,0;0,6;2,1;1,2\" --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("is_nearly_gorenstein") == false);
    CHECK(j.at("is_gps") == true);
    CHECK(j.at("trace_gaps") ==
          nlohmann::json::parse("[[0,0],[1,2],[2,1],[3,3]]"));
}

TEST_CASE("analyze classifies the free plane as Gorenstein") {
    RunResult r = run_cli("analyze --gens \"1,0;0,1\" --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("is_gorenstein") == true);
}

TEST_CASE("analyze reports non-CM instances with a witness and exit 0") {
    RunResult r = run_cli("analyze --gens \"4,0;0,4;1,3;3,1\" --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("is_cm") == false);
    CHECK(j.at("cm_witness") == nlohmann::json::parse("[[2,6],[6,2]]"));
    CHECK(!j.at("caveats").empty());
}

TEST_CASE("bad input exits 2, tight budgets exit 3") {
    CHECK(run_cli("analyze --gens \"1,1;2,2\"").exit_code == 2);
    CHECK(run_cli("analyze --gens \"garbage\"").exit_code == 2);
    CHECK(run_cli("analyze").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    CHECK(run_cli("analyze --gens \"6,0;0,6;2,1;1,2\" --box-budget 4").exit_code == 3);
    CHECK(run_cli("analyze --gens \"6,0;0,6;2,1;1,2\" --l-max 2").exit_code == 3);
}

TEST_CASE("member answers from both engines") {
    RunResult r = run_cli("member --gens \"6,0;0,6;2,1;1,2\" --z \"4,2\" --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("member_dp") == true);
    CHECK(j.at("member_apery") == true);

    RunResult neg = run_cli("member --gens \"6,0;0,6;2,1;1,2\" --z \"-1,0\" --format json");
    nlohmann::json jn = nlohmann::json::parse(neg.out);
    CHECK(jn.at("member_dp") == false);
    CHECK(jn.at("member_apery") == false);
}

TEST_CASE("trace prints the witness or its absence") {
    RunResult gap = run_cli("trace --gens \"6,0;0,6;2,1;1,2\" --z \"2,1\"");
    CHECK(gap.exit_code == 0);
    CHECK(gap.out.find("not in tr(S)") != std::string::npos);

    RunResult hit = run_cli("trace --gens \"6,0;0,6;2,1;1,2\" --z \"6,0\" --format json");
    CHECK(hit.exit_code == 0);
    CHECK(nlohmann::json::parse(hit.out).at("in_trace") == true);

    RunResult outside = run_cli("trace --gens \"6,0;0,6;2,1;1,2\" --z \"1,1\"");
    CHECK(outside.exit_code == 2);
}

TEST_CASE("apery subcommand lists elements, maximal elements and representations") {
    RunResult r = run_cli("apery --gens \"2,0;0,2;1,1\" --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("apery") == nlohmann::json::parse("[[0,0],[1,1]]"));
    CHECK(j.at("maximal") == nlohmann::json::parse("[[1,1]]"));
    CHECK(j.at("l_bounds") == nlohmann::json::parse("[2]"));
}

TEST_CASE("verify-paper passes all fixtures and detects corruption") {
    RunResult r = run_cli("verify-paper");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5/5") != std::string::npos);

    RunResult bad = run_cli("verify-paper --corrupt-fixture 2");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("4/5") != std::string::npos);
    CHECK(bad.out.find("type") != std::string::npos);

    RunResult js = run_cli("verify-paper --format json");
    CHECK(js.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j.size() == 5);
    for (const auto& item : j) CHECK(item.at("pass") == true);
}

TEST_CASE("small sweeps write deterministic files and exit 0") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const std::string jl1 = (dir / "sg_sweep1.jsonl").string();
    const std::string cs1 = (dir / "sg_sweep1.csv").string();
    const std::string jl2 = (dir / "sg_sweep2.jsonl").string();
    const std::string cs2 = (dir / "sg_sweep2.csv").string();

    const std::string flags = "sweep --d 2 --max-coord 3 --codim 1..2 ";
    RunResult a = run_cli(flags + "--jsonl " + jl1 + " --csv " + cs1);
    RunResult b = run_cli(flags + "--jobs 3 --jsonl " + jl2 + " --csv " + cs2);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);

    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };
    const std::string jsonl = slurp(jl1);
    CHECK(!jsonl.empty());
    CHECK(jsonl == slurp(jl2));
    CHECK(slurp(cs1) == slurp(cs2));
    CHECK(slurp(cs1).rfind("generators,d,r,", 0) == 0);

    std::istringstream lines(jsonl);
    std::string line;
    std::uint64_t expected_index = 0;
    while (std::getline(lines, line)) {
        nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j.at("index") == expected_index++);
        CHECK(j.at("violations").empty());
    }
    CHECK(expected_index > 0);
    for (const auto& p : {jl1, cs1, jl2, cs2}) fs::remove(p);
}

TEST_CASE("instance files round through the analyze command") {
    namespace fs = std::filesystem;
    const std::string path = (fs::temp_directory_path() / "sg_instance.json").string();
    {
        std::ofstream out(path);
        out << "{\"generators\": [[6,0],[0,6],[2,1],[1,2]]}";
    }
    RunResult r = run_cli("analyze " + path + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out).at("type") == 2);

    {
        std::ofstream out(path);
        out << "{\"generators\": [[6,0],[0,-6]]}";
    }
    CHECK(run_cli("analyze " + path).exit_code == 2);
    fs::remove(path);
}

TEST_SUITE_END();

#endif // _WIN32
