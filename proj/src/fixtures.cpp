#include <algorithm>

#include "sgclass/harness.hpp"
#include "sgclass/membership.hpp"

namespace sgclass {

namespace {

std::string set_str(const std::set<LatticeVector>& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : s) {
        if (!first) out += ", ";
        out += v.str();
        first = false;
    }
    return out + "}";
}

std::vector<Fixture> make_fixtures() {
    std::vector<Fixture> fx;

    // Cohen-Macaulay, Gorenstein on the punctured spectrum, not nearly
    // Gorenstein; the trace misses exactly four elements.
    {
        Fixture f;
        f.name = "notNG";
        f.generators = {{6, 0}, {0, 6}, {2, 1}, {1, 2}};
        f.expected_apery = std::set<LatticeVector>{{0, 0}, {2, 1}, {4, 2}, {6, 3},
                                                   {1, 2}, {2, 4}, {3, 6}, {3, 3},
                                                   {5, 4}, {4, 5}, {7, 5}, {5, 7}};
        f.expected_maximal = {{7, 5}, {5, 7}};
        f.maximal_list = {{7, 5}, {5, 7}};
        f.expected_type = 2;
        f.expected_cm = true;
        f.expected_gorenstein = false;
        f.expected_ng = false;
        f.expected_gps = true;
        f.expected_trace_gaps = std::set<LatticeVector>{{0, 0}, {2, 1}, {1, 2}, {3, 3}};
        f.expected_t = {{{6, 0}, {5, 7}}, {{0, 6}, {7, 5}}};
        // a_1 + m_2 - m_1 = 2 a_3 and a_2 + m_1 - m_2 = 2 a_4 are inside.
        f.trace_relations = {{2, 1, 1, true}, {1, 2, 2, true}};
        fx.push_back(std::move(f));
    }

    // An extremal ray generator shares its ray with a larger generator; the
    // certifying maximal element is unique for the ray generators only.
    {
        Fixture f;
        f.name = "post-uni-m";
        f.generators = {{2, 0}, {0, 2}, {0, 3}, {1, 1}, {1, 2}};
        f.expected_apery = std::set<LatticeVector>{{0, 0}, {1, 1}, {1, 2}, {0, 3}};
        f.expected_maximal = {{1, 1}, {1, 2}, {0, 3}};
        f.maximal_list = {{1, 1}, {1, 2}, {0, 3}};
        f.expected_type = 3;
        f.expected_cm = true;
        f.expected_gorenstein = false;
        f.expected_ng = true;
        f.expected_gps = true;
        f.expected_t = {{{2, 0}, {0, 3}}, {{0, 2}, {1, 2}}};
        f.trace_relations = {
            {3, 1, 1, true},  {3, 1, 2, true},  {1, 1, 2, false}, {2, 1, 3, false},
            {2, 2, 1, true},  {2, 2, 3, true},  {1, 2, 2, false}, {3, 2, 1, false},
        };
        fx.push_back(std::move(f));
    }

    // Nearly Gorenstein with type equal to the dimension.
    {
        Fixture f;
        f.name = "d=t=2";
        f.generators = {{0, 3}, {3, 1}, {1, 2}, {2, 2}, {3, 3}};
        f.expected_maximal = {{5, 7}, {6, 6}};
        f.maximal_list = {{5, 7}, {6, 6}};
        f.expected_type = 2;
        f.expected_cm = true;
        f.expected_gorenstein = false;
        f.expected_ng = true;
        f.expected_gps = true;
        fx.push_back(std::move(f));
    }

    // Nearly Gorenstein of codimension three hitting the type-three bound.
    {
        Fixture f;
        f.name = "ex1";
        f.generators = {{5, 0}, {0, 3}, {3, 1}, {1, 2}, {2, 2}};
        f.expected_maximal = {{5, 10}, {8, 8}, {7, 9}};
        f.maximal_list = {{5, 10}, {8, 8}, {7, 9}};
        f.expected_type = 3;
        f.expected_cm = true;
        f.expected_gorenstein = false;
        f.expected_ng = true;
        f.expected_gps = true;
        f.expected_trace_gaps = std::set<LatticeVector>{{0, 0}};
        f.identities = {
            {{{5, 10}, 1}, {{7, 9}, 3}, {{8, 8}, 5}},
            {{{8, 8}, 2}, {{7, 9}, 4}, {{5, 10}, 3}},
        };
        fx.push_back(std::move(f));
    }

    // Dimension three, codimension three, type three.
    {
        Fixture f;
        f.name = "ex2";
        f.generators = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        f.expected_apery =
            std::set<LatticeVector>{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        f.expected_maximal = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        f.maximal_list = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        f.expected_type = 3;
        f.expected_cm = true;
        f.expected_gorenstein = false;
        f.expected_ng = true;
        f.expected_gps = true;
        f.expected_trace_gaps = std::set<LatticeVector>{{0, 0, 0}};
        f.identities = {
            {{{0, 1, 1}, 1}, {{1, 1, 0}, 5}},
            {{{1, 0, 1}, 2}, {{1, 1, 0}, 6}},
            {{{1, 1, 0}, 3}, {{1, 0, 1}, 6}},
        };
        fx.push_back(std::move(f));
    }

    return fx;
}

} // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> fx = make_fixtures();
    return fx;
}

std::vector<FixtureResult> run_fixtures(const Limits& limits, int corrupt_index) {
    std::vector<FixtureResult> results;
    const auto& fx = fixtures();
    for (std::size_t fi = 0; fi < fx.size(); ++fi) {
        Fixture f = fx[fi];
        if (static_cast<int>(fi) == corrupt_index) ++f.expected_type;

        FixtureResult result;
        result.name = f.name;
        auto& diffs = result.diffs;

        auto built = build_semigroup(f.generators);
        if (!built) {
            diffs.push_back("construction failed: " + built.error().str());
            results.push_back(std::move(result));
            continue;
        }
        const AffineSemigroup& s = built.value();
        ClassificationReport report = classification_report(s, limits);

        auto check_eq = [&diffs](const std::string& field, const std::string& expected,
                                 const std::string& got, bool equal) {
            if (!equal) diffs.push_back(field + ": expected " + expected + ", got " + got);
        };

        if (f.expected_apery) {
            std::set<LatticeVector> got(report.apery.elements.begin(),
                                        report.apery.elements.end());
            check_eq("apery", set_str(*f.expected_apery), set_str(got),
                     got == *f.expected_apery);
        }
        {
            std::set<LatticeVector> got(report.apery.maximal.begin(),
                                        report.apery.maximal.end());
            check_eq("maximal", set_str(f.expected_maximal), set_str(got),
                     got == f.expected_maximal);
        }
        check_eq("type", std::to_string(f.expected_type), std::to_string(report.type_count),
                 report.type_count == f.expected_type);
        check_eq("is_cm", f.expected_cm ? "true" : "false", report.is_cm ? "true" : "false",
                 report.is_cm == f.expected_cm);
        if (f.expected_gorenstein)
            check_eq("is_gorenstein", *f.expected_gorenstein ? "true" : "false",
                     report.is_gorenstein ? "true" : "false",
                     report.is_gorenstein == *f.expected_gorenstein);
        if (f.expected_ng)
            check_eq("is_nearly_gorenstein", *f.expected_ng ? "true" : "false",
                     report.is_nearly_gorenstein ? (*report.is_nearly_gorenstein ? "true" : "false")
                                                 : "absent",
                     report.is_nearly_gorenstein == f.expected_ng);
        if (f.expected_gps)
            check_eq("is_gps", *f.expected_gps ? "true" : "false",
                     report.is_gps ? (*report.is_gps ? "true" : "false") : "absent",
                     report.is_gps == f.expected_gps);
        if (f.expected_trace_gaps) {
            bool equal = report.trace_gaps && *report.trace_gaps == *f.expected_trace_gaps;
            check_eq("trace_gaps", set_str(*f.expected_trace_gaps),
                     report.trace_gaps ? set_str(*report.trace_gaps) : "absent", equal);
        }
        for (const auto& [extremal, expected_t] : f.expected_t) {
            auto it = std::find(s.extremal().begin(), s.extremal().end(), extremal);
            if (it == s.extremal().end()) {
                diffs.push_back("t_assign: " + extremal.str() + " is not an extremal ray");
                continue;
            }
            const auto& got = report.t_assign[it - s.extremal().begin()];
            check_eq("t_assign[" + extremal.str() + "]", expected_t.str(),
                     got ? got->str() : "absent", got && *got == expected_t);
        }
        for (std::size_t gi = 0; gi < f.identities.size(); ++gi) {
            const auto& group = f.identities[gi];
            LatticeVector first = group[0].base + f.generators[group[0].gen - 1];
            for (const auto& expr : group) {
                LatticeVector v = expr.base + f.generators[expr.gen - 1];
                check_eq("identity " + std::to_string(gi + 1), first.str(), v.str(),
                         v == first);
            }
        }
        if (!f.trace_relations.empty()) {
            MembershipEngine engine(s, limits);
            engine.attach(report.apery);
            for (const auto& rel : f.trace_relations) {
                LatticeVector v = f.maximal_list[rel.m - 1] + f.generators[rel.gen - 1] -
                                  f.maximal_list[rel.n - 1];
                bool got = engine.member(v);
                check_eq("membership of " + v.str(), rel.member ? "true" : "false",
                         got ? "true" : "false", got == rel.member);
            }
        }

        result.pass = diffs.empty();
        results.push_back(std::move(result));
    }
    return results;
}

} // namespace sgclass
