#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgclass/classify.hpp"

namespace sgclass {

/// Instance-stream parameters. Exhaustive mode enumerates every generator set
/// with coordinates up to max_coordinate; random mode draws generator sets
/// with a seeded generator and keeps the ones that validate.
struct SweepSpec {
    std::size_t d = 2;
    std::int64_t max_coordinate = 6;
    std::size_t codim_lo = 2;
    std::size_t codim_hi = 3;
    std::optional<std::uint64_t> count_limit;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> random_count; // switches to random mode
};

using InstanceSink = std::function<bool(const AffineSemigroup&)>; // false stops the stream

/// Streams valid semigroups in a deterministic order: lexicographic over the
/// sorted generator tuples in exhaustive mode, draw order in random mode.
/// Invalid candidate sets are skipped silently.
void sweep(const SweepSpec& spec, const InstanceSink& sink);

struct Violation {
    std::vector<LatticeVector> generators;
    std::string property;
    std::string expected;
    std::string observed;
};

/// Identifiers of all theorem checks, in evaluation order.
const std::vector<std::string>& theorem_check_ids();

/// Evaluates every theorem check whose hypotheses hold on the report and
/// returns the violations (expected: none). applied, when given, receives the
/// ids of the checks that were not vacuous.
std::vector<Violation> verify_theorems(const ClassificationReport& report,
                                       std::vector<std::string>* applied = nullptr,
                                       const Limits& limits = {});

/// A reference instance with published expected values.
struct Fixture {
    struct Expr {
        LatticeVector base;
        std::size_t gen; // 1-based index into generators as published
    };
    struct TraceRel {
        std::size_t m, gen, n; // 1-based: maximal_list[m] + gen - maximal_list[n]
        bool member;
    };

    std::string name;
    std::vector<LatticeVector> generators; // published order
    std::optional<std::set<LatticeVector>> expected_apery;
    std::set<LatticeVector> expected_maximal;
    std::vector<LatticeVector> maximal_list; // published labels m_1, m_2, ...
    std::size_t expected_type = 0;
    bool expected_cm = true;
    std::optional<bool> expected_gorenstein;
    std::optional<bool> expected_ng;
    std::optional<bool> expected_gps;
    std::optional<std::set<LatticeVector>> expected_trace_gaps;
    std::vector<std::pair<LatticeVector, LatticeVector>> expected_t; // (extremal, assigned)
    std::vector<std::vector<Expr>> identities; // each group evaluates to one vector
    std::vector<TraceRel> trace_relations;
};

const std::vector<Fixture>& fixtures();

struct FixtureResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> diffs;
};

/// Recomputes every fixture and compares field by field. corrupt_index, when
/// in range, bumps that fixture's expected type first; the self-test of the
/// diff reporting uses it.
std::vector<FixtureResult> run_fixtures(const Limits& limits = {}, int corrupt_index = -1);

struct SweepOutcome {
    std::uint64_t instances = 0;
    std::uint64_t violation_count = 0;
    std::map<std::string, std::uint64_t> applied;
    std::map<std::string, std::uint64_t> skipped;
};

/// Classifies and verifies every instance of the stream, optionally writing
/// one JSON report per line and a CSV summary. Output order equals stream
/// order for any worker count.
SweepOutcome run_sweep(const SweepSpec& spec, const Limits& limits, unsigned jobs,
                       std::ostream* jsonl, std::ostream* csv,
                       std::vector<Violation>* collect = nullptr);

} // namespace sgclass
