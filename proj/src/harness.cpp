#include "sgclass/harness.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <random>
#include <thread>

#include "sgclass/report_json.hpp"

namespace sgclass {

namespace {

std::vector<LatticeVector> coordinate_universe(std::size_t d, std::int64_t max_coordinate) {
    std::vector<LatticeVector> universe;
    LatticeVector v(d);
    while (true) {
        if (!v.is_zero()) universe.push_back(v);
        std::size_t k = d;
        while (k-- > 0) {
            if (++v[k] <= max_coordinate) break;
            v[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) break;
    }
    return universe;
}

std::int64_t cross(const LatticeVector& a, const LatticeVector& b) {
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

/// Allocation-free pre-screen for planar candidate sets. Mirrors the checks
/// of build_semigroup; anything it accepts must validate.
class PlanarScreen {
public:
    explicit PlanarScreen(const std::vector<LatticeVector>& universe) : universe_(universe) {}

    /// In the plane, a candidate set that spans a two-dimensional cone always
    /// has exactly two extreme rays, containment and smallest-on-ray hold by
    /// construction, so minimality is the only remaining filter.
    bool accept(const std::vector<std::size_t>& pick) {
        bool planar = false;
        for (std::size_t idx : pick) {
            if (cross(universe_[idx], universe_[pick[0]]) != 0) {
                planar = true;
                break;
            }
        }
        if (!planar) return false; // one ray only, never two extreme rays

        // Minimality: no member of the set is reachable from the others.
        for (std::size_t g : pick)
            if (reachable(universe_[g], pick, g)) return false;
        return true;
    }

private:
    bool reachable(const LatticeVector& target, const std::vector<std::size_t>& pick,
                   std::size_t skip) {
        const std::int64_t nx = target[0] + 1, ny = target[1] + 1;
        table_.assign(static_cast<std::size_t>(nx * ny), 0);
        table_[0] = 1;
        for (std::int64_t x = 0; x < nx; ++x) {
            for (std::int64_t y = 0; y < ny; ++y) {
                if (!table_[static_cast<std::size_t>(x * ny + y)]) continue;
                for (std::size_t g : pick) {
                    if (g == skip) continue;
                    const std::int64_t gx = universe_[g][0], gy = universe_[g][1];
                    if (x + gx < nx && y + gy < ny)
                        table_[static_cast<std::size_t>((x + gx) * ny + y + gy)] = 1;
                }
            }
        }
        return table_.back() != 0;
    }

    const std::vector<LatticeVector>& universe_;
    std::vector<std::uint8_t> table_;
};

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

void sweep_random(const SweepSpec& spec, const std::vector<LatticeVector>& universe,
                  const InstanceSink& sink) {
    std::mt19937_64 rng(spec.seed.value_or(0));
    std::uint64_t produced = 0;
    std::uint64_t target = *spec.random_count;
    if (spec.count_limit) target = std::min(target, *spec.count_limit);
    std::vector<std::size_t> indices(universe.size());
    const std::uint64_t attempt_cap = std::max<std::uint64_t>(1'000'000, target * 10'000);
    for (std::uint64_t attempt = 0; produced < target; ++attempt) {
        if (attempt >= attempt_cap)
            throw std::runtime_error("random sweep failed to produce enough valid instances");
        const std::size_t r =
            spec.codim_lo + static_cast<std::size_t>(bounded(rng, spec.codim_hi - spec.codim_lo + 1));
        const std::size_t k = spec.d + r;
        if (k > universe.size()) continue;
        for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
        std::vector<LatticeVector> pick;
        pick.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(bounded(rng, indices.size() - i));
            std::swap(indices[i], indices[j]);
            pick.push_back(universe[indices[i]]);
        }
        std::sort(pick.begin(), pick.end());
        auto built = build_semigroup(pick);
        if (!built) continue;
        ++produced;
        if (!sink(built.value())) return;
    }
}

} // namespace

void sweep(const SweepSpec& spec, const InstanceSink& sink) {
    if (spec.d == 0 || spec.max_coordinate < 1 || spec.codim_hi < spec.codim_lo)
        throw std::invalid_argument("malformed sweep spec");
    const std::vector<LatticeVector> universe = coordinate_universe(spec.d, spec.max_coordinate);

    if (spec.random_count) {
        sweep_random(spec, universe, sink);
        return;
    }

    std::optional<PlanarScreen> screen;
    if (spec.d == 2) screen.emplace(universe);

    std::uint64_t produced = 0;
    std::vector<LatticeVector> pick_vectors;
    for (std::size_t r = spec.codim_lo; r <= spec.codim_hi; ++r) {
        const std::size_t k = spec.d + r;
        if (k > universe.size()) continue;
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            if (!screen || screen->accept(pick)) {
                pick_vectors.clear();
                for (std::size_t idx : pick) pick_vectors.push_back(universe[idx]);
                auto built = build_semigroup(pick_vectors);
                if (screen && !built)
                    throw InternalInvariantViolation(
                        "planar screen accepted a set that fails validation: " +
                        built.error().str());
                if (built) {
                    ++produced;
                    if (!sink(built.value())) return;
                    if (spec.count_limit && produced >= *spec.count_limit) return;
                }
            }
            // next k-combination in lexicographic order
            std::size_t i = k;
            while (i-- > 0) {
                if (pick[i] + (k - i) < universe.size()) break;
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

const std::vector<std::string>& theorem_check_ids() {
    static const std::vector<std::string> ids = {
        "type_lower_bound",
        "type_upper_codim3",
        "edim_lower_type_eq_d",
        "edim_lower_type_gt_d",
        "type_bound_unique_expression",
        "type_bound_unique_expression_codim3",
        "two_maximal_in_trace",
        "collinear_forces_gorenstein",
        "hyperplane_forces_gorenstein",
        "trace_extremal_forces_independent",
    };
    return ids;
}

std::vector<Violation> verify_theorems(const ClassificationReport& report,
                                       std::vector<std::string>* applied,
                                       const Limits& limits) {
    std::vector<Violation> violations;
    const AffineSemigroup& s = report.semigroup;
    const std::size_t d = s.dim();
    const std::size_t r = s.codim();
    const std::size_t edim = s.embedding_dim();
    const std::int64_t type = static_cast<std::int64_t>(report.type_count);

    const bool cm = report.is_cm;
    const bool ng = cm && report.is_nearly_gorenstein.value_or(false);
    const bool gor = report.is_gorenstein;

    auto record = [&](const std::string& id, bool holds, const std::string& expected,
                      const std::string& observed) {
        if (applied) applied->push_back(id);
        if (!holds) violations.push_back({s.generators(), id, expected, observed});
    };

    if (ng && !gor)
        record("type_lower_bound", type >= static_cast<std::int64_t>(d),
               "type >= " + std::to_string(d), "type = " + std::to_string(type));

    if (ng && !gor && r == 3)
        record("type_upper_codim3", type <= 3, "type <= 3", "type = " + std::to_string(type));

    if (ng && type == static_cast<std::int64_t>(d))
        record("edim_lower_type_eq_d", edim >= 2 * d - 1,
               "edim >= " + std::to_string(2 * d - 1), "edim = " + std::to_string(edim));

    if (ng && type > static_cast<std::int64_t>(d))
        record("edim_lower_type_gt_d", edim >= 2 * d, "edim >= " + std::to_string(2 * d),
               "edim = " + std::to_string(edim));

    bool some_assigned_unique = false;
    if (ng) {
        for (const auto& t : report.t_assign)
            if (t && unique_expression(report.apery, *t)) some_assigned_unique = true;
    }
    if (ng && some_assigned_unique) {
        record("type_bound_unique_expression", type <= static_cast<std::int64_t>(r) + 1,
               "type <= " + std::to_string(r + 1), "type = " + std::to_string(type));
        if (r == 3)
            record("type_bound_unique_expression_codim3", type <= 3, "type <= 3",
                   "type = " + std::to_string(type));
    }

    if (cm && type == 2) {
        MembershipEngine engine(s, limits);
        engine.attach(report.apery);
        bool both = in_trace(engine, report.apery.maximal[0]).present() &&
                    in_trace(engine, report.apery.maximal[1]).present();
        record("two_maximal_in_trace", both, "both maximal elements in the trace",
               "at least one maximal element outside the trace");
    }

    if (cm && d >= 2 && r >= 1) {
        bool collinear = true;
        const LatticeVector dir = s.others()[0].primitive();
        for (const auto& g : s.others())
            if (g.primitive() != dir) collinear = false;
        if (collinear && ng)
            record("collinear_forces_gorenstein", gor,
                   "Gorenstein (collinear non-extremal generators, nearly Gorenstein)",
                   "type = " + std::to_string(type));

        if (rational_rank(s.others()) <= d - 1 && ng)
            record("hyperplane_forces_gorenstein", gor,
                   "Gorenstein (non-extremal generators in a hyperplane, nearly Gorenstein)",
                   "type = " + std::to_string(type));
    }

    if (cm && edim == 2 * d && !gor && !report.generator_trace_flags.empty()) {
        bool extremal_in_trace = true;
        for (std::size_t i = 0; i < d; ++i)
            if (!report.generator_trace_flags[i]) extremal_in_trace = false;
        if (extremal_in_trace) {
            bool independent = rational_rank(s.others()) == d;
            bool all_unique = true;
            for (const auto& w : report.apery.elements)
                if (!unique_expression(report.apery, w)) all_unique = false;
            record("trace_extremal_forces_independent", independent && all_unique,
                   "independent non-extremal generators and unique expressions",
                   independent ? "an Apery element with several expressions"
                               : "dependent non-extremal generators");
        }
    }

    return violations;
}

namespace {

struct WorkResult {
    std::string jsonl_line;
    std::string csv_line;
    std::vector<Violation> violations;
    std::vector<std::string> applied;
};

WorkResult process_instance(const AffineSemigroup& s, std::uint64_t index,
                            const Limits& limits) {
    WorkResult out;
    try {
        ClassificationReport report = classification_report(s, limits);
        out.violations = verify_theorems(report, &out.applied, limits);
        out.jsonl_line = sweep_line_json(index, report, out.violations, out.applied);
        out.csv_line = sweep_line_csv(report, out.violations);
    } catch (const InternalInvariantViolation& err) {
        // A structural fact failed: surface it through the violation channel
        // so the sweep can finish and report instead of dying mid-stream.
        out.violations.push_back({s.generators(), "internal_invariant", "holds", err.what()});
        out.jsonl_line = sweep_error_json(index, s, err.what());
        out.csv_line = sweep_error_csv(s);
    }
    return out;
}

} // namespace

SweepOutcome run_sweep(const SweepSpec& spec, const Limits& limits, unsigned jobs,
                       std::ostream* jsonl, std::ostream* csv,
                       std::vector<Violation>* collect) {
    SweepOutcome outcome;
    for (const auto& id : theorem_check_ids()) {
        outcome.applied[id] = 0;
        outcome.skipped[id] = 0;
    }
    if (csv) *csv << sweep_csv_header() << '\n';

    const std::size_t batch_size = jobs > 1 ? 256 : 1;
    std::vector<AffineSemigroup> batch;
    batch.reserve(batch_size);
    std::uint64_t next_index = 0;

    auto flush = [&](std::vector<AffineSemigroup>& items) {
        std::vector<WorkResult> results(items.size());
        if (jobs > 1 && items.size() > 1) {
            std::atomic<std::size_t> cursor{0};
            auto worker = [&]() {
                for (;;) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= items.size()) return;
                    results[i] = process_instance(items[i], next_index + i, limits);
                }
            };
            std::vector<std::thread> pool;
            const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(items.size()));
            pool.reserve(n);
            for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        } else {
            for (std::size_t i = 0; i < items.size(); ++i)
                results[i] = process_instance(items[i], next_index + i, limits);
        }
        for (auto& res : results) {
            ++outcome.instances;
            outcome.violation_count += res.violations.size();
            for (const auto& id : res.applied) ++outcome.applied[id];
            for (const auto& id : theorem_check_ids())
                if (std::find(res.applied.begin(), res.applied.end(), id) == res.applied.end())
                    ++outcome.skipped[id];
            if (collect)
                collect->insert(collect->end(), res.violations.begin(), res.violations.end());
            if (jsonl) *jsonl << res.jsonl_line << '\n';
            if (csv) *csv << res.csv_line << '\n';
        }
        next_index += items.size();
        items.clear();
    };

    sweep(spec, [&](const AffineSemigroup& s) {
        batch.push_back(s);
        if (batch.size() >= batch_size) flush(batch);
        return true;
    });
    flush(batch);
    return outcome;
}

} // namespace sgclass
