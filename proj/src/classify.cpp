#include "sgclass/classify.hpp"

#include <algorithm>
#include <map>

namespace sgclass {

CmResult cohen_macaulay_check(const AffineSemigroup& s, const AperyData& apery) {
    // Two Apery elements differ by an extremal-lattice vector iff they share
    // a residue modulo that lattice; scanning in canonical order makes the
    // reported witness deterministic.
    std::map<std::vector<std::int64_t>, const LatticeVector*> seen;
    for (const auto& w : apery.elements) {
        auto [it, inserted] = seen.emplace(s.solver().lattice_residue(w), &w);
        if (!inserted) return {false, std::make_pair(*it->second, w)};
    }
    return {true, std::nullopt};
}

bool is_cohen_macaulay(const AffineSemigroup& s, const AperyData& apery) {
    return cohen_macaulay_check(s, apery).is_cm;
}

TraceQuery in_trace(const MembershipEngine& engine, const LatticeVector& b) {
    if (!engine.member(b)) throw NotInSemigroup();
    const auto& maximal = engine.apery().maximal;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        bool all_in = true;
        for (std::size_t j = 0; j < maximal.size(); ++j) {
            if (!engine.member(b + maximal[i] - maximal[j])) {
                all_in = false;
                break;
            }
        }
        if (all_in) return {i};
    }
    return {std::nullopt};
}

bool is_gorenstein(const AffineSemigroup& s, const AperyData& apery) {
    if (!is_cohen_macaulay(s, apery)) throw NotCohenMacaulay();
    return apery.maximal.size() == 1;
}

namespace {

MembershipEngine make_engine(const AffineSemigroup& s, const AperyData& apery,
                             const Limits& limits) {
    MembershipEngine engine(s, limits);
    engine.attach(apery);
    return engine;
}

std::vector<std::optional<LatticeVector>> trace_assignment_unchecked(
    const AffineSemigroup& s, const AperyData& apery, const Limits& limits) {
    MembershipEngine engine = make_engine(s, apery, limits);
    const auto& maximal = apery.maximal;
    std::vector<std::optional<LatticeVector>> assign(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t hits = 0;
        for (std::size_t r = 0; r < maximal.size(); ++r) {
            bool all_in = true;
            for (std::size_t j = 0; j < maximal.size(); ++j) {
                if (!engine.member(s.extremal()[i] + maximal[r] - maximal[j])) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) {
                ++hits;
                assign[i] = maximal[r];
            }
        }
        if (hits > 1)
            throw InternalInvariantViolation(
                "extremal ray " + s.extremal()[i].str() + " certified by " +
                std::to_string(hits) + " maximal elements; exactly one is possible");
    }
    if (maximal.size() >= 2) {
        for (std::size_t i = 0; i < assign.size(); ++i)
            for (std::size_t j = i + 1; j < assign.size(); ++j)
                if (assign[i] && assign[j] && *assign[i] == *assign[j])
                    throw InternalInvariantViolation(
                        "distinct extremal rays share the assigned maximal element " +
                        assign[i]->str());
    }
    return assign;
}

GpsResult gps_check_unchecked(const AffineSemigroup& s, const AperyData& apery,
                              const Limits& limits) {
    MembershipEngine engine = make_engine(s, apery, limits);
    const auto& maximal = apery.maximal;
    GpsResult result;
    result.is_gps = true;
    result.lambda.assign(s.dim(), 0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        bool found = false;
        std::int64_t best = 0;
        for (const auto& m : maximal) {
            bool valid = true;
            std::int64_t needed = 0;
            for (const auto& n : maximal) {
                ShiftAnswer shift = shift_member(engine, m - n, i);
                if (!shift.exists) {
                    valid = false;
                    break;
                }
                needed = std::max(needed, shift.minimal_lambda);
            }
            if (valid && (!found || needed < best)) {
                found = true;
                best = needed;
            }
        }
        if (!found) {
            result.is_gps = false;
            result.lambda.clear();
            return result;
        }
        result.lambda[i] = best;
    }
    return result;
}

std::optional<std::set<LatticeVector>> trace_gaps_unchecked(const AffineSemigroup& s,
                                                            const AperyData& apery,
                                                            const Limits& limits) {
    GpsResult gps = gps_check_unchecked(s, apery, limits);
    if (!gps.is_gps) return std::nullopt;

    // Every semigroup element splits as an Apery element plus extremal
    // multiples; once any multiple reaches lambda_k the element is inside the
    // trace, so candidates for the complement keep all multiples below the
    // per-ray bounds.
    MembershipEngine engine = make_engine(s, apery, limits);
    std::set<LatticeVector> candidates;
    for (std::int64_t l : gps.lambda)
        if (l == 0) return std::set<LatticeVector>{};
    std::vector<std::int64_t> tuple(s.dim(), 0);
    while (true) {
        LatticeVector shift(s.dim());
        for (std::size_t k = 0; k < s.dim(); ++k) shift = shift + tuple[k] * s.extremal()[k];
        for (const auto& w : apery.elements) candidates.insert(w + shift);
        std::size_t k = s.dim();
        while (k-- > 0) {
            if (tuple[k] + 1 < gps.lambda[k]) {
                ++tuple[k];
                break;
            }
            tuple[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) break;
    }

    std::set<LatticeVector> gaps;
    for (const auto& b : candidates)
        if (!in_trace(engine, b).present()) gaps.insert(b);
    return gaps;
}

} // namespace

bool is_nearly_gorenstein(const AffineSemigroup& s, const AperyData& apery,
                          const Limits& limits) {
    if (!is_cohen_macaulay(s, apery)) throw NotCohenMacaulay();
    MembershipEngine engine = make_engine(s, apery, limits);
    for (const auto& g : s.generators())
        if (!in_trace(engine, g).present()) return false;
    return true;
}

std::vector<std::optional<LatticeVector>> trace_assignment(const AffineSemigroup& s,
                                                           const AperyData& apery,
                                                           const Limits& limits) {
    if (!is_cohen_macaulay(s, apery)) throw NotCohenMacaulay();
    return trace_assignment_unchecked(s, apery, limits);
}

GpsResult gps_check(const AffineSemigroup& s, const AperyData& apery, const Limits& limits) {
    if (!is_cohen_macaulay(s, apery)) throw NotCohenMacaulay();
    return gps_check_unchecked(s, apery, limits);
}

bool is_gps(const AffineSemigroup& s, const AperyData& apery, const Limits& limits) {
    return gps_check(s, apery, limits).is_gps;
}

std::optional<std::set<LatticeVector>> trace_gaps(const AffineSemigroup& s,
                                                  const AperyData& apery, const Limits& limits) {
    if (!is_cohen_macaulay(s, apery)) throw NotCohenMacaulay();
    return trace_gaps_unchecked(s, apery, limits);
}

ClassificationReport classification_report(const AffineSemigroup& s, const Limits& limits) {
    ClassificationReport report;
    report.semigroup = s;
    report.apery = compute_apery(s, limits);
    const AperyData& apery = report.apery;

    CmResult cm = cohen_macaulay_check(s, apery);
    report.is_cm = cm.is_cm;
    report.cm_witness = cm.witness;

    QFData qf = quasi_frobenius(s, apery);
    report.type_count = qf.type_count;
    report.qf = std::move(qf.qf);
    report.canonical_degrees = canonical_generators(s, apery);
    if (report.canonical_degrees.size() != report.type_count)
        throw InternalInvariantViolation("canonical degree count must equal the type");

    if (!report.is_cm) {
        report.is_gorenstein = false;
        report.caveats.push_back(
            "not Cohen-Macaulay: type is |max Apery(S,E)|, the Cohen-Macaulay type "
            "interpretation is invalid");
        report.caveats.push_back(
            "nearly-Gorenstein, punctured-spectrum and trace fields are undefined "
            "without Cohen-Macaulayness");
        return report;
    }

    report.is_gorenstein = report.type_count == 1;

    MembershipEngine engine = make_engine(s, apery, limits);
    report.generator_trace_flags.reserve(s.generators().size());
    bool all_generators_in_trace = true;
    for (const auto& g : s.generators()) {
        bool flag = in_trace(engine, g).present();
        report.generator_trace_flags.push_back(flag);
        all_generators_in_trace = all_generators_in_trace && flag;
    }
    report.is_nearly_gorenstein = all_generators_in_trace;

    report.t_assign = trace_assignment_unchecked(s, apery, limits);

    GpsResult gps = gps_check_unchecked(s, apery, limits);
    report.is_gps = gps.is_gps;
    if (gps.is_gps) {
        report.gps_lambda = gps.lambda;
        report.trace_gaps = trace_gaps_unchecked(s, apery, limits);
    }

    if (report.is_gorenstein && !*report.is_nearly_gorenstein)
        throw InternalInvariantViolation("Gorenstein implies nearly Gorenstein");
    if (*report.is_nearly_gorenstein && !*report.is_gps)
        throw InternalInvariantViolation(
            "nearly Gorenstein implies Gorenstein on the punctured spectrum");
    if (*report.is_nearly_gorenstein && !report.is_gorenstein &&
        report.type_count < s.dim())
        throw InternalInvariantViolation(
            "nearly Gorenstein non-Gorenstein semigroup with type below the dimension");

    return report;
}

} // namespace sgclass
