#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgclass/membership.hpp"

namespace sgclass {

/// Outcome of the Cohen-Macaulay test: distinct Apery elements must fall in
/// distinct classes modulo the extremal lattice. A witness pair is the first
/// collision in canonical scan order.
struct CmResult {
    bool is_cm = true;
    std::optional<std::pair<LatticeVector, LatticeVector>> witness;
};

CmResult cohen_macaulay_check(const AffineSemigroup& s, const AperyData& apery);
bool is_cohen_macaulay(const AffineSemigroup& s, const AperyData& apery);

/// Certificate for membership of a vector in the trace ideal: the least index
/// i into the maximal Apery elements such that b + m_i - m_j stays in the
/// semigroup for every j. Absent means b is outside the trace.
struct TraceQuery {
    std::optional<std::size_t> witness_index;
    bool present() const { return witness_index.has_value(); }
};

/// Requires b in S (NotInSemigroup otherwise). The engine must carry Apery data.
TraceQuery in_trace(const MembershipEngine& engine, const LatticeVector& b);

bool is_gorenstein(const AffineSemigroup& s, const AperyData& apery);
bool is_nearly_gorenstein(const AffineSemigroup& s, const AperyData& apery,
                          const Limits& limits = {});

/// Per extremal ray, the unique maximal Apery element certifying that the ray
/// generator lies in the trace; disengaged entries mean it does not. The
/// uniqueness and the pairwise distinctness (at type >= 2) of the assigned
/// elements are structural facts; their failure is an internal error.
std::vector<std::optional<LatticeVector>> trace_assignment(const AffineSemigroup& s,
                                                           const AperyData& apery,
                                                           const Limits& limits = {});

struct GpsResult {
    bool is_gps = false;
    /// Per extremal ray: least lambda with lambda * a_i in the trace.
    /// Meaningful only when is_gps.
    std::vector<std::int64_t> lambda;
};

/// Gorenstein on the punctured spectrum: every extremal ray has a positive
/// multiple in the trace ideal.
GpsResult gps_check(const AffineSemigroup& s, const AperyData& apery, const Limits& limits = {});
bool is_gps(const AffineSemigroup& s, const AperyData& apery, const Limits& limits = {});

/// The finite complement of the trace ideal inside the semigroup; nullopt
/// when the complement is infinite (exactly when the semigroup is not
/// Gorenstein on the punctured spectrum).
std::optional<std::set<LatticeVector>> trace_gaps(const AffineSemigroup& s,
                                                  const AperyData& apery,
                                                  const Limits& limits = {});

struct ClassificationReport {
    AffineSemigroup semigroup;
    AperyData apery;

    bool is_cm = false;
    std::optional<std::pair<LatticeVector, LatticeVector>> cm_witness;

    std::size_t type_count = 0;
    std::set<LatticeVector> qf;
    std::set<LatticeVector> canonical_degrees;

    bool is_gorenstein = false;
    std::optional<bool> is_nearly_gorenstein; // absent without Cohen-Macaulayness
    std::optional<bool> is_gps;               // absent without Cohen-Macaulayness

    /// Aligned with semigroup.extremal(); populated only under Cohen-Macaulayness.
    std::vector<std::optional<LatticeVector>> t_assign;
    /// Aligned with semigroup.generators(); empty unless Cohen-Macaulay.
    std::vector<bool> generator_trace_flags;

    std::optional<std::vector<std::int64_t>> gps_lambda;
    std::optional<std::set<LatticeVector>> trace_gaps; // absent when infinite or not CM

    std::vector<std::string> caveats;
};

/// Runs the whole ladder and cross-checks the structural invariants
/// (implication chain, type lower bound, assignment uniqueness). Violations
/// of those invariants raise InternalInvariantViolation.
ClassificationReport classification_report(const AffineSemigroup& s, const Limits& limits = {});

} // namespace sgclass
