#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "sgclass/semigroup.hpp"

namespace sgclass {

/// The Apery set of the semigroup with respect to all extremal rays: the
/// elements that fall outside the semigroup after subtracting any single
/// extremal generator. Every element is recorded together with all of its
/// coefficient tuples over the non-extremal generators.
struct AperyData {
    /// Per non-extremal generator: the least positive multiple lying in the
    /// free span of the extremal rays. Coefficient tuples below these bounds
    /// exhaust the Apery candidates.
    std::vector<std::int64_t> l_bounds;
    std::vector<LatticeVector> elements;                              // sorted
    std::map<LatticeVector, std::set<std::vector<std::int64_t>>> reps;
    std::vector<LatticeVector> maximal;                               // sorted

    bool is_element(const LatticeVector& v) const;
};

std::vector<std::int64_t> compute_l_bounds(const AffineSemigroup& s, const Limits& limits = {});

AperyData compute_apery(const AffineSemigroup& s, const Limits& limits = {});

/// Membership via the Apery decomposition: z is in the semigroup iff some
/// Apery element leaves a remainder in the free extremal span.
bool apery_member(const AffineSemigroup& s, const AperyData& apery, const LatticeVector& z);

/// b precedes a in the divisibility order of the semigroup: a - b is a member.
bool precedes(const AffineSemigroup& s, const AperyData& apery, const LatticeVector& b,
              const LatticeVector& a);

/// Quasi-Frobenius data: one element per maximal Apery element, shifted by
/// the sum of the extremal rays. Their count is the type.
struct QFData {
    std::set<LatticeVector> qf;
    std::size_t type_count = 0;
};

QFData quasi_frobenius(const AffineSemigroup& s, const AperyData& apery);

/// Generator degrees of the canonical module: the negatives of the
/// quasi-Frobenius elements. Their count equals the type.
std::set<LatticeVector> canonical_generators(const AffineSemigroup& s, const AperyData& apery);

/// True when w admits exactly one coefficient tuple over the non-extremal
/// generators. Throws NotAperyElement for vectors outside the Apery set.
bool unique_expression(const AperyData& apery, const LatticeVector& w);

} // namespace sgclass
