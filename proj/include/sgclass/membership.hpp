#pragma once

#include <cstdint>
#include <optional>

#include "sgclass/apery.hpp"
#include "sgclass/boxdp.hpp"

namespace sgclass {

/// Reachability oracle for z: dynamic program over the box below z. This is
/// the bootstrap engine; it needs nothing beyond the generators but its cost
/// grows with the box volume.
bool member_dp(const AffineSemigroup& s, const LatticeVector& z, const Limits& limits = {});

struct ShiftAnswer {
    bool exists = false;
    std::int64_t minimal_lambda = 0; // meaningful only when exists
};

/// Membership queries against a fixed semigroup. Starts from the box oracle;
/// once Apery data is attached the decomposition engine answers instead, with
/// identical verdicts and far less work per query.
class MembershipEngine {
public:
    explicit MembershipEngine(const AffineSemigroup& s, Limits limits = {})
        : s_(&s), limits_(limits) {}

    void attach(const AperyData& apery) { apery_ = &apery; }
    bool has_apery() const { return apery_ != nullptr; }

    const AffineSemigroup& semigroup() const { return *s_; }
    const AperyData& apery() const { return *apery_; }
    const Limits& limits() const { return limits_; }

    bool member(const LatticeVector& z) const {
        return apery_ ? apery_member(*s_, *apery_, z) : member_dp(*s_, z, limits_);
    }

private:
    const AffineSemigroup* s_;
    const AperyData* apery_ = nullptr;
    Limits limits_;
};

/// Same decomposition engine, explicit form.
bool member_apery(const MembershipEngine& engine, const LatticeVector& z);

/// Decides whether z + lambda * a_i lands in the semigroup for some natural
/// lambda, and reports the least such lambda. Membership along a ray is
/// upward closed, so the set of working lambdas is a final segment.
ShiftAnswer shift_member(const MembershipEngine& engine, const LatticeVector& z,
                         std::size_t ray_index);

} // namespace sgclass
