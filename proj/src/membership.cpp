#include "sgclass/membership.hpp"

namespace sgclass {

bool member_dp(const AffineSemigroup& s, const LatticeVector& z, const Limits& limits) {
    return box_membership(s.generators(), z, limits.box_budget);
}

bool member_apery(const MembershipEngine& engine, const LatticeVector& z) {
    return apery_member(engine.semigroup(), engine.apery(), z);
}

ShiftAnswer shift_member(const MembershipEngine& engine, const LatticeVector& z,
                         std::size_t ray_index) {
    const AffineSemigroup& s = engine.semigroup();
    const AperyData& apery = engine.apery();
    const std::size_t d = s.dim();

    // z + lambda * a_i is in S iff z decomposes as w + sum c_k a_k with every
    // c_k integral, c_k >= 0 away from the shifted ray, and c_i >= -lambda.
    // The least lambda over all Apery remainders is the answer.
    ShiftAnswer answer;
    LatticeVector diff(d);
    for (const auto& w : apery.elements) {
        for (std::size_t k = 0; k < d; ++k) diff[k] = checked_sub(z[k], w[k]);
        auto coeffs = s.solver().solve_integral(diff);
        if (!coeffs) continue;
        bool valid = true;
        for (std::size_t k = 0; k < d; ++k) {
            if (k != ray_index && (*coeffs)[k] < 0) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        const std::int64_t lambda = (*coeffs)[ray_index] < 0 ? -(*coeffs)[ray_index] : 0;
        if (!answer.exists || lambda < answer.minimal_lambda) {
            answer.exists = true;
            answer.minimal_lambda = lambda;
        }
    }
    return answer;
}

} // namespace sgclass
