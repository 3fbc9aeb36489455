#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sgclass/errors.hpp"
#include "sgclass/lattice.hpp"

namespace sgclass {

/// Reachability table for nonnegative integer combinations of a fixed
/// generator list over the box {p : 0 <= p <= bound componentwise}.
/// Cells are filled in row-major order, which is monotone with respect to
/// the componentwise order, so a single forward pass suffices.
class BoxTable {
public:
    BoxTable(std::span<const LatticeVector> generators, LatticeVector bound,
             std::int64_t cell_budget);

    /// Membership of z in the semigroup, for z inside the box or with a
    /// negative coordinate (the latter is always false). Asking about a
    /// nonnegative point outside the box is a caller bug.
    bool contains(const LatticeVector& z) const;

    const LatticeVector& bound() const { return bound_; }
    std::int64_t cells() const { return static_cast<std::int64_t>(reach_.size()); }

private:
    LatticeVector bound_;
    std::vector<std::int64_t> stride_;
    std::vector<std::uint8_t> reach_;
};

/// One-shot membership of z: true iff z is a nonnegative integer combination
/// of the generators. Negative coordinates short-circuit to false.
bool box_membership(std::span<const LatticeVector> generators, const LatticeVector& z,
                    std::int64_t cell_budget);

} // namespace sgclass
