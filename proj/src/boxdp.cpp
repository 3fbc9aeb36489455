#include "sgclass/boxdp.hpp"

namespace sgclass {

BoxTable::BoxTable(std::span<const LatticeVector> generators, LatticeVector bound,
                   std::int64_t cell_budget)
    : bound_(std::move(bound)) {
    const std::size_t d = bound_.dim();
    std::int64_t cells = 1;
    for (std::size_t k = 0; k < d; ++k) {
        if (bound_[k] < 0) throw std::invalid_argument("box bound must be nonnegative");
        cells = checked_mul(cells, checked_add(bound_[k], 1));
        if (cells > cell_budget) throw BoxBudgetExceeded(cells, cell_budget);
    }
    // Row-major strides, last coordinate fastest.
    stride_.assign(d, 1);
    for (std::size_t k = d; k-- > 1;) stride_[k - 1] = stride_[k] * (bound_[k] + 1);

    // Keep only generators that fit in the box at all.
    struct Gen {
        std::vector<std::int64_t> coords;
        std::int64_t offset;
    };
    std::vector<Gen> gens;
    for (const auto& g : generators) {
        bool fits = true;
        std::int64_t offset = 0;
        for (std::size_t k = 0; k < d; ++k) {
            if (g[k] > bound_[k]) {
                fits = false;
                break;
            }
            offset += g[k] * stride_[k];
        }
        if (fits) gens.push_back({g.coords(), offset});
    }

    reach_.assign(static_cast<std::size_t>(cells), 0);
    reach_[0] = 1;
    std::vector<std::int64_t> p(d, 0); // odometer tracking the scan position
    for (std::int64_t idx = 0; idx < cells; ++idx) {
        if (reach_[static_cast<std::size_t>(idx)]) {
            for (const Gen& g : gens) {
                bool inside = true;
                for (std::size_t k = 0; k < d; ++k) {
                    if (p[k] + g.coords[k] > bound_[k]) {
                        inside = false;
                        break;
                    }
                }
                if (inside) reach_[static_cast<std::size_t>(idx + g.offset)] = 1;
            }
        }
        for (std::size_t k = d; k-- > 0;) {
            if (++p[k] <= bound_[k]) break;
            p[k] = 0;
        }
    }
}

bool BoxTable::contains(const LatticeVector& z) const {
    std::int64_t idx = 0;
    for (std::size_t k = 0; k < z.dim(); ++k) {
        if (z[k] < 0) return false;
        if (z[k] > bound_[k])
            throw std::out_of_range("membership query outside the precomputed box");
        idx += z[k] * stride_[k];
    }
    return reach_[static_cast<std::size_t>(idx)] != 0;
}

bool box_membership(std::span<const LatticeVector> generators, const LatticeVector& z,
                    std::int64_t cell_budget) {
    if (!z.is_nonnegative()) return false;
    if (z.is_zero()) return true;
    BoxTable table(generators, z, cell_budget);
    return table.contains(z);
}

} // namespace sgclass
