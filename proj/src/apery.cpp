#include "sgclass/apery.hpp"

#include <algorithm>

#include "sgclass/boxdp.hpp"

namespace sgclass {

bool AperyData::is_element(const LatticeVector& v) const {
    return std::binary_search(elements.begin(), elements.end(), v);
}

std::vector<std::int64_t> compute_l_bounds(const AffineSemigroup& s, const Limits& limits) {
    std::vector<std::int64_t> bounds;
    bounds.reserve(s.others().size());
    for (const auto& g : s.others()) {
        std::int64_t l = 0;
        for (std::int64_t cand = 1; cand <= limits.l_max; ++cand) {
            if (in_free_extremal_span(s, cand * g)) {
                l = cand;
                break;
            }
        }
        if (l == 0) throw LBoundExceeded(limits.l_max);
        bounds.push_back(l);
    }
    return bounds;
}

AperyData compute_apery(const AffineSemigroup& s, const Limits& limits) {
    AperyData data;
    data.l_bounds = compute_l_bounds(s, limits);
    const std::size_t r = s.others().size();
    const std::size_t d = s.dim();

    // Candidates are exactly the coefficient tuples below the span bounds;
    // distinct tuples can hit the same vector, and all of them are kept.
    LatticeVector box_bound(d);
    for (std::size_t i = 0; i < r; ++i)
        box_bound = box_bound + (data.l_bounds[i] - 1) * s.others()[i];

    std::map<LatticeVector, std::set<std::vector<std::int64_t>>> candidates;
    std::vector<std::int64_t> tuple(r, 0);
    LatticeVector value(d);
    while (true) {
        candidates[value].insert(tuple);
        std::size_t k = r;
        while (k-- > 0) {
            if (tuple[k] + 1 < data.l_bounds[k]) {
                ++tuple[k];
                value = value + s.others()[k];
                break;
            }
            value = value - tuple[k] * s.others()[k];
            tuple[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) break;
    }

    // One reachability table over the candidate box answers every
    // "candidate minus extremal" query below.
    BoxTable table(s.generators(), box_bound, limits.box_budget);
    for (auto& [v, reps] : candidates) {
        bool in_apery = true;
        for (const auto& a : s.extremal()) {
            bool negative = false;
            LatticeVector diff(d);
            for (std::size_t k = 0; k < d; ++k) {
                diff[k] = v[k] - a[k];
                if (diff[k] < 0) negative = true;
            }
            if (!negative && table.contains(diff)) {
                in_apery = false;
                break;
            }
        }
        if (in_apery) {
            data.elements.push_back(v);
            data.reps.emplace(v, std::move(reps));
        }
    }

    // Pairwise divisibility scan; the Apery set is small once the candidates
    // are filtered.
    for (const auto& m : data.elements) {
        bool is_max = true;
        for (const auto& w : data.elements) {
            if (w == m) continue;
            bool negative = false;
            LatticeVector diff(d);
            for (std::size_t k = 0; k < d; ++k) {
                diff[k] = w[k] - m[k];
                if (diff[k] < 0) negative = true;
            }
            if (!negative && table.contains(diff)) {
                is_max = false;
                break;
            }
        }
        if (is_max) data.maximal.push_back(m);
    }
    return data;
}

bool apery_member(const AffineSemigroup& s, const AperyData& apery, const LatticeVector& z) {
    if (!z.is_nonnegative()) return false;
    const std::size_t d = s.dim();
    LatticeVector diff(d);
    for (const auto& w : apery.elements) {
        bool negative = false;
        for (std::size_t k = 0; k < d; ++k) {
            diff[k] = z[k] - w[k];
            if (diff[k] < 0) {
                negative = true;
                break;
            }
        }
        if (!negative && in_free_extremal_span(s, diff)) return true;
    }
    return false;
}

bool precedes(const AffineSemigroup& s, const AperyData& apery, const LatticeVector& b,
              const LatticeVector& a) {
    return apery_member(s, apery, a - b);
}

QFData quasi_frobenius(const AffineSemigroup& s, const AperyData& apery) {
    QFData qf;
    const LatticeVector shift = s.extremal_sum();
    for (const auto& m : apery.maximal) qf.qf.insert(m - shift);
    qf.type_count = apery.maximal.size();
    if (qf.qf.size() != qf.type_count)
        throw InternalInvariantViolation("quasi-Frobenius elements must be pairwise distinct");
    return qf;
}

std::set<LatticeVector> canonical_generators(const AffineSemigroup& s, const AperyData& apery) {
    std::set<LatticeVector> degrees;
    const LatticeVector shift = s.extremal_sum();
    for (const auto& m : apery.maximal) degrees.insert(shift - m);
    return degrees;
}

bool unique_expression(const AperyData& apery, const LatticeVector& w) {
    auto it = apery.reps.find(w);
    if (it == apery.reps.end()) throw NotAperyElement();
    return it->second.size() == 1;
}

} // namespace sgclass
