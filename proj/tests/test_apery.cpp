#include <doctest.h>

#include <numeric>

#include "sgclass/membership.hpp"
#include "oracles.hpp"

using namespace sgclass;

namespace {

AffineSemigroup make(const std::vector<LatticeVector>& gens) {
    auto built = build_semigroup(gens);
    REQUIRE(built.ok());
    return built.value();
}

std::set<LatticeVector> element_set(const AperyData& apery) {
    return {apery.elements.begin(), apery.elements.end()};
}

} // namespace

TEST_CASE("span multiples for the reference instances") {
    AffineSemigroup fx1 = make({{6, 0}, {0, 6}, {2, 1}, {1, 2}});
    // others normalized to (1,2), (2,1); both need six copies.
    CHECK(compute_l_bounds(fx1) == std::vector<std::int64_t>{6, 6});

    AffineSemigroup fx5 =
        make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(compute_l_bounds(fx5) == std::vector<std::int64_t>{2, 2, 2});

    AffineSemigroup tiny = make({{2, 0}, {0, 2}, {1, 1}});
    CHECK(compute_l_bounds(tiny) == std::vector<std::int64_t>{2});
}

TEST_CASE("span multiple search respects the bound") {
    AffineSemigroup fx1 = make({{6, 0}, {0, 6}, {2, 1}, {1, 2}});
    Limits limits;
    limits.l_max = 3;
    CHECK_THROWS_AS(compute_l_bounds(fx1, limits), LBoundExceeded);
}

TEST_CASE("span multiples equal the lcm of the denominators of the exact coordinates") {
    std::mt19937_64 rng(31415);
    int instances = 0;
    while (instances < 20) {
        std::vector<LatticeVector> gens;
        const std::size_t n = 3 + testing::draw(rng, 3);
        for (std::size_t i = 0; i < n; ++i)
            gens.push_back(LatticeVector{static_cast<std::int64_t>(testing::draw(rng, 7)),
                                         static_cast<std::int64_t>(testing::draw(rng, 7))});
        auto built = build_semigroup(gens);
        if (!built) continue;
        ++instances;
        const AffineSemigroup& s = built.value();
        auto bounds = compute_l_bounds(s);
        for (std::size_t i = 0; i < s.others().size(); ++i) {
            RationalVector x = solve_extremal_coordinates(s, s.others()[i]);
            std::int64_t lcm = 1;
            for (const auto& c : x) lcm = std::lcm(lcm, c.den());
            CHECK(bounds[i] == lcm);
        }
    }
}

TEST_CASE("apery of the punctured-spectrum instance") {
    AffineSemigroup s = make({{6, 0}, {0, 6}, {2, 1}, {1, 2}});
    AperyData apery = compute_apery(s);
    const std::set<LatticeVector> expected = {{0, 0}, {2, 1}, {4, 2}, {6, 3}, {1, 2}, {2, 4},
                                              {3, 6}, {3, 3}, {5, 4}, {4, 5}, {7, 5}, {5, 7}};
    CHECK(element_set(apery) == expected);
    CHECK(apery.maximal == std::vector<LatticeVector>{{5, 7}, {7, 5}});

    // Independent derivation: scan the whole candidate box with the naive
    // recursive oracle.
    auto oracle_set = testing::oracle_apery_in_box(s.generators(), s.extremal(), {16, 16});
    CHECK(element_set(apery) == oracle_set);
}

TEST_CASE("apery of the dimension-three instance") {
    AffineSemigroup s = make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    AperyData apery = compute_apery(s);
    const std::set<LatticeVector> expected = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    CHECK(element_set(apery) == expected);
    CHECK(apery.maximal ==
          std::vector<LatticeVector>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

TEST_CASE("free semigroup has the trivial apery set") {
    AffineSemigroup s = make({{1, 0}, {0, 1}});
    AperyData apery = compute_apery(s);
    CHECK(apery.elements == std::vector<LatticeVector>{{0, 0}});
    CHECK(apery.maximal == std::vector<LatticeVector>{{0, 0}});
    CHECK(apery.reps.at({0, 0}).size() == 1);
    CHECK(apery.reps.at({0, 0}).count({}) == 1);
}

TEST_CASE("apery elements reject every extremal subtraction") {
    AffineSemigroup s = make({{0, 3}, {3, 1}, {1, 2}, {2, 2}, {3, 3}});
    AperyData apery = compute_apery(s);
    for (const auto& w : apery.elements)
        for (const auto& a : s.extremal()) CHECK_FALSE(member_dp(s, w - a));
    // and excluded candidates admit one
    std::vector<std::int64_t> tuple(s.others().size(), 0);
    auto bounds = apery.l_bounds;
    while (true) {
        LatticeVector v(s.dim());
        for (std::size_t i = 0; i < tuple.size(); ++i) v = v + tuple[i] * s.others()[i];
        if (!apery.is_element(v)) {
            bool some = false;
            for (const auto& a : s.extremal())
                if (member_dp(s, v - a)) some = true;
            CHECK(some);
        }
        std::size_t k = tuple.size();
        while (k-- > 0) {
            if (++tuple[k] < bounds[k]) break;
            tuple[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) break;
    }
}

TEST_CASE("divisibility order on apery elements") {
    AffineSemigroup s = make({{6, 0}, {0, 6}, {2, 1}, {1, 2}});
    AperyData apery = compute_apery(s);
    CHECK(precedes(s, apery, {2, 1}, {7, 5}));
    CHECK(precedes(s, apery, {3, 3}, {3, 3}));
    CHECK_FALSE(precedes(s, apery, {7, 5}, {5, 7}));
}

TEST_CASE("maximal elements form a dominating antichain") {
    for (const auto& gens : std::vector<std::vector<LatticeVector>>{
             {{6, 0}, {0, 6}, {2, 1}, {1, 2}},
             {{2, 0}, {0, 2}, {0, 3}, {1, 1}, {1, 2}},
             {{5, 0}, {0, 3}, {3, 1}, {1, 2}, {2, 2}},
             {{4, 0}, {0, 4}, {1, 3}, {3, 1}},
         }) {
        AffineSemigroup s = make(gens);
        AperyData apery = compute_apery(s);
        for (const auto& m : apery.maximal)
            for (const auto& n : apery.maximal)
                if (m != n) CHECK_FALSE(precedes(s, apery, m, n));
        for (const auto& w : apery.elements) {
            bool below = false;
            for (const auto& m : apery.maximal)
                if (precedes(s, apery, w, m)) below = true;
            CHECK(below);
        }
    }
}

TEST_CASE("decomposition identity covers the whole box") {
    AffineSemigroup s = make({{0, 3}, {3, 1}, {1, 2}, {2, 2}, {3, 3}});
    AperyData apery = compute_apery(s);
    testing::OracleMembership oracle(s.generators());
    for (std::int64_t x = 0; x <= 12; ++x) {
        for (std::int64_t y = 0; y <= 12; ++y) {
            LatticeVector z{x, y};
            if (!oracle.member(z)) continue;
            bool decomposed = false;
            for (const auto& w : apery.elements)
                if (in_free_extremal_span(s, z - w)) decomposed = true;
            CHECK(decomposed);
        }
    }
}

TEST_CASE("quasi-Frobenius elements and canonical degrees") {
    AffineSemigroup fx1 = make({{6, 0}, {0, 6}, {2, 1}, {1, 2}});
    AperyData apery = compute_apery(fx1);
    QFData qf = quasi_frobenius(fx1, apery);
    CHECK(qf.type_count == 2);
    CHECK(qf.qf == std::set<LatticeVector>{{1, -1}, {-1, 1}});
    CHECK(canonical_generators(fx1, apery) == std::set<LatticeVector>{{-1, 1}, {1, -1}});

    AffineSemigroup fx4 = make({{5, 0}, {0, 3}, {3, 1}, {1, 2}, {2, 2}});
    AperyData apery4 = compute_apery(fx4);
    CHECK(quasi_frobenius(fx4, apery4).type_count == 3);

    AffineSemigroup free2 = make({{1, 0}, {0, 1}});
    AperyData aperyf = compute_apery(free2);
    QFData qff = quasi_frobenius(free2, aperyf);
    CHECK(qff.type_count == 1);
    CHECK(qff.qf == std::set<LatticeVector>{{-1, -1}});
    CHECK(canonical_generators(free2, aperyf) == std::set<LatticeVector>{{1, 1}});

    AffineSemigroup fx5 =
        make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    AperyData apery5 = compute_apery(fx5);
    CHECK(canonical_generators(fx5, apery5) ==
          std::set<LatticeVector>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK(canonical_generators(fx5, apery5).size() ==
          quasi_frobenius(fx5, apery5).type_count);
}

TEST_CASE("unique expressions") {
    AffineSemigroup fx1 = make({{6, 0}, {0, 6}, {2, 1}, {1, 2}});
    AperyData apery = compute_apery(fx1);
    CHECK(unique_expression(apery, {7, 5}));
    CHECK_THROWS_AS(unique_expression(apery, {1, 1}), NotAperyElement);

    AffineSemigroup fx5 =
        make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    AperyData apery5 = compute_apery(fx5);
    CHECK(unique_expression(apery5, {1, 1, 0}));

    AffineSemigroup free2 = make({{1, 0}, {0, 1}});
    AperyData aperyf = compute_apery(free2);
    CHECK(unique_expression(aperyf, {0, 0}));

    // (6,6) = 3*(2,2) = 2*(3,3): two tuples for one vector.
    AffineSemigroup fx3 = make({{0, 3}, {3, 1}, {1, 2}, {2, 2}, {3, 3}});
    AperyData apery3 = compute_apery(fx3);
    REQUIRE(apery3.is_element({6, 6}));
    CHECK_FALSE(unique_expression(apery3, {6, 6}));
    CHECK(apery3.reps.at({6, 6}).size() >= 2);
}
