#include <doctest.h>

#include "sgclass/lattice.hpp"
#include "sgclass/semigroup.hpp"
#include "oracles.hpp"

using namespace sgclass;

TEST_CASE("checked arithmetic rejects wraparound") {
    CHECK(checked_add(INT64_MAX - 1, 1) == INT64_MAX);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_neg(INT64_MIN), ArithmeticOverflow);
}

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(7, 2) - Rational(1, 2) == Rational(3));
    CHECK((Rational(7, 2) - Rational(1, 2)).is_integer());
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("lattice vectors compare lexicographically and stay exact") {
    LatticeVector a{2, 1};
    LatticeVector b{1, 2};
    CHECK(b < a);
    CHECK(a + b == LatticeVector{3, 3});
    CHECK(a - b == LatticeVector{1, -1});
    CHECK(3 * b == LatticeVector{3, 6});
    CHECK(LatticeVector{4, 6}.primitive() == LatticeVector{2, 3});
    CHECK(LatticeVector{0, 0}.primitive() == LatticeVector{0, 0});
    const LatticeVector big{INT64_MAX, 0};
    CHECK(big + LatticeVector{0, 0} == big);
    CHECK_THROWS_AS((big + LatticeVector{1, 0}), ArithmeticOverflow);
}

namespace {

const AffineSemigroup& fx1() {
    static const AffineSemigroup s = [] {
        std::vector<LatticeVector> gens = {{6, 0}, {0, 6}, {2, 1}, {1, 2}};
        return build_semigroup(gens).value();
    }();
    return s;
}

} // namespace

TEST_CASE("extremal coordinates solve exactly") {
    // Normalized extremal order is (0,6), (6,0).
    const AffineSemigroup& s = fx1();
    CHECK(solve_extremal_coordinates(s, {6, 0}) == RationalVector{0, 1});
    CHECK(solve_extremal_coordinates(s, {2, 1}) ==
          RationalVector{Rational(1, 6), Rational(1, 3)});
    CHECK(solve_extremal_coordinates(s, {0, 0}) == RationalVector{0, 0});
}

TEST_CASE("free span membership requires integral nonnegative coordinates") {
    const AffineSemigroup& s = fx1();
    CHECK(in_free_extremal_span(s, {6, 6}));
    CHECK(in_free_extremal_span(s, {12, 6}));
    CHECK_FALSE(in_free_extremal_span(s, {2, 1}));
    CHECK_FALSE(in_free_extremal_span(s, {-6, 0}));
}

TEST_CASE("extremal group membership allows signs") {
    std::vector<LatticeVector> gens = {{4, 0}, {0, 4}, {1, 3}, {3, 1}};
    AffineSemigroup s = build_semigroup(gens).value();
    CHECK(in_extremal_group(s, {-4, 4}));
    CHECK(in_extremal_group(s, LatticeVector{0, 0}));
    CHECK_FALSE(in_extremal_group(fx1(), {1, -1}));
}

TEST_CASE("solve round-trips random integral combinations") {
    std::mt19937_64 rng(12345);
    const AffineSemigroup& s = fx1();
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::int64_t> x(s.dim());
        LatticeVector z(s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i) {
            x[i] = static_cast<std::int64_t>(testing::draw(rng, 41)) - 20;
            z = z + x[i] * s.extremal()[i];
        }
        auto solved = s.solver().solve_integral(z);
        REQUIRE(solved.has_value());
        CHECK(*solved == x);
        RationalVector rational = solve_extremal_coordinates(s, z);
        for (std::size_t i = 0; i < s.dim(); ++i) CHECK(rational[i] == Rational(x[i]));
    }
}

TEST_CASE("every generator class has finite order in the quotient by the extremal lattice") {
    std::vector<std::vector<LatticeVector>> instances = {
        {{6, 0}, {0, 6}, {2, 1}, {1, 2}},
        {{0, 3}, {3, 1}, {1, 2}, {2, 2}, {3, 3}},
        {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}},
    };
    for (const auto& gens : instances) {
        AffineSemigroup s = build_semigroup(gens).value();
        const std::int64_t index_bound =
            s.solver().det() < 0 ? -s.solver().det() : s.solver().det();
        for (const auto& g : s.generators()) {
            bool found = false;
            for (std::int64_t n = 1; n <= index_bound; ++n) {
                if (in_extremal_group(s, n * g)) {
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
}
