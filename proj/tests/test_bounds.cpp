#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "avoid/bounds.hpp"
#include "avoid/rational.hpp"

using namespace avoid;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(22, 15).str() == "22/15");
    CHECK(Rational(4, 2) == Rational(2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(7, 8) * Rational(20) == Rational(35, 2));
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(129, 8).floor() == 16);
    CHECK(Rational::parse("22/15") == Rational(22, 15));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
    CHECK(Rational(22, 15) < Rational(3, 2));
}

TEST_CASE("amplification_ratio") {
    CHECK(amplification_ratio(Rational(22, 15)) == Rational(7, 8));
    CHECK(amplification_ratio(Rational(131, 90)) == Rational(41, 49));
    CHECK(amplification_ratio(Rational(3, 2)) == Rational(1));
    CHECK_THROWS_AS(amplification_ratio(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(amplification_ratio(Rational(2)), std::invalid_argument);
}

TEST_CASE("solve_symmetric_system") {
    auto b = solve_symmetric_system(Rational(35, 2), Rational(7, 8));
    REQUIRE(b);
    CHECK(*b == Rational(140));
    auto b2 = solve_symmetric_system(Rational(129, 49), Rational(41, 49));
    REQUIRE(b2);
    CHECK(*b2 == Rational(129, 8));
    auto zero = solve_symmetric_system(Rational(0), Rational(1, 2));
    REQUIRE(zero);
    CHECK(*zero == Rational(0));
    CHECK(!solve_symmetric_system(Rational(35, 2), Rational(1)));
    // Fixed-point identity B = c + r*B.
    CHECK(*b == Rational(35, 2) + Rational(7, 8) * *b);
}

TEST_CASE("derive_caps reproduces the two chains") {
    BoundReport thm2 = derive_caps(BoundTemplate::Thm2Shape, Rational(22, 15), 11);
    CHECK(thm2.short_var_max == 10);
    CHECK(thm2.r == Rational(7, 8));
    CHECK(thm2.c == Rational(35, 2));
    CHECK(thm2.finite);
    CHECK(thm2.long_var_max == 140);
    REQUIRE(thm2.paper_long_cap);
    CHECK(*thm2.paper_long_cap == 140);
    CHECK(*thm2.paper_short_cap == 10);

    BoundReport thm3 = derive_caps(BoundTemplate::Thm3Shape, Rational(131, 90), 4);
    CHECK(thm3.short_var_max == 3);
    CHECK(thm3.r == Rational(41, 49));
    CHECK(thm3.c == Rational(123, 49));
    CHECK(thm3.finite);
    CHECK(thm3.long_var_max == 15);
    // The stated chain uses c = 129/49 and cap 16; both are carried.
    REQUIRE(thm3.paper_long_cap);
    CHECK(*thm3.paper_long_cap == 16);
    CHECK(*thm3.paper_short_cap == 3);

    BoundReport boundary = derive_caps(BoundTemplate::Thm2Shape, Rational(3, 2), 11);
    CHECK(!boundary.finite);
}

TEST_CASE("derive_caps is monotone in d and beta") {
    // ascending
    std::vector<Rational> betas = {Rational(13, 10), Rational(4, 3), Rational(131, 90),
                                   Rational(22, 15), Rational(147, 100)};
    for (auto shape : {BoundTemplate::Thm2Shape, BoundTemplate::Thm3Shape}) {
        for (size_t i = 0; i + 1 < betas.size(); ++i) {
            for (int d = 2; d <= 12; ++d) {
                BoundReport lo = derive_caps(shape, betas[i], d);
                BoundReport hi = derive_caps(shape, betas[i + 1], d);
                if (lo.finite && hi.finite) CHECK(lo.long_var_max <= hi.long_var_max);
                BoundReport dplus = derive_caps(shape, betas[i], d + 1);
                CHECK(lo.short_var_max <= dplus.short_var_max);
                if (lo.finite && dplus.finite) CHECK(lo.long_var_max <= dplus.long_var_max);
            }
        }
    }
}
