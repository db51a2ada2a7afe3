#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revform/zimin.hpp"
#include "support.hpp"

using namespace revform;
using testing_support::F;
using testing_support::P;

TEST_CASE("stats") {
    auto s = zimin_stats(2, 1);
    CHECK(s.fragment_count == 16);
    CHECK(s.fragment_length == 5);
    s = zimin_stats(0, 3);
    CHECK(s.fragment_count == 1);
    CHECK(s.fragment_length == 7);
    s = zimin_stats(1, 0);
    CHECK(s.fragment_count == 2);
    CHECK(s.fragment_length == 1);
    // (2^3)^(2^4) = 2^48
    CHECK(zimin_stats(3, 4).fragment_count == BigInt(1) << 48);
}

TEST_CASE("stats match enumeration") {
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 3; ++n) {
            auto s = zimin_stats(m, n);
            if (s.fragment_count > 4096) continue;
            auto frags = enumerate_fragments(m, n);
            if (m == 0 && n == 0) {
                CHECK(frags.empty());
                continue;
            }
            CHECK(BigInt(frags.size()) == s.fragment_count);
            for (const auto& p : frags) CHECK(BigInt(p.size()) == s.fragment_length);
        }
}

TEST_CASE("template") {
    CHECK(ZiminTemplate(1, 1).str() == "X1 y1 X1");
    CHECK(ZiminTemplate(2, 1).str() == "X1 X2 y1 X1 X2");
    CHECK(ZiminTemplate(0, 2).str() == "y1 y2 y1");
    CHECK(ZiminTemplate(1, 2).length() == 7);
}

TEST_CASE("enumerate_fragments") {
    CHECK(enumerate_fragments(1, 1) == F("x1 y1 x1 . x1 y1 x1~ . x1~ y1 x1 . x1~ y1 x1~"));
    CHECK(enumerate_fragments(1, 0) == F("x1 . x1~"));
    CHECK(enumerate_fragments(2, 0) == F("x1 x2 . x1 x2~ . x1~ x2 . x1~ x2~"));
    CHECK(enumerate_fragments(0, 3) == F("y1 y2 y1 y3 y1 y2 y1"));
    CHECK_THROWS_AS(enumerate_fragments(3, 3), std::length_error);
}

TEST_CASE("is_zimin_factor") {
    CHECK(is_zimin_factor(P("x1~ y1 x1"), 1, 1));
    CHECK_FALSE(is_zimin_factor(P("x1 x1"), 1, 0));
    CHECK(is_zimin_factor(P("y1 x1 y2"), 1, 2));
    CHECK_FALSE(is_zimin_factor(P("y1~"), 1, 1));
    CHECK_FALSE(is_zimin_factor(P("x2"), 1, 1));
    CHECK_FALSE(is_zimin_factor(P("y1 y1"), 1, 1));
    CHECK_FALSE(is_zimin_factor(P("z"), 1, 1));
}

TEST_CASE("divides_zimin") {
    auto r = divides_zimin(F("x y x~"), 1, 1);
    REQUIRE(r.found());
    CHECK(r.morphism->at("x") == P("x1"));
    CHECK(r.morphism->at("y") == P("y1"));

    CHECK(divides_zimin(F("x x~"), 1, 0).status == SearchStatus::absent);

    auto phi = F("x~ y1 x y2 x y3 x~ y1 x y2 x");
    r = divides_zimin(phi, 1, 3);
    REQUIRE(r.found());
    CHECK(verify_division(phi, enumerate_fragments(1, 3), *r.morphism));

    CHECK(divides_zimin(F("{}"), 0, 0).found());
}

TEST_CASE("divides_zimin agrees with division into the enumerated formula") {
    std::mt19937 rng(31);
    for (int t = 0; t < 150; ++t) {
        auto phi = normalize(Formula({testing_support::random_pattern(rng, 1 + rng() % 5, 2, true)}));
        auto c = count_vars(phi);
        if (zimin_stats(c.two_way, c.one_way).fragment_count > 256) continue;
        auto fast = divides_zimin(phi, c.two_way, c.one_way);
        auto slow = divides(phi, enumerate_fragments(c.two_way, c.one_way));
        REQUIRE(fast.status != SearchStatus::exhausted);
        REQUIRE(slow.status != SearchStatus::exhausted);
        CHECK_MESSAGE(fast.found() == slow.found(), phi.str());
    }
}

TEST_CASE("sufficient_length") {
    CHECK(sufficient_length(1, 0, 2) == 1);
    CHECK(sufficient_length(1, 1, 2) == 5);
    CHECK(sufficient_length(0, 1, 2) == 1);
    CHECK(sufficient_length(0, 2, 2) == 5);
    CHECK(sufficient_length(2, 0, 3) == 2);
    // l = 2: 2^2 * 3 + 2
    CHECK(sufficient_length(2, 1, 2) == 14);
    CHECK_THROWS_AS(sufficient_length(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sufficient_length(1, 5, 2), std::overflow_error);
}
