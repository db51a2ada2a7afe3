#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revform/classic.hpp"
#include "support.hpp"

using namespace revform;
using testing_support::F;
using testing_support::P;

TEST_CASE("adjacency graph") {
    auto g = adjacency_graph(F("x y x"));
    CHECK(g.edges() == std::set<std::pair<std::string, std::string>>{{"x", "y"}, {"y", "x"}});
    CHECK(g.component_count() == 2);
    CHECK_FALSE(g.left_right_connected("x", "x"));
    CHECK(g.left_right_connected("x", "y"));

    g = adjacency_graph(F("x x"));
    CHECK(g.edges().size() == 1);
    CHECK(g.left_right_connected("x", "x"));
    CHECK(g.component_count() == 1);

    CHECK(adjacency_graph(F("x . y")).edges().empty());
    CHECK_THROWS_AS(adjacency_graph(F("x y~")), std::invalid_argument);
}

TEST_CASE("free sets") {
    CHECK(free_sets(F("x y x")) == std::vector<VarSet>{{"x"}, {"y"}});
    CHECK_FALSE(is_free_set(F("x y x"), {"x", "y"}));
    CHECK(free_sets(F("x x")).empty());
    auto z3 = free_sets(F("x1 x2 x1 x3 x1 x2 x1"));
    for (const VarSet& s : {VarSet{"x1"}, VarSet{"x2"}, VarSet{"x3"}, VarSet{"x2", "x3"}})
        CHECK(std::find(z3.begin(), z3.end(), s) != z3.end());
}

TEST_CASE("delete free set") {
    CHECK(delete_free_set(F("x y x"), {"y"}) == F("x x"));
    CHECK(delete_free_set(F("x y x"), {"x"}) == F("y"));
    CHECK(delete_free_set(F("x1 x2 x1 x3 x1 x2 x1"), {"x1"}) == F("x2 x3 x2"));
    CHECK_THROWS_AS(delete_free_set(F("x x"), {"x"}), std::invalid_argument);
}

TEST_CASE("find_reduction") {
    auto z3 = F("x1 x2 x1 x3 x1 x2 x1");
    auto chain = find_reduction(z3);
    REQUIRE(chain);
    REQUIRE(chain->size() == 3);
    CHECK((*chain)[0].deleted == VarSet{"x1"});
    CHECK((*chain)[1].deleted == VarSet{"x2"});
    CHECK((*chain)[2].deleted == VarSet{"x3"});
    CHECK((*chain)[1].formula == F("x2 x3 x2"));
    CHECK(verify_reduction(z3, *chain));

    // Deleting x3 first leads to x1 x2 x1 x1 x2 x1, which has no free set.
    auto dead = delete_free_set(z3, {"x3"});
    CHECK(dead == F("x1 x2 x1 x1 x2 x1"));
    CHECK(free_sets(dead).empty());

    CHECK_FALSE(find_reduction(F("x x")));
    auto empty = find_reduction(F("{}"));
    REQUIRE(empty);
    CHECK(empty->empty());
}

TEST_CASE("zimin_word") {
    CHECK(zimin_word(0).empty());
    CHECK(zimin_word(1) == F("x1"));
    CHECK(zimin_word(2) == F("x1 x2 x1"));
    CHECK(zimin_word(3) == F("x1 x2 x1 x3 x1 x2 x1"));
    CHECK(zimin_word(5).fragments()[0].size() == 31);
}

TEST_CASE("decide_classic") {
    auto v = decide_classic(F("x y x"));
    CHECK(v.unavoidable);
    REQUIRE(v.division);
    CHECK(verify_division(F("x y x"), zimin_word(2), *v.division));

    v = decide_classic(F("x x"));
    CHECK_FALSE(v.unavoidable);
    CHECK(v.division_status == SearchStatus::absent);

    auto phi = F("y1 y2 y3 y1 y2");
    v = decide_classic(phi);
    CHECK(v.unavoidable);
    REQUIRE(v.division);
    CHECK(verify_division(phi, zimin_word(3), *v.division));
    REQUIRE(v.chain);
    CHECK(verify_reduction(phi, *v.chain));
}

TEST_CASE("division into Z_n and reducibility agree") {
    // Both characterizations of unavoidability must give the same answer.
    for (std::size_t len = 1; len <= 6; ++len)
        for (const auto& p : testing_support::all_patterns(len, 3, false)) {
            Formula phi({p});
            auto v = decide_classic(phi);
            REQUIRE(v.division_status != SearchStatus::exhausted);
            CHECK_MESSAGE(v.unavoidable == find_reduction(phi).has_value(), phi.str());
        }
}

TEST_CASE("constrained division") {
    auto r = divide_into_zimin_constrained(F("x y x"), {"x"});
    REQUIRE(r.found());
    CHECK(r.morphism->at("x") == P("x1"));
    CHECK(r.morphism->at("y") == P("x2"));

    auto z3 = F("x1 x2 x1 x3 x1 x2 x1");
    r = divide_into_zimin_constrained(z3, {"x1"});
    REQUIRE(r.found());
    CHECK(r.morphism->at("x1") == P("x1"));
    CHECK(r.morphism->at("x2") == P("x2"));
    CHECK(r.morphism->at("x3") == P("x3"));

    // Deleting y leaves x x, which is avoidable, so the precondition fails.
    CHECK_THROWS_AS(divide_into_zimin_constrained(F("x y x"), {"y"}), std::invalid_argument);
    CHECK_THROWS_AS(divide_into_zimin_constrained(F("x y x"), {"x", "y"}), std::invalid_argument);
}
