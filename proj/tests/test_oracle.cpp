#include <doctest.h>

#include "dengue.hpp"
#include "pxp/errors.hpp"
#include "pxp/generator.hpp"
#include "pxp/oracle.hpp"
#include "testkit.hpp"

using namespace pxp;

TEST_CASE("dengue predicates") {
    auto p = testkit::dengue_problem();
    CHECK(waxp_holds(p, {4, 6}));
    CHECK(waxp_holds(p, {1, 4}));
    CHECK(waxp_holds(p, {1, 2, 4, 6}));
    CHECK_FALSE(waxp_holds(p, {1, 2, 6}));
    CHECK_FALSE(waxp_holds(p, {4}));
    CHECK(wcxp_holds(p, {4}));
    CHECK(wcxp_holds(p, {1, 6}));
    CHECK_FALSE(wcxp_holds(p, {1, 2}));
    CHECK_FALSE(wcxp_holds(p, {}));
}

TEST_CASE("tree oracle matches exhaustive checking") {
    GeneratorOptions opt;
    for (bool integers : {false, true}) {
        opt.integer_features = integers;
        ProblemGenerator gen(23, opt);
        for (int t = 0; t < 80; ++t) {
            auto p = gen.next();
            TreeOracle oracle(p);
            for (const auto& w : testkit::subsets(p.specified())) {
                bool expected = testkit::entails(p, w);
                REQUIRE(oracle.waxp_holds(w) == expected);
                CHECK(oracle.last_nodes_visited() <= p.tree().size());
                REQUIRE(oracle.wcxp_holds(p.specified() - w) == !expected);
            }
        }
    }
}

TEST_CASE("oracle bookkeeping") {
    auto p = testkit::dengue_problem();
    TreeOracle oracle(p);
    CHECK(oracle.calls() == 0);
    oracle.waxp_holds({4});
    oracle.wcxp_holds({4});
    CHECK(oracle.calls() == 2);
    oracle.reset_calls();
    CHECK(oracle.calls() == 0);
    CHECK_THROWS_AS(oracle.waxp_holds({3}), UsageError);
    CHECK_THROWS_AS(oracle.wcxp_holds({1, 5}), UsageError);
}

TEST_CASE("scripted oracle answers only what it was given") {
    ScriptedOracle o({1, 2}, {{FeatureSet{1}, true}}, {{FeatureSet{2}, false}});
    CHECK(o.waxp_holds({1}));
    CHECK_FALSE(o.wcxp_holds({2}));
    CHECK_THROWS_AS(o.waxp_holds({2}), ScriptError);
    CHECK_THROWS_AS(o.wcxp_holds({1}), ScriptError);
    CHECK(o.log().size() == 4);
    CHECK(o.log()[1].first == XpKind::CXp);
}

TEST_CASE("constrained predicate against exhaustive checking") {
    GeneratorOptions opt;
    opt.integer_features = true;
    ProblemGenerator gen(31, opt);
    for (int t = 0; t < 60; ++t) {
        auto p = gen.next();
        auto c = gen.random_constraint(p.space(), 1 + t % 3);
        ConstrainedTreeOracle oracle(p, c);
        for (const auto& w : testkit::subsets(p.specified())) {
            bool expected = testkit::entails_under(p, w, c);
            REQUIRE(constrained_waxp(p, w, c) == expected);
            REQUIRE(oracle.waxp_holds(w) == expected);
        }
        // An empty constraint allows everything.
        for (const auto& w : testkit::subsets(p.specified()))
            REQUIRE(constrained_waxp(p, w, InputConstraint{}) == waxp_holds(p, w));
    }
}

TEST_CASE("constraints over real features are refused") {
    auto p = testkit::dengue_problem();
    InputConstraint c;
    c.add_clause({{1, {35.0}}});
    CHECK_THROWS_AS(constrained_waxp(p, {4}, c), UnsupportedError);
}

TEST_CASE("an unsatisfiable constraint makes every set a weak AXp") {
    ProblemGenerator gen(5);
    auto p = gen.next();
    InputConstraint c;
    c.add_clause({});
    CHECK(constrained_waxp(p, {}, c));
}
