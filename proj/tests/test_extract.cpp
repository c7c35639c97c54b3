#include <doctest.h>

#include <algorithm>

#include "dengue.hpp"
#include "pxp/errors.hpp"
#include "pxp/extract.hpp"
#include "pxp/generator.hpp"
#include "pxp/oracle.hpp"
#include "testkit.hpp"

using namespace pxp;

TEST_CASE("dengue extraction under several orders") {
    auto p = testkit::dengue_problem();
    CHECK(find_one_xp(p, XpKind::AXp) == FeatureSet{4, 6});
    CHECK(find_one_xp(p, XpKind::AXp, TraversalOrder::descending()) == FeatureSet{1, 4});
    CHECK(find_one_xp(p, XpKind::CXp) == FeatureSet{4});
    CHECK(find_one_xp(p, XpKind::CXp, TraversalOrder::descending()) == FeatureSet{4});
    CHECK(find_one_xp(p, XpKind::CXp, TraversalOrder::explicit_order({4, 2, 1, 6})) == FeatureSet{1, 6});
}

TEST_CASE("deletion chain records every kept set") {
    auto p = testkit::dengue_problem();
    TreeOracle o(p);
    auto ex = extract_xp(o, XpKind::AXp, p.specified());
    CHECK(ex.result == FeatureSet{4, 6});
    REQUIRE(ex.chain.size() >= 2);
    CHECK(ex.chain.front() == p.specified());
    CHECK(ex.chain.back() == ex.result);
}

TEST_CASE("explicit orders must be permutations") {
    auto p = testkit::dengue_problem();
    CHECK_THROWS_AS(find_one_xp(p, XpKind::AXp, TraversalOrder::explicit_order({1, 2, 4})), UsageError);
    CHECK_THROWS_AS(find_one_xp(p, XpKind::AXp, TraversalOrder::explicit_order({1, 2, 3, 4, 6})), UsageError);
}

TEST_CASE("extracted sets are minimal explanations") {
    ProblemGenerator gen(41);
    for (int t = 0; t < 100; ++t) {
        auto p = gen.next();
        auto ax = testkit::axps(p);
        auto cx = testkit::cxps(p);
        for (int r = 0; r < 3; ++r) {
            auto order = TraversalOrder::explicit_order(gen.shuffled(p.specified()));
            TreeOracle o(p);
            auto a = find_one_xp(o, XpKind::AXp, order);
            CHECK(o.calls() == p.specified().size());
            auto c = find_one_xp(p, XpKind::CXp, order);
            REQUIRE(ax.count(a));
            REQUIRE(cx.count(c));
        }
    }
}

TEST_CASE("necessity matches membership in every AXp") {
    ProblemGenerator gen(43);
    for (int t = 0; t < 100; ++t) {
        auto p = gen.next();
        auto ax = testkit::axps(p);
        for (FeatureId i : p.specified()) {
            bool every = std::all_of(ax.begin(), ax.end(), [&](const FeatureSet& a) { return a.contains(i); });
            REQUIRE(is_necessary(p, i) == every);
        }
    }
}
