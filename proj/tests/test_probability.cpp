#include <doctest.h>

#include "dengue.hpp"
#include "pxp/errors.hpp"
#include "pxp/generator.hpp"
#include "pxp/oracle.hpp"
#include "pxp/probability.hpp"
#include "testkit.hpp"

using namespace pxp;

TEST_CASE("balanced boolean stump gives one half") {
    FeatureSpace s({{"b", Domain::integer(0, 1)}, {"c", Domain::integer(0, 1)}}, {{"zero", {}}, {"one", {}}});
    TreeBuilder b;
    auto r = b.threshold(1, 0.5, b.leaf(0), b.leaf(1));
    auto m = std::make_shared<const Model>(s, b.build(s, r));
    auto z = PartialInstance::from_point({1, 0});
    ExplanationProblem p(m, z, {1});
    CHECK(paxp_probability(p, {}) == Rational(1, 2));
    CHECK(paxp_probability(p, {1}) == 1);
    CHECK(paxp_probability(p, {2}) == Rational(1, 2));
    CHECK_FALSE(is_weak_paxp(p, {}, Rational(2, 3)));
    CHECK(is_weak_paxp(p, {}, Rational(1, 2)));
}

TEST_CASE("probability against completion counting") {
    GeneratorOptions opt;
    for (bool integers : {false, true}) {
        opt.integer_features = integers;
        ProblemGenerator gen(61, opt);
        for (int t = 0; t < 120; ++t) {
            auto p = gen.next();
            for (const auto& x : testkit::subsets(p.specified())) {
                Rational pr = paxp_probability(p, x);
                REQUIRE(pr == testkit::probability(p, x));
                REQUIRE((pr == 1) == waxp_holds(p, x));
                CHECK(is_weak_paxp(p, x, 0));
                REQUIRE(is_weak_paxp(p, x, 1) == waxp_holds(p, x));
            }
        }
    }
}

TEST_CASE("probability preconditions") {
    auto p = testkit::dengue_problem();
    CHECK_THROWS_AS(paxp_probability(p, {4}), UnsupportedError);
    ProblemGenerator gen(2);
    auto q = gen.next();
    if (!q.unspecified().empty())
        CHECK_THROWS_AS(paxp_probability(q, {*q.unspecified().begin()}), UsageError);
    CHECK_THROWS_AS(is_weak_paxp(q, {}, Rational(3, 2)), UsageError);
    CHECK_THROWS_AS(is_weak_paxp(q, {}, Rational(-1, 2)), UsageError);
}

TEST_CASE("rational text") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("1") == 1);
    CHECK(parse_rational("010/08") == Rational(5, 4));
    CHECK(parse_rational("0.05") == Rational(1, 20));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK(format_rational(Rational(6, 8)) == "3/4");
    CHECK(format_rational(Rational(2)) == "2");
}
