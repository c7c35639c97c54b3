#include "pxp/probability.hpp"

#include <cctype>

#include "pxp/errors.hpp"
#include "pxp/region.hpp"

namespace pxp {

Rational paxp_probability(const ExplanationProblem& problem, const FeatureSet& x) {
    if (!x.is_subset_of(problem.specified()))
        throw UsageError("paxp: " + x.str() + " is not a subset of the specified features");
    const FeatureSpace& space = problem.space();
    for (FeatureId i = 1; i <= space.num_features(); ++i)
        if (space.domain(i).is_real())
            throw UnsupportedError("probability needs finite domains; feature '" + space.name(i) + "' is real");

    BigInt hits = 0;
    walk_consistent_leaves(space, problem.tree(), problem.instance().restricted_to(x),
                           [&](const Node& leaf, const Box& box) {
                               if (problem.targets().contains(leaf.label)) {
                                   BigInt n = 1;
                                   for (const auto& r : box) n *= r.count();
                                   hits += n;
                               }
                               return false;
                           });
    BigInt total = 1;
    for (FeatureId i = 1; i <= space.num_features(); ++i)
        if (!x.contains(i)) total *= *space.domain(i).cardinality();
    return Rational(hits, total);
}

bool is_weak_paxp(const ExplanationProblem& problem, const FeatureSet& x, const Rational& delta) {
    if (delta < 0 || delta > 1) throw UsageError("delta must lie in [0, 1]");
    return paxp_probability(problem, x) >= delta;
}

Rational parse_rational(const std::string& text) {
    auto bad = [&]() { return UsageError("malformed rational '" + text + "'"); };
    auto digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    // cpp_int reads a leading 0 as an octal prefix.
    auto decimal = [](const std::string& s) {
        auto nz = s.find_first_not_of('0');
        return BigInt(nz == std::string::npos ? "0" : s.substr(nz));
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::string p = text.substr(0, slash), q = text.substr(slash + 1);
        if (!digits(p) || !digits(q)) throw bad();
        BigInt den = decimal(q);
        if (den == 0) throw bad();
        return Rational(decimal(p), den);
    }
    auto dot = text.find('.');
    std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits(whole) || (dot != std::string::npos && !digits(frac))) throw bad();
    BigInt den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    return Rational(decimal(whole + frac), den);
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace pxp
