#include "pxp/extract.hpp"

#include <algorithm>
#include <set>

#include "pxp/errors.hpp"

namespace pxp {

std::vector<FeatureId> TraversalOrder::arrange(const FeatureSet& seed, const FeatureSet& universe) const {
    std::vector<FeatureId> out(seed.begin(), seed.end());
    switch (mode_) {
    case Mode::Ascending:
        break;
    case Mode::Descending:
        std::reverse(out.begin(), out.end());
        break;
    case Mode::Explicit: {
        FeatureSet covered(perm_);
        if (covered.size() != perm_.size() || covered != universe)
            throw UsageError("explicit order must list each feature of " + universe.str() + " exactly once");
        out.clear();
        for (FeatureId i : perm_)
            if (seed.contains(i)) out.push_back(i);
        break;
    }
    }
    return out;
}

Extraction extract_xp(XpOracle& oracle, XpKind kind, const FeatureSet& seed, const TraversalOrder& order) {
    Extraction ex;
    ex.result = seed;
    ex.chain.push_back(seed);
    for (FeatureId i : order.arrange(seed, oracle.specified())) {
        FeatureSet candidate = ex.result.without(i);
        if (oracle.holds(kind, candidate)) {
            ex.result = std::move(candidate);
            ex.chain.push_back(ex.result);
        }
    }
    return ex;
}

FeatureSet find_one_xp(XpOracle& oracle, XpKind kind, const TraversalOrder& order) {
    return extract_xp(oracle, kind, oracle.specified(), order).result;
}

FeatureSet find_one_xp(const ExplanationProblem& problem, XpKind kind, const TraversalOrder& order) {
    TreeOracle oracle(problem);
    return find_one_xp(oracle, kind, order);
}

bool is_necessary(XpOracle& oracle, FeatureId i) {
    if (!oracle.specified().contains(i))
        throw UsageError("feature " + std::to_string(i) + " is not specified");
    return !oracle.waxp_holds(oracle.specified().without(i));
}

bool is_necessary(const ExplanationProblem& problem, FeatureId i) {
    TreeOracle oracle(problem);
    return is_necessary(oracle, i);
}

}  // namespace pxp
