#pragma once

// Reference implementations used only by the tests. Nothing here calls into
// the library's reasoning code: points are enumerated directly and classified
// by a separate walk over the tree's nodes.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pxp/model.hpp"
#include "pxp/problem.hpp"
#include "pxp/probability.hpp"
#include "pxp/constraint.hpp"

namespace testkit {

using namespace pxp;

inline ClassId classify(const DecisionTree& tree, const Point& x) {
    const Node* n = &tree.root_node();
    while (!n->is_leaf()) {
        Value v = x[static_cast<std::size_t>(n->feature - 1)];
        std::size_t next = 0;
        if (const auto* t = std::get_if<ThresholdTest>(&n->test)) {
            next = v <= t->threshold ? 0 : 1;
        } else {
            const auto& branches = std::get<ValueSetTest>(n->test).branches;
            for (std::size_t k = 0; k < branches.size(); ++k)
                if (std::find(branches[k].begin(), branches[k].end(), v) != branches[k].end()) next = k;
        }
        n = &tree.node(n->children[next]);
    }
    return n->label;
}

// Values worth trying for feature f. Finite domains give every value; real
// domains give the bounds, every threshold used on f, and midpoints between
// neighbours, which is enough to reach every cell of the tree.
inline std::vector<Value> representatives(const Model& model, FeatureId f) {
    const Domain& d = model.space().domain(f);
    if (d.is_finite()) return d.values();
    std::set<Value> cuts{d.as_real().lo, d.as_real().hi};
    for (const Node& n : model.tree().nodes())
        if (n.feature == f)
            if (const auto* t = std::get_if<ThresholdTest>(&n.test)) cuts.insert(t->threshold);
    std::vector<Value> v(cuts.begin(), cuts.end());
    std::vector<Value> out = v;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) out.push_back((v[k] + v[k + 1]) / 2);
    std::sort(out.begin(), out.end());
    return out;
}

// Calls visit(x) for every representative point agreeing with z on `fixed`.
inline void for_each_completion(const Model& model, const PartialInstance& z, const FeatureSet& fixed,
                                const std::function<void(const Point&)>& visit) {
    int m = model.space().num_features();
    std::vector<std::vector<Value>> choices;
    for (FeatureId f = 1; f <= m; ++f)
        choices.push_back(fixed.contains(f) ? std::vector<Value>{z.value(f)} : representatives(model, f));
    Point x(static_cast<std::size_t>(m));
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
        for (int k = 0; k < m; ++k) x[k] = choices[k][idx[k]];
        visit(x);
        int k = 0;
        while (k < m && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == m) return;
    }
}

inline ClassSet reachable(const Model& model, const PartialInstance& z) {
    ClassSet out;
    for_each_completion(model, z, z.specified(), [&](const Point& x) { out.insert(classify(model.tree(), x)); });
    return out;
}

inline bool entails(const ExplanationProblem& p, const FeatureSet& w) {
    bool ok = true;
    for_each_completion(p.model(), p.instance(), w, [&](const Point& x) {
        if (!p.targets().count(classify(p.tree(), x))) ok = false;
    });
    return ok;
}

inline bool entails_under(const ExplanationProblem& p, const FeatureSet& w, const InputConstraint& c) {
    bool ok = true;
    for_each_completion(p.model(), p.instance(), w, [&](const Point& x) {
        if (c.allows(x) && !p.targets().count(classify(p.tree(), x))) ok = false;
    });
    return ok;
}

inline std::vector<FeatureSet> subsets(const FeatureSet& s) {
    auto ids = s.ids();
    std::vector<FeatureSet> out;
    for (std::uint32_t mask = 0; mask < (1u << ids.size()); ++mask) {
        FeatureSet t;
        for (std::size_t k = 0; k < ids.size(); ++k)
            if (mask >> k & 1) t.insert(ids[k]);
        out.push_back(t);
    }
    return out;
}

inline SetFamily minimal_satisfying(const FeatureSet& s, const std::function<bool(const FeatureSet&)>& pred) {
    std::vector<FeatureSet> yes;
    for (const auto& t : subsets(s))
        if (pred(t)) yes.push_back(t);
    SetFamily out;
    for (const auto& t : yes) {
        bool minimal = true;
        for (const auto& u : yes)
            if (u != t && u.is_subset_of(t)) minimal = false;
        if (minimal) out.insert(t);
    }
    return out;
}

inline SetFamily axps(const ExplanationProblem& p) {
    return minimal_satisfying(p.specified(), [&](const FeatureSet& w) { return entails(p, w); });
}

inline SetFamily cxps(const ExplanationProblem& p) {
    return minimal_satisfying(p.specified(), [&](const FeatureSet& y) { return !entails(p, p.specified() - y); });
}

inline Rational probability(const ExplanationProblem& p, const FeatureSet& x) {
    BigInt hit = 0, total = 0;
    for_each_completion(p.model(), p.instance(), x, [&](const Point& v) {
        ++total;
        if (p.targets().count(classify(p.tree(), v))) ++hit;
    });
    return Rational(hit, total);
}

inline std::string fixture(const std::string& name) {
    return (std::filesystem::path(PXP_FIXTURE_DIR) / name).string();
}

}  // namespace testkit
