#include "pxp/assess.hpp"

#include <algorithm>

#include "pxp/errors.hpp"
#include "pxp/extract.hpp"
#include "pxp/region.hpp"

namespace pxp {

Assessment assess(const ModelPtr& model, int leaf_id, const std::vector<Symptom>& symptoms) {
    const FeatureSpace& space = model->space();
    const DecisionTree& tree = model->tree();
    auto leaf = tree.find(leaf_id);
    if (!leaf || !tree.node(*leaf).is_leaf()) throw UsageError("node " + std::to_string(leaf_id) + " is not a leaf");
    for (const auto& s : symptoms) {
        if (!space.has_feature(s.feature)) throw UsageError("unknown symptom feature " + std::to_string(s.feature));
        if (space.domain(s.feature).is_real())
            throw UnsupportedError("symptom feature '" + space.name(s.feature) + "' must have a finite domain");
    }

    Assessment a;
    a.leaf_id = leaf_id;
    a.leaf_class = tree.node(*leaf).label;

    Box box = initial_box(space, PartialInstance::unspecified(space.num_features()));
    const auto path = tree.path_to(*leaf);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const Node& n = tree.node(path[k]);
        auto child = static_cast<std::size_t>(
            std::find(n.children.begin(), n.children.end(), path[k + 1]) - n.children.begin());
        box[static_cast<std::size_t>(n.feature - 1)].restrict_to_child(n, child);
        a.path_features.insert(n.feature);
    }
    for (const auto& r : box)
        if (r.empty()) throw DomainError("leaf " + std::to_string(leaf_id) + " lies on an inconsistent path");

    a.instance = PartialInstance::unspecified(space.num_features());
    for (FeatureId f : a.path_features) {
        const FeatureRange& r = box[static_cast<std::size_t>(f - 1)];
        auto s = std::find_if(symptoms.begin(), symptoms.end(), [&](const Symptom& s) { return s.feature == f; });
        if (s != symptoms.end()) {
            auto vals = r.values();
            bool active = std::all_of(vals.begin(), vals.end(), [&](Value v) {
                return std::find(s->positive.begin(), s->positive.end(), v) != s->positive.end();
            });
            if (active) {
                a.active_symptoms.insert(f);
                continue;
            }
        }
        a.instance.set(f, r.pick());
    }

    ClassSet targets{a.leaf_class};
    if (!model->is_sufficient(a.instance, targets)) return a;

    ExplanationProblem problem(model, a.instance, targets);
    a.outcome = AssessmentOutcome::Explained;
    a.axp = find_one_xp(problem, XpKind::AXp);
    FeatureSet symptom_features;
    for (const auto& s : symptoms) symptom_features.insert(s.feature);
    a.symptom_free = !a.axp->intersects(symptom_features);
    return a;
}

}  // namespace pxp
