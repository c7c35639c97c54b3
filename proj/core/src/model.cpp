#include "pxp/model.hpp"

#include "pxp/errors.hpp"
#include "pxp/region.hpp"

namespace pxp {

Model::Model(FeatureSpace space, DecisionTree tree) : space_(std::move(space)), tree_(std::move(tree)) {
    ClassSet reachable = prediction_set(PartialInstance::unspecified(space_.num_features()));
    for (ClassId c = 0; c < space_.num_classes(); ++c)
        if (!reachable.contains(c)) throw DomainError("class '" + space_.class_name(c) + "' is unreachable");
}

ClassId Model::evaluate(const Point& x) const {
    validate_point(space_, x);
    const Node* n = &tree_.root_node();
    while (!n->is_leaf()) {
        std::size_t c = select_child(*n, x[static_cast<std::size_t>(n->feature - 1)]);
        n = &tree_.node(n->children[c]);
    }
    return n->label;
}

ClassSet Model::prediction_set(const PartialInstance& z) const {
    z.validate(space_);
    ClassSet out;
    walk_consistent_leaves(space_, tree_, z, [&](const Node& leaf, const Box&) {
        out.insert(leaf.label);
        return static_cast<int>(out.size()) == space_.num_classes();
    });
    return out;
}

std::optional<Point> Model::witness(const PartialInstance& z, ClassId c) const {
    z.validate(space_);
    std::optional<Point> found;
    walk_consistent_leaves(space_, tree_, z, [&](const Node& leaf, const Box& box) {
        if (leaf.label != c) return false;
        Point p;
        p.reserve(box.size());
        for (const auto& r : box) p.push_back(r.pick());
        found = std::move(p);
        return true;
    });
    return found;
}

bool Model::is_sufficient(const PartialInstance& z, const ClassSet& targets) const {
    for (ClassId c : prediction_set(z))
        if (!targets.contains(c)) return false;
    return true;
}

}  // namespace pxp
