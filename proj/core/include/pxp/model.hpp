#pragma once

#include <memory>
#include <optional>

#include "pxp/decision_tree.hpp"
#include "pxp/instance.hpp"

namespace pxp {

/// A decision-tree classifier over a feature space.
///
/// Construction checks that the tree fits the space and that every class is
/// the label of at least one leaf with a consistent root path (the classifier
/// is surjective).
class Model {
public:
    Model(FeatureSpace space, DecisionTree tree);

    const FeatureSpace& space() const { return space_; }
    const DecisionTree& tree() const { return tree_; }

    /// Class of a fully specified point.
    ClassId evaluate(const Point& x) const;

    /// Classes predicted by some point covered by z. Computed from per-leaf
    /// path consistency, never by enumerating points.
    ClassSet prediction_set(const PartialInstance& z) const;

    /// A point v covered by z with evaluate(v) == c, if one exists.
    std::optional<Point> witness(const PartialInstance& z, ClassId c) const;

    /// prediction_set(z) is contained in targets.
    bool is_sufficient(const PartialInstance& z, const ClassSet& targets) const;

    friend bool operator==(const Model& a, const Model& b) { return a.space_ == b.space_ && a.tree_ == b.tree_; }

private:
    FeatureSpace space_;
    DecisionTree tree_;
};

using ModelPtr = std::shared_ptr<const Model>;

}  // namespace pxp
