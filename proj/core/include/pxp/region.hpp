#pragma once

#include <cstdint>
#include <vector>

#include "pxp/decision_tree.hpp"
#include "pxp/instance.hpp"

namespace pxp {

/// The set of values a feature may still take along a tree path.
/// Categorical: explicit mask. Integer: [lo, hi]. Real: (lo, hi] or [lo, hi].
/// Upper bounds are always closed since they only come from `x <= t` tests.
class FeatureRange {
public:
    static FeatureRange full(const Domain& domain);
    static FeatureRange point(const Domain& domain, Value v);

    bool empty() const;
    bool contains(Value v) const;
    /// Number of values in a finite range.
    std::uint64_t count() const;
    /// A deterministic member: first allowed label, lowest integer, real midpoint.
    Value pick() const;
    /// All members of a finite range.
    std::vector<Value> values() const;

    /// Intersect with the region routed to `child` by `node`.
    void restrict_to_child(const Node& node, std::size_t child);

private:
    enum class Kind { Categorical, Integer, Real };
    Kind kind_ = Kind::Categorical;
    std::vector<bool> allowed_;
    double lo_ = 0.0;
    double hi_ = 0.0;
    bool lo_open_ = false;
};

using Box = std::vector<FeatureRange>;  // entry k is feature k+1

/// Depth-first walk of the tree under `fixing`: specified features are pinned,
/// the rest range over their domains. Every leaf whose root path is consistent
/// is passed to `visit(leaf, box)`; `visit` returns true to stop early.
/// Returns whether the walk was stopped. `visited` (optional) receives the
/// number of tree nodes entered.
template <typename Visitor>
bool walk_consistent_leaves(const FeatureSpace& space, const DecisionTree& tree, const PartialInstance& fixing,
                            Visitor&& visit, std::size_t* visited = nullptr);

Box initial_box(const FeatureSpace& space, const PartialInstance& fixing);

namespace detail {

template <typename Visitor>
bool walk(const DecisionTree& tree, std::size_t k, Box& box, Visitor& visit, std::size_t& visited) {
    ++visited;
    const Node& n = tree.node(k);
    if (n.is_leaf()) return visit(n, static_cast<const Box&>(box));
    auto& range = box[static_cast<std::size_t>(n.feature - 1)];
    for (std::size_t c = 0; c < n.children.size(); ++c) {
        FeatureRange saved = range;
        range.restrict_to_child(n, c);
        bool stop = !range.empty() && walk(tree, n.children[c], box, visit, visited);
        range = std::move(saved);
        if (stop) return true;
    }
    return false;
}

}  // namespace detail

template <typename Visitor>
bool walk_consistent_leaves(const FeatureSpace& space, const DecisionTree& tree, const PartialInstance& fixing,
                            Visitor&& visit, std::size_t* visited) {
    Box box = initial_box(space, fixing);
    std::size_t count = 0;
    bool stopped = detail::walk(tree, tree.root(), box, visit, count);
    if (visited) *visited = count;
    return stopped;
}

}  // namespace pxp
