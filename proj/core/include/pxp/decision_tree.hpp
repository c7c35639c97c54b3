#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "pxp/feature_space.hpp"

namespace pxp {

/// Two children: child 0 takes x <= threshold, child 1 takes x > threshold.
struct ThresholdTest {
    double threshold = 0.0;
    friend bool operator==(const ThresholdTest&, const ThresholdTest&) = default;
};

/// One child per branch; branch k lists the categorical values routed to child k.
/// The branches partition the feature's domain.
struct ValueSetTest {
    std::vector<std::vector<Value>> branches;
    friend bool operator==(const ValueSetTest&, const ValueSetTest&) = default;
};

using Test = std::variant<std::monostate, ThresholdTest, ValueSetTest>;

struct Node {
    int id = 0;              // external id, as written in model documents
    FeatureId feature = 0;   // 0 on leaves
    Test test;
    std::vector<std::size_t> children;  // indices into DecisionTree::nodes()
    ClassId label = -1;      // leaves only

    bool is_leaf() const { return children.empty(); }
    friend bool operator==(const Node&, const Node&) = default;
};

/// Index of the child of `node` whose test accepts `v`.
std::size_t select_child(const Node& node, Value v);

/// Rooted tree of feature tests with class-labelled leaves. Structure (single
/// root, one parent per node, arity, split/domain fit, categorical partitions)
/// is validated on construction; see Model for the class-level checks.
class DecisionTree {
public:
    DecisionTree(const FeatureSpace& space, std::vector<Node> nodes, std::size_t root);

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(std::size_t index) const { return nodes_.at(index); }
    const Node& root_node() const { return nodes_[root_]; }
    std::size_t root() const { return root_; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t depth() const;

    std::vector<std::size_t> leaves() const;
    /// Index of the node with external id `id`.
    std::optional<std::size_t> find(int id) const;
    /// Node indices from the root down to `index`, inclusive.
    std::vector<std::size_t> path_to(std::size_t index) const;

    friend bool operator==(const DecisionTree& a, const DecisionTree& b) {
        return a.root_ == b.root_ && a.nodes_ == b.nodes_;
    }

private:
    std::vector<Node> nodes_;
    std::size_t root_;
    std::vector<std::size_t> parent_;
};

/// Convenience construction for tests and fixtures. Node ids equal indices.
class TreeBuilder {
public:
    std::size_t leaf(ClassId label);
    std::size_t threshold(FeatureId f, double t, std::size_t le, std::size_t gt);
    std::size_t split(FeatureId f, std::vector<std::vector<Value>> branches, std::vector<std::size_t> children);

    DecisionTree build(const FeatureSpace& space, std::size_t root) const { return DecisionTree(space, nodes_, root); }
    const std::vector<Node>& nodes() const { return nodes_; }

private:
    std::vector<Node> nodes_;
};

}  // namespace pxp
