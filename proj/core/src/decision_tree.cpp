#include "pxp/decision_tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <string>

#include "pxp/errors.hpp"

namespace pxp {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

std::string where(const Node& n) { return "node " + std::to_string(n.id); }

}  // namespace

std::size_t select_child(const Node& node, Value v) {
    if (const auto* t = std::get_if<ThresholdTest>(&node.test)) return v <= t->threshold ? 0 : 1;
    if (const auto* s = std::get_if<ValueSetTest>(&node.test)) {
        for (std::size_t k = 0; k < s->branches.size(); ++k)
            if (std::find(s->branches[k].begin(), s->branches[k].end(), v) != s->branches[k].end()) return k;
        throw DomainError(where(node) + ": value not routed by any branch");
    }
    throw UsageError(where(node) + " is a leaf");
}

DecisionTree::DecisionTree(const FeatureSpace& space, std::vector<Node> nodes, std::size_t root)
    : nodes_(std::move(nodes)), root_(root), parent_(nodes_.size(), kNoParent) {
    if (nodes_.empty()) throw DomainError("tree has no nodes");
    if (root_ >= nodes_.size()) throw DomainError("root index out of range");

    std::set<int> ids;
    for (const auto& n : nodes_)
        if (!ids.insert(n.id).second) throw DomainError("duplicate node id " + std::to_string(n.id));

    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const Node& n = nodes_[k];
        if (n.is_leaf()) {
            if (!std::holds_alternative<std::monostate>(n.test) || n.feature != 0)
                throw DomainError(where(n) + ": leaf carries a test");
            if (!space.has_class(n.label)) throw DomainError(where(n) + ": unknown class " + std::to_string(n.label));
            continue;
        }
        if (!space.has_feature(n.feature)) throw DomainError(where(n) + ": unknown feature " + std::to_string(n.feature));
        const Domain& dom = space.domain(n.feature);
        if (const auto* t = std::get_if<ThresholdTest>(&n.test)) {
            if (!dom.is_ordered()) throw DomainError(where(n) + ": threshold split on categorical feature");
            if (!std::isfinite(t->threshold)) throw DomainError(where(n) + ": threshold is not finite");
            if (n.children.size() != 2) throw DomainError(where(n) + ": threshold split needs exactly 2 children");
        } else if (const auto* s = std::get_if<ValueSetTest>(&n.test)) {
            if (!dom.is_categorical()) throw DomainError(where(n) + ": value-set split on non-categorical feature");
            if (s->branches.size() != n.children.size())
                throw DomainError(where(n) + ": branch count differs from child count");
            if (s->branches.size() < 2) throw DomainError(where(n) + ": value-set split needs at least 2 branches");
            std::vector<int> hits(static_cast<std::size_t>(*dom.cardinality()), 0);
            for (const auto& b : s->branches) {
                if (b.empty()) throw DomainError(where(n) + ": empty branch");
                for (Value v : b) {
                    if (!dom.contains(v)) throw DomainError(where(n) + ": branch value outside domain");
                    if (++hits[static_cast<std::size_t>(v)] > 1)
                        throw DomainError(where(n) + ": split branches overlap");
                }
            }
            if (std::find(hits.begin(), hits.end(), 0) != hits.end())
                throw DomainError(where(n) + ": split does not cover domain");
        } else {
            throw DomainError(where(n) + ": internal node without a test");
        }
        for (std::size_t c : n.children) {
            if (c >= nodes_.size()) throw DomainError(where(n) + ": child index out of range");
            if (c == root_) throw DomainError(where(n) + ": root used as a child");
            if (parent_[c] != kNoParent) throw DomainError("node " + std::to_string(nodes_[c].id) + " has two parents");
            parent_[c] = k;
        }
    }
    // One parent each and reachable from the root rules out cycles.
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<std::size_t> stack{root_};
    while (!stack.empty()) {
        std::size_t k = stack.back();
        stack.pop_back();
        if (seen[k]) throw DomainError("cycle through node " + std::to_string(nodes_[k].id));
        seen[k] = true;
        for (std::size_t c : nodes_[k].children) stack.push_back(c);
    }
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        if (!seen[k]) throw DomainError(where(nodes_[k]) + " is not reachable from the root");
}

std::size_t DecisionTree::depth() const {
    std::function<std::size_t(std::size_t)> rec = [&](std::size_t k) -> std::size_t {
        std::size_t d = 0;
        for (std::size_t c : nodes_[k].children) d = std::max(d, 1 + rec(c));
        return d;
    };
    return rec(root_);
}

std::vector<std::size_t> DecisionTree::leaves() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        if (nodes_[k].is_leaf()) out.push_back(k);
    return out;
}

std::optional<std::size_t> DecisionTree::find(int id) const {
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        if (nodes_[k].id == id) return k;
    return std::nullopt;
}

std::vector<std::size_t> DecisionTree::path_to(std::size_t index) const {
    if (index >= nodes_.size()) throw UsageError("node index out of range");
    std::vector<std::size_t> path;
    for (std::size_t k = index; k != kNoParent; k = parent_[k]) path.push_back(k);
    std::reverse(path.begin(), path.end());
    return path;
}

std::size_t TreeBuilder::leaf(ClassId label) {
    Node n;
    n.id = static_cast<int>(nodes_.size());
    n.label = label;
    nodes_.push_back(n);
    return nodes_.size() - 1;
}

std::size_t TreeBuilder::threshold(FeatureId f, double t, std::size_t le, std::size_t gt) {
    Node n;
    n.id = static_cast<int>(nodes_.size());
    n.feature = f;
    n.test = ThresholdTest{t};
    n.children = {le, gt};
    nodes_.push_back(n);
    return nodes_.size() - 1;
}

std::size_t TreeBuilder::split(FeatureId f, std::vector<std::vector<Value>> branches, std::vector<std::size_t> children) {
    Node n;
    n.id = static_cast<int>(nodes_.size());
    n.feature = f;
    n.test = ValueSetTest{std::move(branches)};
    n.children = std::move(children);
    nodes_.push_back(n);
    return nodes_.size() - 1;
}

}  // namespace pxp
