#include "pxp/generator.hpp"

#include <algorithm>
#include <functional>

#include "pxp/errors.hpp"

namespace pxp {

ProblemGenerator::ProblemGenerator(std::uint64_t seed, GeneratorOptions options) : opt_(options), rng_(seed) {}

int ProblemGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

std::vector<FeatureId> ProblemGenerator::shuffled(const FeatureSet& set) {
    std::vector<FeatureId> v(set.begin(), set.end());
    std::shuffle(v.begin(), v.end(), rng_);
    return v;
}

ModelPtr ProblemGenerator::random_model() {
    for (;;) {
        const int m = uniform(opt_.min_features, opt_.max_features);
        std::vector<FeatureDecl> features;
        std::vector<int> sizes;
        for (int i = 1; i <= m; ++i) {
            int d = uniform(opt_.min_domain, opt_.max_domain);
            sizes.push_back(d);
            features.push_back({"f" + std::to_string(i),
                                opt_.integer_features ? Domain::integer(0, d - 1) : Domain::categorical_of_size(d)});
        }

        std::vector<Node> nodes;
        // Features are not retested below themselves, so every leaf is reachable.
        std::function<std::size_t(int, std::vector<bool>)> grow = [&](int depth, std::vector<bool> used) {
            bool any_free = std::find(used.begin(), used.end(), false) != used.end();
            bool stop = depth >= opt_.max_depth || !any_free ||
                        (depth > 0 && std::uniform_real_distribution<double>(0, 1)(rng_) < 0.3);
            Node n;
            if (stop) {
                nodes.push_back(n);
                nodes.back().id = static_cast<int>(nodes.size() - 1);
                return nodes.size() - 1;
            }
            int f;
            do f = uniform(1, m); while (used[static_cast<std::size_t>(f - 1)]);
            used[static_cast<std::size_t>(f - 1)] = true;
            const int d = sizes[static_cast<std::size_t>(f - 1)];
            n.feature = f;
            std::size_t arity = 2;
            if (opt_.integer_features) {
                n.test = ThresholdTest{uniform(0, d - 2) + 0.5};
            } else {
                arity = static_cast<std::size_t>(uniform(2, d));
                std::vector<Value> vals;
                for (int v = 0; v < d; ++v) vals.push_back(v);
                std::shuffle(vals.begin(), vals.end(), rng_);
                std::vector<std::vector<Value>> branches(arity);
                for (std::size_t k = 0; k < vals.size(); ++k)
                    branches[k < arity ? k : static_cast<std::size_t>(uniform(0, static_cast<int>(arity) - 1))]
                        .push_back(vals[k]);
                for (auto& b : branches) std::sort(b.begin(), b.end());
                n.test = ValueSetTest{std::move(branches)};
            }
            std::vector<std::size_t> children;
            for (std::size_t k = 0; k < arity; ++k) children.push_back(grow(depth + 1, used));
            n.children = std::move(children);
            nodes.push_back(n);
            nodes.back().id = static_cast<int>(nodes.size() - 1);
            return nodes.size() - 1;
        };
        std::size_t root = grow(0, std::vector<bool>(static_cast<std::size_t>(m), false));

        std::vector<std::size_t> leaves;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (nodes[k].children.empty()) leaves.push_back(k);
        const int k_classes = std::min(uniform(opt_.min_classes, opt_.max_classes), static_cast<int>(leaves.size()));
        if (k_classes < 2) continue;
        std::shuffle(leaves.begin(), leaves.end(), rng_);
        for (std::size_t k = 0; k < leaves.size(); ++k)
            nodes[leaves[k]].label = k < static_cast<std::size_t>(k_classes) ? static_cast<ClassId>(k)
                                                                             : uniform(0, k_classes - 1);

        std::vector<ClassDecl> classes;
        for (int c = 0; c < k_classes; ++c) classes.push_back({"c" + std::to_string(c), std::nullopt});
        FeatureSpace space(std::move(features), std::move(classes));
        DecisionTree tree(space, std::move(nodes), root);
        return std::make_shared<const Model>(std::move(space), std::move(tree));
    }
}

ExplanationProblem ProblemGenerator::random_problem(const ModelPtr& model) {
    const FeatureSpace& space = model->space();
    Point x;
    for (FeatureId i = 1; i <= space.num_features(); ++i) {
        auto vals = space.domain(i).values();
        x.push_back(vals[static_cast<std::size_t>(uniform(0, static_cast<int>(vals.size()) - 1))]);
    }
    ClassSet targets{model->evaluate(x)};
    std::vector<ClassId> others;
    for (ClassId c = 0; c < space.num_classes(); ++c)
        if (!targets.contains(c)) {
            others.push_back(c);
            if (uniform(0, 1)) targets.insert(c);
        }
    if (static_cast<int>(targets.size()) == space.num_classes())
        targets.erase(others[static_cast<std::size_t>(uniform(0, static_cast<int>(others.size()) - 1))]);

    std::bernoulli_distribution drop(opt_.unspecify_probability);
    for (int attempt = 0; attempt < 64; ++attempt) {
        PartialInstance z = PartialInstance::from_point(x);
        for (FeatureId i = 1; i <= space.num_features(); ++i)
            if (drop(rng_)) z.set(i, std::nullopt);
        if (!z.specified().empty() && model->is_sufficient(z, targets)) return {model, std::move(z), targets};
    }
    return {model, PartialInstance::from_point(x), targets};
}

Point ProblemGenerator::random_cover(const ExplanationProblem& problem) {
    const auto& z = problem.instance();
    Point v;
    for (FeatureId i = 1; i <= z.num_features(); ++i) {
        if (z.is_specified(i)) {
            v.push_back(z.value(i));
        } else {
            auto vals = problem.space().domain(i).values();
            v.push_back(vals[static_cast<std::size_t>(uniform(0, static_cast<int>(vals.size()) - 1))]);
        }
    }
    return v;
}

InputConstraint ProblemGenerator::random_constraint(const FeatureSpace& space, int clauses) {
    InputConstraint out;
    for (int c = 0; c < clauses; ++c) {
        ConstraintClause clause;
        int lits = uniform(1, 2);
        for (int l = 0; l < lits; ++l) {
            FeatureId f = uniform(1, space.num_features());
            auto vals = space.domain(f).values();
            std::shuffle(vals.begin(), vals.end(), rng_);
            vals.resize(static_cast<std::size_t>(uniform(1, static_cast<int>(vals.size()))));
            std::sort(vals.begin(), vals.end());
            clause.push_back({f, std::move(vals)});
        }
        out.add_clause(std::move(clause));
    }
    return out;
}

}  // namespace pxp
