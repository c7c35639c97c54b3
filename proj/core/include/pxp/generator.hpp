#pragma once

#include <cstdint>
#include <random>

#include "pxp/constraint.hpp"
#include "pxp/problem.hpp"

namespace pxp {

struct GeneratorOptions {
    int min_features = 3;
    int max_features = 6;
    int min_domain = 2;
    int max_domain = 3;
    int max_depth = 4;
    int min_classes = 2;
    int max_classes = 4;
    /// Integer features with threshold splits instead of categorical partitions.
    bool integer_features = false;
    double unspecify_probability = 1.0 / 3.0;
};

/// Seeded source of random desk-scale explanation problems.
class ProblemGenerator {
public:
    explicit ProblemGenerator(std::uint64_t seed, GeneratorOptions options = {});

    ModelPtr random_model();
    /// Draws x, sets T to kappa(x) plus a random proper subset of the other
    /// classes, then unspecifies features at random until z is sufficient.
    ExplanationProblem random_problem(const ModelPtr& model);
    ExplanationProblem next() { return random_problem(random_model()); }

    /// A random point covered by the problem's instance predicting inside T.
    Point random_cover(const ExplanationProblem& problem);
    /// Up to `clauses` random clauses of one or two literals.
    InputConstraint random_constraint(const FeatureSpace& space, int clauses);
    /// A random permutation of `set`.
    std::vector<FeatureId> shuffled(const FeatureSet& set);

    std::mt19937_64& rng() { return rng_; }

private:
    int uniform(int lo, int hi);

    GeneratorOptions opt_;
    std::mt19937_64 rng_;
};

}  // namespace pxp
