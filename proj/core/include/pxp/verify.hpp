#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pxp/constraint.hpp"
#include "pxp/oracle.hpp"
#include "pxp/probability.hpp"

namespace pxp {

/// Ground truth by exhaustion over every point of a finite feature space.
/// Only Model::evaluate is trusted; no path reasoning is involved.
struct BruteForceResult {
    SetFamily all_weak_axps;
    SetFamily axps;
    SetFamily all_weak_cxps;
    SetFamily cxps;
    std::uint64_t completions_examined = 0;
};

/// Guards: |S| <= 12 and at most 10^6 points, else CapacityError.
BruteForceResult brute_force_xps(const ExplanationProblem& problem);

/// Every point of a finite feature space (CapacityError above `limit`).
std::vector<Point> enumerate_points(const FeatureSpace& space, std::uint64_t limit = 1'000'000);

/// { evaluate(v) : v covered by z } by enumeration.
ClassSet brute_force_prediction_set(const Model& model, const PartialInstance& z);

/// Frequency of in-target predictions among completions fixing X.
Rational brute_force_paxp(const ExplanationProblem& problem, const FeatureSet& x);

/// Weak AXp under a constraint, checked over every allowed completion.
bool brute_force_constrained_waxp(const ExplanationProblem& problem, const FeatureSet& w,
                                  const InputConstraint& constraint);

/// The minimal members of a family.
SetFamily minimal_sets(const SetFamily& family);

/// Oracle answering by point enumeration; independent of the tree walk.
class BruteForceOracle : public XpOracle {
public:
    explicit BruteForceOracle(const ExplanationProblem& problem);

protected:
    bool decide_waxp(const FeatureSet& w) override;

private:
    // Agreement masks (over S, bit k = k-th specified feature) of off-target points.
    std::vector<std::uint32_t> off_target_masks_;
    std::vector<FeatureId> order_;
};

/// A relaxed problem and the problem obtained by concretizing its instance to
/// a covered point v with evaluate(v) in T.
class RefinementPair {
public:
    /// Throws DomainError unless v is covered by the instance and predicts in T.
    RefinementPair(ExplanationProblem relaxed, const Point& cover);

    const ExplanationProblem& relaxed() const { return relaxed_; }
    const ExplanationProblem& refined() const { return refined_; }

private:
    ExplanationProblem relaxed_;
    ExplanationProblem refined_;
};

/// AXps of the relaxed problem are AXps of the refined one, and every CXp Y
/// of the relaxed problem extends to a refined CXp W with Y <= W <= Y | U.
bool check_refinement(const RefinementPair& pair);
bool check_refinement_families(const BruteForceResult& relaxed, const BruteForceResult& refined,
                               const FeatureSet& unspecified);

/// The sequence of fixed sets X_r = S, ..., X_{r+s} visited while extracting
/// an AXp. Each step must drop features and stay a weak AXp.
class DeletionChain {
public:
    DeletionChain(const ExplanationProblem& problem, std::vector<FeatureSet> sets);
    const std::vector<FeatureSet>& sets() const { return sets_; }

private:
    std::vector<FeatureSet> sets_;
};

/// For each X_j: MHS duality inside the induced problem; AXps of later
/// problems are AXps of earlier ones; CXps of later problems extend to CXps
/// of earlier ones.
bool check_nested_duality(const ExplanationProblem& problem, const DeletionChain& chain);

/// Hitting sets of the AXps are weak CXps; hitting sets of the CXps are weak AXps.
bool check_hitting_lemmas(const ExplanationProblem& problem);

}  // namespace pxp
