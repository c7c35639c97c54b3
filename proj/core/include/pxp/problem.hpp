#pragma once

#include "pxp/model.hpp"

namespace pxp {

/// A classifier, a partially specified instance z, and a target class set T
/// with T a nonempty proper subset of the classes and z sufficient for T.
class ExplanationProblem {
public:
    /// Throws DomainError when T is empty, equals all classes, mentions an
    /// unknown class, or z is not sufficient for T.
    ExplanationProblem(ModelPtr model, PartialInstance z, ClassSet targets);

    /// Targets inferred as prediction_set(z).
    static ExplanationProblem inferred(ModelPtr model, PartialInstance z);

    const Model& model() const { return *model_; }
    const ModelPtr& model_ptr() const { return model_; }
    const FeatureSpace& space() const { return model_->space(); }
    const DecisionTree& tree() const { return model_->tree(); }
    const PartialInstance& instance() const { return z_; }
    const ClassSet& targets() const { return targets_; }
    const FeatureSet& specified() const { return specified_; }
    const FeatureSet& unspecified() const { return unspecified_; }

    /// Same model and targets, different instance.
    ExplanationProblem with_instance(PartialInstance z) const { return {model_, std::move(z), targets_}; }
    /// The problem whose specified set is `keep` (a subset of the specified features).
    ExplanationProblem restricted_to(const FeatureSet& keep) const;

private:
    ModelPtr model_;
    PartialInstance z_;
    ClassSet targets_;
    FeatureSet specified_;
    FeatureSet unspecified_;
};

}  // namespace pxp
