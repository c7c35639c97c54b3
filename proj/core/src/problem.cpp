#include "pxp/problem.hpp"

#include "pxp/errors.hpp"

namespace pxp {

ExplanationProblem::ExplanationProblem(ModelPtr model, PartialInstance z, ClassSet targets)
    : model_(std::move(model)), z_(std::move(z)), targets_(std::move(targets)) {
    if (!model_) throw UsageError("explanation problem without a model");
    z_.validate(space());
    if (targets_.empty()) throw DomainError("target class set is empty");
    for (ClassId c : targets_)
        if (!space().has_class(c)) throw DomainError("unknown target class " + std::to_string(c));
    if (static_cast<int>(targets_.size()) == space().num_classes())
        throw DomainError("target class set contains every class");
    if (!model_->is_sufficient(z_, targets_))
        throw DomainError("instance is not sufficient for targets " + format_classes(space(), targets_) +
                          " (predictions " + format_classes(space(), model_->prediction_set(z_)) + ")");
    specified_ = z_.specified();
    unspecified_ = z_.unspecified();
}

ExplanationProblem ExplanationProblem::inferred(ModelPtr model, PartialInstance z) {
    ClassSet t = model->prediction_set(z);
    return {std::move(model), std::move(z), std::move(t)};
}

ExplanationProblem ExplanationProblem::restricted_to(const FeatureSet& keep) const {
    if (!keep.is_subset_of(specified_)) throw UsageError("restriction " + keep.str() + " is not within the specified features");
    return with_instance(z_.restricted_to(keep));
}

}  // namespace pxp
