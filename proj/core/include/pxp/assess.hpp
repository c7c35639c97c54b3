#pragma once

#include <optional>
#include <vector>

#include "pxp/problem.hpp"

namespace pxp {

/// A symptom feature and the values that count as the symptom being present.
struct Symptom {
    FeatureId feature = 0;
    std::vector<Value> positive;
};

enum class AssessmentOutcome { Explained, Inconclusive };

struct Assessment {
    int leaf_id = 0;
    ClassId leaf_class = 0;
    PartialInstance instance;
    FeatureSet path_features;
    FeatureSet active_symptoms;  // left unspecified
    AssessmentOutcome outcome = AssessmentOutcome::Inconclusive;
    std::optional<FeatureSet> axp;
    /// The AXp mentions no symptom feature: the leaf's class is forced without any symptom.
    bool symptom_free = false;
};

/// Classifier assessment along one root-to-leaf path. Path features that are
/// active symptoms (the path only admits their positive values) become
/// unspecified; the other path features are pinned to path-consistent values;
/// features off the path stay unspecified. With T = {leaf class}, reports
/// whether the instance is sufficient and, if so, one AXp.
Assessment assess(const ModelPtr& model, int leaf_id, const std::vector<Symptom>& symptoms);

}  // namespace pxp
