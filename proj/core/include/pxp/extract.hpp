#pragma once

#include <vector>

#include "pxp/oracle.hpp"

namespace pxp {

/// Order in which the deletion pass tries to drop features.
class TraversalOrder {
public:
    static TraversalOrder ascending() { return TraversalOrder(Mode::Ascending, {}); }
    static TraversalOrder descending() { return TraversalOrder(Mode::Descending, {}); }
    /// A permutation of the specified features.
    static TraversalOrder explicit_order(std::vector<FeatureId> permutation) {
        return TraversalOrder(Mode::Explicit, std::move(permutation));
    }

    TraversalOrder() = default;

    /// The members of `seed` in this order. For explicit orders, `universe` is
    /// the set the permutation must cover exactly once (UsageError otherwise).
    std::vector<FeatureId> arrange(const FeatureSet& seed, const FeatureSet& universe) const;

private:
    enum class Mode { Ascending, Descending, Explicit };
    TraversalOrder(Mode mode, std::vector<FeatureId> perm) : mode_(mode), perm_(std::move(perm)) {}

    Mode mode_ = Mode::Ascending;
    std::vector<FeatureId> perm_;
};

/// Result of one deletion pass. `chain` lists the working set after each
/// successful deletion, starting with the seed.
struct Extraction {
    FeatureSet result;
    std::vector<FeatureSet> chain;
};

/// Deletion-based minimization from `seed` (which must satisfy the kind's
/// predicate): try to drop each feature in order, keep the drop when the
/// predicate still holds. Exactly |seed| predicate calls.
Extraction extract_xp(XpOracle& oracle, XpKind kind, const FeatureSet& seed,
                      const TraversalOrder& order = TraversalOrder::ascending());

/// One AXp or CXp, seeded with the specified features only.
FeatureSet find_one_xp(XpOracle& oracle, XpKind kind, const TraversalOrder& order = TraversalOrder::ascending());
FeatureSet find_one_xp(const ExplanationProblem& problem, XpKind kind,
                       const TraversalOrder& order = TraversalOrder::ascending());

/// Feature i is in every AXp: S \ {i} is not a weak AXp.
bool is_necessary(XpOracle& oracle, FeatureId i);
bool is_necessary(const ExplanationProblem& problem, FeatureId i);

}  // namespace pxp
