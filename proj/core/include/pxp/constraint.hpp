#pragma once

#include <vector>

#include "pxp/instance.hpp"

namespace pxp {

/// x_feature takes one of `allowed`.
struct ConstraintLiteral {
    FeatureId feature = 0;
    std::vector<Value> allowed;
};

using ConstraintClause = std::vector<ConstraintLiteral>;

/// A CNF over finite-domain feature literals, used as the indicator of allowed
/// points. No clauses: every point is allowed. An empty clause: none is.
class InputConstraint {
public:
    InputConstraint() = default;
    explicit InputConstraint(std::vector<ConstraintClause> clauses) : clauses_(std::move(clauses)) {}

    const std::vector<ConstraintClause>& clauses() const { return clauses_; }
    void add_clause(ConstraintClause clause) { clauses_.push_back(std::move(clause)); }

    /// Throws UnsupportedError for literals over real features and DomainError
    /// for unknown features or values outside the domain.
    void validate(const FeatureSpace& space) const;

    bool allows(const Point& x) const;

private:
    std::vector<ConstraintClause> clauses_;
};

}  // namespace pxp
