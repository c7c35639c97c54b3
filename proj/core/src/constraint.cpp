#include "pxp/constraint.hpp"

#include <algorithm>
#include <string>

#include "pxp/errors.hpp"

namespace pxp {

void InputConstraint::validate(const FeatureSpace& space) const {
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
        for (const auto& lit : clauses_[c]) {
            if (!space.has_feature(lit.feature))
                throw DomainError("constraint clause " + std::to_string(c) + ": unknown feature " +
                                  std::to_string(lit.feature));
            const Domain& dom = space.domain(lit.feature);
            if (dom.is_real())
                throw UnsupportedError("constraint over real-valued feature '" + space.name(lit.feature) + "'");
            for (Value v : lit.allowed)
                if (!dom.contains(v))
                    throw DomainError("constraint clause " + std::to_string(c) + ": value outside domain of '" +
                                      space.name(lit.feature) + "'");
        }
    }
}

bool InputConstraint::allows(const Point& x) const {
    for (const auto& clause : clauses_) {
        bool sat = std::any_of(clause.begin(), clause.end(), [&](const ConstraintLiteral& lit) {
            Value v = x.at(static_cast<std::size_t>(lit.feature - 1));
            return std::find(lit.allowed.begin(), lit.allowed.end(), v) != lit.allowed.end();
        });
        if (!sat) return false;
    }
    return true;
}

}  // namespace pxp
