#include "pxp/instance.hpp"

#include <string>

#include "pxp/errors.hpp"

namespace pxp {

PartialInstance PartialInstance::unspecified(int num_features) {
    return PartialInstance(std::vector<std::optional<Value>>(static_cast<std::size_t>(num_features)));
}

PartialInstance PartialInstance::from_point(const Point& point) {
    std::vector<std::optional<Value>> values(point.begin(), point.end());
    return PartialInstance(std::move(values));
}

const std::optional<Value>& PartialInstance::entry(FeatureId i) const {
    if (i < 1 || i > num_features()) throw UsageError("feature id " + std::to_string(i) + " out of range");
    return values_[static_cast<std::size_t>(i - 1)];
}

bool PartialInstance::is_specified(FeatureId i) const { return entry(i).has_value(); }

Value PartialInstance::value(FeatureId i) const {
    const auto& e = entry(i);
    if (!e) throw UsageError("feature " + std::to_string(i) + " is unspecified");
    return *e;
}

void PartialInstance::set(FeatureId i, std::optional<Value> v) {
    entry(i);
    values_[static_cast<std::size_t>(i - 1)] = v;
}

FeatureSet PartialInstance::specified() const {
    std::vector<FeatureId> ids;
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (values_[k]) ids.push_back(static_cast<FeatureId>(k + 1));
    return FeatureSet(std::move(ids));
}

FeatureSet PartialInstance::unspecified() const {
    std::vector<FeatureId> ids;
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (!values_[k]) ids.push_back(static_cast<FeatureId>(k + 1));
    return FeatureSet(std::move(ids));
}

PartialInstance PartialInstance::restricted_to(const FeatureSet& keep) const {
    PartialInstance out = *this;
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (!keep.contains(static_cast<FeatureId>(k + 1))) out.values_[k].reset();
    return out;
}

Point PartialInstance::to_point() const {
    Point p;
    p.reserve(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!values_[k]) throw UsageError("instance is not fully specified (feature " + std::to_string(k + 1) + ")");
        p.push_back(*values_[k]);
    }
    return p;
}

void PartialInstance::validate(const FeatureSpace& space) const {
    if (num_features() != space.num_features())
        throw DomainError("instance has " + std::to_string(num_features()) + " entries, space has " +
                          std::to_string(space.num_features()) + " features");
    for (FeatureId i = 1; i <= num_features(); ++i) {
        const auto& e = values_[static_cast<std::size_t>(i - 1)];
        if (e && !space.domain(i).contains(*e))
            throw DomainError("value of feature '" + space.name(i) + "' is outside its domain");
    }
}

bool covers(const Point& v, const PartialInstance& z) {
    if (static_cast<int>(v.size()) != z.num_features()) throw UsageError("covers: shape mismatch");
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& e = z.entries()[k];
        if (e && *e != v[k]) return false;
    }
    return true;
}

void validate_point(const FeatureSpace& space, const Point& x) {
    if (static_cast<int>(x.size()) != space.num_features())
        throw DomainError("point has " + std::to_string(x.size()) + " entries, space has " +
                          std::to_string(space.num_features()) + " features");
    for (FeatureId i = 1; i <= space.num_features(); ++i)
        if (!space.domain(i).contains(x[static_cast<std::size_t>(i - 1)]))
            throw DomainError("value of feature '" + space.name(i) + "' is outside its domain");
}

}  // namespace pxp
