#pragma once

#include <optional>
#include <vector>

#include "pxp/feature_space.hpp"

namespace pxp {

/// A fully specified point; entry k holds feature k+1.
using Point = std::vector<Value>;

/// A point of the extended feature space: every entry is a domain value or
/// unspecified. Splits the features into specified and unspecified sets.
class PartialInstance {
public:
    PartialInstance() = default;
    explicit PartialInstance(std::vector<std::optional<Value>> values) : values_(std::move(values)) {}

    static PartialInstance unspecified(int num_features);
    static PartialInstance from_point(const Point& point);

    int num_features() const { return static_cast<int>(values_.size()); }
    bool is_specified(FeatureId i) const;
    Value value(FeatureId i) const;
    const std::optional<Value>& entry(FeatureId i) const;
    void set(FeatureId i, std::optional<Value> v);

    FeatureSet specified() const;
    FeatureSet unspecified() const;
    bool fully_specified() const { return unspecified().empty(); }

    /// Same values on `keep`, unspecified elsewhere.
    PartialInstance restricted_to(const FeatureSet& keep) const;
    /// Throws unless fully specified.
    Point to_point() const;

    /// Throws DomainError when shapes differ or a value is outside its domain.
    void validate(const FeatureSpace& space) const;

    const std::vector<std::optional<Value>>& entries() const { return values_; }

    friend bool operator==(const PartialInstance&, const PartialInstance&) = default;

private:
    std::vector<std::optional<Value>> values_;
};

/// v is covered by z: every specified coordinate of z agrees with v.
bool covers(const Point& v, const PartialInstance& z);

void validate_point(const FeatureSpace& space, const Point& x);

}  // namespace pxp
