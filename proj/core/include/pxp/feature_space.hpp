#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pxp/types.hpp"

namespace pxp {

/// Feature values are stored as doubles. Categorical values are the index of
/// their label in the domain's label list.
using Value = double;

struct CategoricalDomain {
    std::vector<std::string> labels;
};

struct IntegerDomain {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

struct RealDomain {
    double lo = 0.0;
    double hi = 0.0;
};

class Domain {
public:
    using Variant = std::variant<CategoricalDomain, IntegerDomain, RealDomain>;

    static Domain categorical(std::vector<std::string> labels);
    static Domain integer(std::int64_t lo, std::int64_t hi);
    static Domain real(double lo, double hi);
    /// Categorical domain with labels "0", "1", ..., "k-1".
    static Domain categorical_of_size(int k);

    bool is_categorical() const { return std::holds_alternative<CategoricalDomain>(v_); }
    bool is_integer() const { return std::holds_alternative<IntegerDomain>(v_); }
    bool is_real() const { return std::holds_alternative<RealDomain>(v_); }
    bool is_finite() const { return !is_real(); }
    bool is_ordered() const { return !is_categorical(); }

    /// Number of values; nullopt for real domains.
    std::optional<std::uint64_t> cardinality() const;
    bool contains(Value v) const;

    /// Every value of a finite domain, in order. Throws UnsupportedError for reals.
    std::vector<Value> values() const;

    /// Human-readable value (label for categorical).
    std::string format(Value v) const;
    /// Parse a label or number; nullopt when not in the domain.
    std::optional<Value> parse(const std::string& text) const;

    const Variant& variant() const { return v_; }
    const CategoricalDomain& as_categorical() const { return std::get<CategoricalDomain>(v_); }
    const IntegerDomain& as_integer() const { return std::get<IntegerDomain>(v_); }
    const RealDomain& as_real() const { return std::get<RealDomain>(v_); }

    friend bool operator==(const Domain& a, const Domain& b);

private:
    explicit Domain(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

struct FeatureDecl {
    std::string name;
    Domain domain;
};

struct ClassDecl {
    std::string name;
    std::optional<std::int64_t> number;  // optional numeric code, e.g. a dataset's class mapping
};

/// Features 1..m with their domains, plus the class set.
class FeatureSpace {
public:
    FeatureSpace(std::vector<FeatureDecl> features, std::vector<ClassDecl> classes);

    int num_features() const { return static_cast<int>(features_.size()); }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    FeatureSet all_features() const { return FeatureSet::range(num_features()); }
    ClassSet all_classes() const;

    bool has_feature(FeatureId i) const { return i >= 1 && i <= num_features(); }
    bool has_class(ClassId c) const { return c >= 0 && c < num_classes(); }

    const FeatureDecl& feature(FeatureId i) const;
    const Domain& domain(FeatureId i) const { return feature(i).domain; }
    const std::string& name(FeatureId i) const { return feature(i).name; }
    const ClassDecl& class_decl(ClassId c) const;
    const std::string& class_name(ClassId c) const { return class_decl(c).name; }

    std::optional<FeatureId> find_feature(const std::string& name) const;
    /// Looks up a class by name, then by numeric code.
    std::optional<ClassId> find_class(const std::string& name_or_number) const;

    const std::vector<FeatureDecl>& features() const { return features_; }
    const std::vector<ClassDecl>& classes() const { return classes_; }

    bool all_finite() const;

    friend bool operator==(const FeatureSpace&, const FeatureSpace&);

private:
    std::vector<FeatureDecl> features_;
    std::vector<ClassDecl> classes_;
};

std::string format_classes(const FeatureSpace& space, const ClassSet& classes);

}  // namespace pxp
