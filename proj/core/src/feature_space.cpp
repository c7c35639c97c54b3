#include "pxp/feature_space.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "pxp/errors.hpp"

namespace pxp {

namespace {

std::optional<double> parse_number(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    try {
        double d = std::stod(text, &pos);
        if (pos != text.size()) return std::nullopt;
        return d;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

Domain Domain::categorical(std::vector<std::string> labels) {
    if (labels.empty()) throw DomainError("categorical domain must be nonempty");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw DomainError("duplicate categorical value '" + l + "'");
    return Domain(CategoricalDomain{std::move(labels)});
}

Domain Domain::integer(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw DomainError("integer domain has lo > hi");
    return Domain(IntegerDomain{lo, hi});
}

Domain Domain::real(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("real domain bounds must be finite");
    if (lo > hi) throw DomainError("real domain has lo > hi");
    return Domain(RealDomain{lo, hi});
}

Domain Domain::categorical_of_size(int k) {
    std::vector<std::string> labels;
    for (int v = 0; v < k; ++v) labels.push_back(std::to_string(v));
    return categorical(std::move(labels));
}

std::optional<std::uint64_t> Domain::cardinality() const {
    if (auto c = std::get_if<CategoricalDomain>(&v_)) return c->labels.size();
    if (auto i = std::get_if<IntegerDomain>(&v_))
        return static_cast<std::uint64_t>(i->hi - i->lo) + 1;
    return std::nullopt;
}

bool Domain::contains(Value v) const {
    if (!std::isfinite(v)) return false;
    if (auto c = std::get_if<CategoricalDomain>(&v_))
        return v == std::floor(v) && v >= 0 && v < static_cast<double>(c->labels.size());
    if (auto i = std::get_if<IntegerDomain>(&v_))
        return v == std::floor(v) && v >= static_cast<double>(i->lo) && v <= static_cast<double>(i->hi);
    const auto& r = std::get<RealDomain>(v_);
    return v >= r.lo && v <= r.hi;
}

std::vector<Value> Domain::values() const {
    if (is_real()) throw UnsupportedError("real domain has no finite value list");
    std::vector<Value> out;
    if (auto c = std::get_if<CategoricalDomain>(&v_)) {
        for (std::size_t k = 0; k < c->labels.size(); ++k) out.push_back(static_cast<Value>(k));
    } else {
        const auto& i = std::get<IntegerDomain>(v_);
        if (i.hi - i.lo >= 100'000'000) throw CapacityError("integer domain too large to list");
        for (std::int64_t x = i.lo; x <= i.hi; ++x) out.push_back(static_cast<Value>(x));
    }
    return out;
}

std::string Domain::format(Value v) const {
    if (auto c = std::get_if<CategoricalDomain>(&v_)) {
        if (contains(v)) return c->labels[static_cast<std::size_t>(v)];
    } else if (is_integer() && v == std::floor(v)) {
        return std::to_string(static_cast<std::int64_t>(v));
    }
    std::ostringstream os;
    os << v;
    return os.str();
}

std::optional<Value> Domain::parse(const std::string& text) const {
    if (auto c = std::get_if<CategoricalDomain>(&v_)) {
        for (std::size_t k = 0; k < c->labels.size(); ++k)
            if (c->labels[k] == text) return static_cast<Value>(k);
        return std::nullopt;
    }
    auto d = parse_number(text);
    if (!d || !contains(*d)) return std::nullopt;
    return d;
}

bool operator==(const Domain& a, const Domain& b) {
    if (a.v_.index() != b.v_.index()) return false;
    if (a.is_categorical()) return a.as_categorical().labels == b.as_categorical().labels;
    if (a.is_integer()) return a.as_integer().lo == b.as_integer().lo && a.as_integer().hi == b.as_integer().hi;
    return a.as_real().lo == b.as_real().lo && a.as_real().hi == b.as_real().hi;
}

FeatureSpace::FeatureSpace(std::vector<FeatureDecl> features, std::vector<ClassDecl> classes)
    : features_(std::move(features)), classes_(std::move(classes)) {
    if (features_.empty()) throw DomainError("feature space needs at least one feature");
    if (classes_.size() < 2) throw DomainError("feature space needs at least two classes");
    std::set<std::string> names;
    for (const auto& f : features_)
        if (!names.insert(f.name).second) throw DomainError("duplicate feature name '" + f.name + "'");
    std::set<std::string> cnames;
    std::set<std::int64_t> numbers;
    for (const auto& c : classes_) {
        if (!cnames.insert(c.name).second) throw DomainError("duplicate class name '" + c.name + "'");
        if (c.number && !numbers.insert(*c.number).second)
            throw DomainError("duplicate class number " + std::to_string(*c.number));
    }
}

ClassSet FeatureSpace::all_classes() const {
    ClassSet out;
    for (ClassId c = 0; c < num_classes(); ++c) out.insert(c);
    return out;
}

const FeatureDecl& FeatureSpace::feature(FeatureId i) const {
    if (!has_feature(i)) throw UsageError("unknown feature id " + std::to_string(i));
    return features_[static_cast<std::size_t>(i - 1)];
}

const ClassDecl& FeatureSpace::class_decl(ClassId c) const {
    if (!has_class(c)) throw UsageError("unknown class id " + std::to_string(c));
    return classes_[static_cast<std::size_t>(c)];
}

std::optional<FeatureId> FeatureSpace::find_feature(const std::string& name) const {
    for (std::size_t k = 0; k < features_.size(); ++k)
        if (features_[k].name == name) return static_cast<FeatureId>(k + 1);
    return std::nullopt;
}

std::optional<ClassId> FeatureSpace::find_class(const std::string& name_or_number) const {
    for (std::size_t k = 0; k < classes_.size(); ++k)
        if (classes_[k].name == name_or_number) return static_cast<ClassId>(k);
    std::int64_t n = 0;
    const char* first = name_or_number.data();
    const char* last = first + name_or_number.size();
    auto [p, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && p == last) {
        for (std::size_t k = 0; k < classes_.size(); ++k)
            if (classes_[k].number == n) return static_cast<ClassId>(k);
    }
    return std::nullopt;
}

bool FeatureSpace::all_finite() const {
    for (const auto& f : features_)
        if (!f.domain.is_finite()) return false;
    return true;
}

bool operator==(const FeatureSpace& a, const FeatureSpace& b) {
    if (a.features_.size() != b.features_.size() || a.classes_.size() != b.classes_.size()) return false;
    for (std::size_t k = 0; k < a.features_.size(); ++k)
        if (a.features_[k].name != b.features_[k].name || !(a.features_[k].domain == b.features_[k].domain))
            return false;
    for (std::size_t k = 0; k < a.classes_.size(); ++k)
        if (a.classes_[k].name != b.classes_[k].name || a.classes_[k].number != b.classes_[k].number) return false;
    return true;
}

std::string format_classes(const FeatureSpace& space, const ClassSet& classes) {
    std::string s = "{";
    bool first = true;
    for (ClassId c : classes) {
        if (!first) s += ", ";
        first = false;
        s += space.class_name(c);
    }
    return s + "}";
}

std::string to_string(const SetFamily& family) {
    std::string s = "{";
    bool first = true;
    for (const auto& f : family) {
        if (!first) s += ", ";
        first = false;
        s += f.str();
    }
    return s + "}";
}

}  // namespace pxp
