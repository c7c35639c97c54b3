#include "pxp/region.hpp"

#include <algorithm>
#include <cmath>

#include "pxp/errors.hpp"

namespace pxp {

FeatureRange FeatureRange::full(const Domain& domain) {
    FeatureRange r;
    if (domain.is_categorical()) {
        r.kind_ = Kind::Categorical;
        r.allowed_.assign(domain.as_categorical().labels.size(), true);
    } else if (domain.is_integer()) {
        r.kind_ = Kind::Integer;
        r.lo_ = static_cast<double>(domain.as_integer().lo);
        r.hi_ = static_cast<double>(domain.as_integer().hi);
    } else {
        r.kind_ = Kind::Real;
        r.lo_ = domain.as_real().lo;
        r.hi_ = domain.as_real().hi;
    }
    return r;
}

FeatureRange FeatureRange::point(const Domain& domain, Value v) {
    if (!domain.contains(v)) throw DomainError("pinned value outside its domain");
    FeatureRange r = full(domain);
    if (r.kind_ == Kind::Categorical) {
        std::fill(r.allowed_.begin(), r.allowed_.end(), false);
        r.allowed_[static_cast<std::size_t>(v)] = true;
    } else {
        r.lo_ = r.hi_ = v;
    }
    return r;
}

bool FeatureRange::empty() const {
    switch (kind_) {
    case Kind::Categorical:
        return std::find(allowed_.begin(), allowed_.end(), true) == allowed_.end();
    case Kind::Integer:
        return lo_ > hi_;
    case Kind::Real:
        return lo_ > hi_ || (lo_ == hi_ && lo_open_);
    }
    return true;
}

bool FeatureRange::contains(Value v) const {
    switch (kind_) {
    case Kind::Categorical:
        return v >= 0 && v < static_cast<double>(allowed_.size()) && v == std::floor(v) &&
               allowed_[static_cast<std::size_t>(v)];
    case Kind::Integer:
        return v == std::floor(v) && v >= lo_ && v <= hi_;
    case Kind::Real:
        return (lo_open_ ? v > lo_ : v >= lo_) && v <= hi_;
    }
    return false;
}

std::uint64_t FeatureRange::count() const {
    switch (kind_) {
    case Kind::Categorical:
        return static_cast<std::uint64_t>(std::count(allowed_.begin(), allowed_.end(), true));
    case Kind::Integer:
        return lo_ > hi_ ? 0 : static_cast<std::uint64_t>(hi_ - lo_) + 1;
    case Kind::Real:
        break;
    }
    throw UnsupportedError("cannot count values of a real range");
}

Value FeatureRange::pick() const {
    if (empty()) throw UsageError("pick from an empty range");
    switch (kind_) {
    case Kind::Categorical:
        return static_cast<Value>(std::find(allowed_.begin(), allowed_.end(), true) - allowed_.begin());
    case Kind::Integer:
        return lo_;
    case Kind::Real:
        return lo_ < hi_ ? lo_ + (hi_ - lo_) / 2 : lo_;
    }
    return lo_;
}

std::vector<Value> FeatureRange::values() const {
    std::vector<Value> out;
    switch (kind_) {
    case Kind::Categorical:
        for (std::size_t k = 0; k < allowed_.size(); ++k)
            if (allowed_[k]) out.push_back(static_cast<Value>(k));
        return out;
    case Kind::Integer:
        if (hi_ - lo_ >= 1e8) throw CapacityError("integer range too large to list");
        for (double x = lo_; x <= hi_; x += 1) out.push_back(x);
        return out;
    case Kind::Real:
        break;
    }
    throw UnsupportedError("cannot list values of a real range");
}

void FeatureRange::restrict_to_child(const Node& node, std::size_t child) {
    if (const auto* t = std::get_if<ThresholdTest>(&node.test)) {
        double th = t->threshold;
        if (kind_ == Kind::Integer) {
            double f = std::floor(th);
            if (child == 0) hi_ = std::min(hi_, f);
            else lo_ = std::max(lo_, f + 1);
        } else if (kind_ == Kind::Real) {
            if (child == 0) {
                hi_ = std::min(hi_, th);
            } else if (th >= lo_) {
                lo_ = th;
                lo_open_ = true;
            }
        } else {
            throw DomainError("threshold test on categorical range");
        }
        return;
    }
    if (const auto* s = std::get_if<ValueSetTest>(&node.test)) {
        if (kind_ != Kind::Categorical) throw DomainError("value-set test on ordered range");
        std::vector<bool> keep(allowed_.size(), false);
        for (Value v : s->branches.at(child)) {
            auto k = static_cast<std::size_t>(v);
            if (k < keep.size()) keep[k] = true;
        }
        for (std::size_t k = 0; k < allowed_.size(); ++k) allowed_[k] = allowed_[k] && keep[k];
        return;
    }
    throw UsageError("restrict_to_child on a leaf");
}

Box initial_box(const FeatureSpace& space, const PartialInstance& fixing) {
    if (fixing.num_features() != space.num_features()) throw UsageError("instance shape does not match space");
    Box box;
    box.reserve(static_cast<std::size_t>(space.num_features()));
    for (FeatureId i = 1; i <= space.num_features(); ++i) {
        const auto& e = fixing.entry(i);
        box.push_back(e ? FeatureRange::point(space.domain(i), *e) : FeatureRange::full(space.domain(i)));
    }
    return box;
}

}  // namespace pxp
