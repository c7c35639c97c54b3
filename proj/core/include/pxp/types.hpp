#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace pxp {

/// Features are numbered 1..m, classes 0..k-1.
using FeatureId = int;
using ClassId = int;
using ClassSet = std::set<ClassId>;

/// A sorted, duplicate-free set of feature ids.
class FeatureSet {
public:
    using const_iterator = std::vector<FeatureId>::const_iterator;

    FeatureSet() = default;
    FeatureSet(std::initializer_list<FeatureId> ids) : FeatureSet(std::vector<FeatureId>(ids)) {}
    explicit FeatureSet(std::vector<FeatureId> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    /// {1, ..., m}
    static FeatureSet range(int m) {
        std::vector<FeatureId> ids;
        ids.reserve(static_cast<std::size_t>(m));
        for (FeatureId i = 1; i <= m; ++i) ids.push_back(i);
        return FeatureSet(std::move(ids));
    }

    bool contains(FeatureId i) const { return std::binary_search(ids_.begin(), ids_.end(), i); }
    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    const_iterator begin() const { return ids_.begin(); }
    const_iterator end() const { return ids_.end(); }
    const std::vector<FeatureId>& ids() const { return ids_; }

    void insert(FeatureId i) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), i);
        if (it == ids_.end() || *it != i) ids_.insert(it, i);
    }
    void erase(FeatureId i) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), i);
        if (it != ids_.end() && *it == i) ids_.erase(it);
    }

    FeatureSet without(FeatureId i) const {
        FeatureSet r = *this;
        r.erase(i);
        return r;
    }
    FeatureSet with(FeatureId i) const {
        FeatureSet r = *this;
        r.insert(i);
        return r;
    }

    bool is_subset_of(const FeatureSet& other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }
    bool intersects(const FeatureSet& other) const {
        auto a = ids_.begin();
        auto b = other.ids_.begin();
        while (a != ids_.end() && b != other.ids_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    friend FeatureSet operator|(const FeatureSet& a, const FeatureSet& b) {
        std::vector<FeatureId> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return FeatureSet(std::move(out));
    }
    friend FeatureSet operator&(const FeatureSet& a, const FeatureSet& b) {
        std::vector<FeatureId> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return FeatureSet(std::move(out));
    }
    friend FeatureSet operator-(const FeatureSet& a, const FeatureSet& b) {
        std::vector<FeatureId> out;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return FeatureSet(std::move(out));
    }

    friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
    friend auto operator<=>(const FeatureSet&, const FeatureSet&) = default;

    /// "{1,4,6}"
    std::string str() const {
        std::string s = "{";
        for (std::size_t k = 0; k < ids_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(ids_[k]);
        }
        return s + "}";
    }

private:
    std::vector<FeatureId> ids_;
};

using SetFamily = std::set<FeatureSet>;

std::string to_string(const SetFamily& family);

enum class XpKind { AXp, CXp };

inline const char* to_string(XpKind kind) { return kind == XpKind::AXp ? "AXp" : "CXp"; }

}  // namespace pxp
