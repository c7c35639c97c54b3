#include "pxp/verify.hpp"

#include <algorithm>
#include <string>

#include "pxp/enumerate.hpp"
#include "pxp/errors.hpp"

namespace pxp {

namespace {

constexpr std::size_t kMaxSpecified = 12;
constexpr std::uint64_t kMaxPoints = 1'000'000;

using Mask = std::uint32_t;

FeatureSet from_mask(Mask m, const std::vector<FeatureId>& order) {
    std::vector<FeatureId> ids;
    for (std::size_t k = 0; k < order.size(); ++k)
        if (m & (Mask{1} << k)) ids.push_back(order[k]);
    return FeatureSet(std::move(ids));
}

Mask to_mask(const FeatureSet& s, const std::vector<FeatureId>& order) {
    Mask m = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
        if (s.contains(order[k])) m |= Mask{1} << k;
    return m;
}

// Agreement mask of every off-target point, over the specified features.
std::vector<Mask> off_target_masks(const ExplanationProblem& problem, const std::vector<FeatureId>& order,
                                   std::uint64_t* examined) {
    const auto& z = problem.instance();
    std::vector<bool> seen(std::size_t{1} << order.size(), false);
    std::vector<Mask> out;
    auto points = enumerate_points(problem.space(), kMaxPoints);
    if (examined) *examined = points.size();
    for (const auto& x : points) {
        if (problem.targets().contains(problem.model().evaluate(x))) continue;
        Mask m = 0;
        for (std::size_t k = 0; k < order.size(); ++k)
            if (x[static_cast<std::size_t>(order[k] - 1)] == z.value(order[k])) m |= Mask{1} << k;
        if (!seen[m]) {
            seen[m] = true;
            out.push_back(m);
        }
    }
    return out;
}

void check_scale(const ExplanationProblem& problem) {
    if (problem.specified().size() > kMaxSpecified)
        throw CapacityError("brute force limited to " + std::to_string(kMaxSpecified) + " specified features");
    if (!problem.space().all_finite()) throw UnsupportedError("brute force needs finite domains");
}

}  // namespace

std::vector<Point> enumerate_points(const FeatureSpace& space, std::uint64_t limit) {
    std::vector<std::vector<Value>> values;
    std::uint64_t total = 1;
    for (FeatureId i = 1; i <= space.num_features(); ++i) {
        const Domain& d = space.domain(i);
        if (!d.is_finite()) throw UnsupportedError("cannot enumerate real feature '" + space.name(i) + "'");
        total *= *d.cardinality();
        if (total > limit) throw CapacityError("feature space exceeds " + std::to_string(limit) + " points");
        values.push_back(d.values());
    }
    std::vector<Point> out;
    out.reserve(total);
    std::vector<std::size_t> idx(values.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        Point p(values.size());
        for (std::size_t k = 0; k < values.size(); ++k) p[k] = values[k][idx[k]];
        out.push_back(std::move(p));
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (++idx[k] < values[k].size()) break;
            idx[k] = 0;
        }
    }
    return out;
}

SetFamily minimal_sets(const SetFamily& family) {
    SetFamily out;
    for (const auto& s : family) {
        bool minimal = std::none_of(family.begin(), family.end(),
                                    [&](const FeatureSet& t) { return t != s && t.is_subset_of(s); });
        if (minimal) out.insert(s);
    }
    return out;
}

BruteForceResult brute_force_xps(const ExplanationProblem& problem) {
    check_scale(problem);
    const std::vector<FeatureId> order(problem.specified().begin(), problem.specified().end());
    const std::size_t n = order.size();
    const Mask full = static_cast<Mask>((std::size_t{1} << n) - 1);

    BruteForceResult r;
    // violated[W]: some off-target point agrees with z on all of W.
    std::vector<bool> violated(std::size_t{1} << n, false);
    for (Mask m : off_target_masks(problem, order, &r.completions_examined)) violated[m] = true;
    for (std::size_t b = 0; b < n; ++b)
        for (Mask m = 0; m <= full; ++m)
            if (!(m & (Mask{1} << b)) && violated[m | (Mask{1} << b)]) violated[m] = true;

    auto weak_axp = [&](Mask w) { return !violated[w]; };
    auto weak_cxp = [&](Mask y) { return violated[full & ~y]; };
    // Minimal: no proper submask has the property.
    auto minimal = [&](Mask s, auto&& weak) {
        for (Mask sub = (s - 1) & s;; sub = (sub - 1) & s) {
            if (sub != s && weak(sub)) return false;
            if (sub == 0) break;
        }
        return true;
    };
    for (Mask m = 0; m <= full; ++m) {
        if (weak_axp(m)) {
            r.all_weak_axps.insert(from_mask(m, order));
            if (m == 0 || minimal(m, weak_axp)) r.axps.insert(from_mask(m, order));
        }
        if (weak_cxp(m)) {
            r.all_weak_cxps.insert(from_mask(m, order));
            if (m == 0 || minimal(m, weak_cxp)) r.cxps.insert(from_mask(m, order));
        }
    }
    return r;
}

ClassSet brute_force_prediction_set(const Model& model, const PartialInstance& z) {
    ClassSet out;
    for (const auto& v : enumerate_points(model.space(), kMaxPoints))
        if (covers(v, z)) out.insert(model.evaluate(v));
    return out;
}

Rational brute_force_paxp(const ExplanationProblem& problem, const FeatureSet& x) {
    const auto fixing = problem.instance().restricted_to(x);
    BigInt hits = 0, total = 0;
    for (const auto& v : enumerate_points(problem.space(), kMaxPoints)) {
        if (!covers(v, fixing)) continue;
        ++total;
        if (problem.targets().contains(problem.model().evaluate(v))) ++hits;
    }
    return Rational(hits, total);
}

bool brute_force_constrained_waxp(const ExplanationProblem& problem, const FeatureSet& w,
                                  const InputConstraint& constraint) {
    const auto fixing = problem.instance().restricted_to(w);
    for (const auto& v : enumerate_points(problem.space(), kMaxPoints))
        if (covers(v, fixing) && constraint.allows(v) && !problem.targets().contains(problem.model().evaluate(v)))
            return false;
    return true;
}

BruteForceOracle::BruteForceOracle(const ExplanationProblem& problem)
    : XpOracle(problem.specified()), order_(problem.specified().begin(), problem.specified().end()) {
    check_scale(problem);
    off_target_masks_ = off_target_masks(problem, order_, nullptr);
}

bool BruteForceOracle::decide_waxp(const FeatureSet& w) {
    Mask m = to_mask(w, order_);
    return std::none_of(off_target_masks_.begin(), off_target_masks_.end(), [&](Mask a) { return (a & m) == m; });
}

namespace {

ExplanationProblem concretize(const ExplanationProblem& relaxed, const Point& cover) {
    if (!covers(cover, relaxed.instance())) throw DomainError("refinement point is not covered by the instance");
    if (!relaxed.targets().contains(relaxed.model().evaluate(cover)))
        throw DomainError("refinement point predicts outside the targets");
    return relaxed.with_instance(PartialInstance::from_point(cover));
}

}  // namespace

RefinementPair::RefinementPair(ExplanationProblem relaxed, const Point& cover)
    : relaxed_(std::move(relaxed)), refined_(concretize(relaxed_, cover)) {}

bool check_refinement_families(const BruteForceResult& relaxed, const BruteForceResult& refined,
                               const FeatureSet& unspecified) {
    for (const auto& x : relaxed.axps)
        if (!refined.axps.contains(x)) return false;
    for (const auto& y : relaxed.cxps) {
        FeatureSet upper = y | unspecified;
        bool extended = std::any_of(refined.cxps.begin(), refined.cxps.end(), [&](const FeatureSet& w) {
            return y.is_subset_of(w) && w.is_subset_of(upper);
        });
        if (!extended) return false;
    }
    return true;
}

bool check_refinement(const RefinementPair& pair) {
    return check_refinement_families(brute_force_xps(pair.relaxed()), brute_force_xps(pair.refined()),
                                     pair.relaxed().unspecified());
}

DeletionChain::DeletionChain(const ExplanationProblem& problem, std::vector<FeatureSet> sets) : sets_(std::move(sets)) {
    if (sets_.empty() || sets_.front() != problem.specified())
        throw UsageError("deletion chain must start at the specified features " + problem.specified().str());
    TreeOracle oracle(problem);
    for (std::size_t j = 0; j < sets_.size(); ++j) {
        if (j > 0 && (!sets_[j].is_subset_of(sets_[j - 1]) || sets_[j] == sets_[j - 1]))
            throw UsageError("deletion chain step " + std::to_string(j) + " " + sets_[j].str() +
                             " is not a proper subset of " + sets_[j - 1].str());
        if (!oracle.waxp_holds(sets_[j]))
            throw UsageError("deletion chain step " + std::to_string(j) + " " + sets_[j].str() + " is not a weak AXp");
    }
}

bool check_nested_duality(const ExplanationProblem& problem, const DeletionChain& chain) {
    std::vector<BruteForceResult> families;
    for (const auto& x : chain.sets()) families.push_back(brute_force_xps(problem.restricted_to(x)));
    for (std::size_t j = 0; j < families.size(); ++j) {
        if (!check_mhs_duality(families[j].axps, families[j].cxps)) return false;
        for (std::size_t k = j; k < families.size(); ++k) {
            for (const auto& w : families[k].axps)
                if (!families[j].axps.contains(w)) return false;
            const FeatureSet& xj = chain.sets()[j];
            for (const auto& y : families[k].cxps) {
                bool extended = std::any_of(families[j].cxps.begin(), families[j].cxps.end(), [&](const FeatureSet& w) {
                    return y.is_subset_of(w) && w.is_subset_of(y | xj);
                });
                if (!extended) return false;
            }
        }
    }
    return true;
}

bool check_hitting_lemmas(const ExplanationProblem& problem) {
    BruteForceResult bf = brute_force_xps(problem);
    const std::vector<FeatureId> order(problem.specified().begin(), problem.specified().end());
    TreeOracle oracle(problem);
    const Mask full = static_cast<Mask>((std::size_t{1} << order.size()) - 1);
    for (Mask m = 0; m <= full; ++m) {
        FeatureSet s = from_mask(m, order);
        if (hits_all(s, bf.axps) && !oracle.wcxp_holds(s)) return false;
        if (hits_all(s, bf.cxps) && !oracle.waxp_holds(s)) return false;
    }
    return true;
}

}  // namespace pxp
