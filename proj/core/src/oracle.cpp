#include "pxp/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pxp/errors.hpp"
#include "pxp/region.hpp"

namespace pxp {

namespace {

// Completions enumerated per leaf once unit propagation stalls.
constexpr std::uint64_t kConstraintSearchLimit = 1'000'000;

bool in(const std::vector<Value>& values, Value v) { return std::find(values.begin(), values.end(), v) != values.end(); }

// Is some point of `box` allowed by the clauses? Constrained features are
// expanded to explicit candidate lists; unit propagation narrows them, and
// whatever stays undecided is enumerated.
bool box_satisfies(const Box& box, const std::vector<ConstraintClause>& clauses) {
    std::map<FeatureId, std::vector<Value>> cand;
    for (const auto& clause : clauses)
        for (const auto& lit : clause)
            if (!cand.contains(lit.feature)) cand[lit.feature] = box[static_cast<std::size_t>(lit.feature - 1)].values();

    std::vector<const ConstraintClause*> open;
    for (const auto& c : clauses) open.push_back(&c);

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<const ConstraintClause*> still_open;
        for (const ConstraintClause* clause : open) {
            const ConstraintLiteral* sole = nullptr;
            int possible = 0;
            bool certain = false;
            for (const auto& lit : *clause) {
                const auto& vals = cand[lit.feature];
                bool any = false, all = true;
                for (Value v : vals) {
                    if (in(lit.allowed, v)) any = true;
                    else all = false;
                }
                if (any && all) {
                    certain = true;
                    break;
                }
                if (any) {
                    ++possible;
                    sole = &lit;
                }
            }
            if (certain) continue;
            if (possible == 0) return false;
            if (possible == 1) {
                auto& vals = cand[sole->feature];
                std::erase_if(vals, [&](Value v) { return !in(sole->allowed, v); });
                changed = true;
                continue;
            }
            still_open.push_back(clause);
        }
        open = std::move(still_open);
    }
    if (open.empty()) return true;

    std::vector<FeatureId> vars;
    for (const ConstraintClause* clause : open)
        for (const auto& lit : *clause)
            if (std::find(vars.begin(), vars.end(), lit.feature) == vars.end()) vars.push_back(lit.feature);
    std::uint64_t product = 1;
    for (FeatureId f : vars) {
        product *= cand[f].size();
        if (product > kConstraintSearchLimit) throw CapacityError("constraint search exceeds 10^6 completions");
    }
    std::map<FeatureId, Value> assign;
    std::vector<std::size_t> idx(vars.size(), 0);
    for (std::uint64_t n = 0; n < product; ++n) {
        for (std::size_t k = 0; k < vars.size(); ++k) assign[vars[k]] = cand[vars[k]][idx[k]];
        bool ok = std::all_of(open.begin(), open.end(), [&](const ConstraintClause* clause) {
            return std::any_of(clause->begin(), clause->end(),
                               [&](const ConstraintLiteral& lit) { return in(lit.allowed, assign[lit.feature]); });
        });
        if (ok) return true;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (++idx[k] < cand[vars[k]].size()) break;
            idx[k] = 0;
        }
    }
    return false;
}

}  // namespace

void XpOracle::check_subset(const FeatureSet& s, const char* what) const {
    if (!s.is_subset_of(specified_))
        throw UsageError(std::string(what) + " argument " + s.str() + " is not a subset of the specified features " +
                         specified_.str());
}

bool XpOracle::waxp_holds(const FeatureSet& w) {
    check_subset(w, "waxp");
    ++calls_;
    return decide_waxp(w);
}

bool XpOracle::wcxp_holds(const FeatureSet& y) {
    check_subset(y, "wcxp");
    ++calls_;
    return decide_wcxp(y);
}

TreeOracle::TreeOracle(const ExplanationProblem& problem) : XpOracle(problem.specified()), problem_(problem) {}

bool TreeOracle::decide_waxp(const FeatureSet& w) {
    const auto& targets = problem_.targets();
    bool off_target = walk_consistent_leaves(
        problem_.space(), problem_.tree(), problem_.instance().restricted_to(w),
        [&](const Node& leaf, const Box&) { return !targets.contains(leaf.label); }, &last_visited_);
    return !off_target;
}

ConstrainedTreeOracle::ConstrainedTreeOracle(const ExplanationProblem& problem, InputConstraint constraint)
    : XpOracle(problem.specified()), problem_(problem), constraint_(std::move(constraint)) {
    constraint_.validate(problem.space());
}

bool ConstrainedTreeOracle::decide_waxp(const FeatureSet& w) {
    const auto& targets = problem_.targets();
    bool off_target = walk_consistent_leaves(problem_.space(), problem_.tree(), problem_.instance().restricted_to(w),
                                             [&](const Node& leaf, const Box& box) {
                                                 return !targets.contains(leaf.label) &&
                                                        box_satisfies(box, constraint_.clauses());
                                             });
    return !off_target;
}

ScriptedOracle::ScriptedOracle(FeatureSet specified, Script axp_script, Script cxp_script)
    : XpOracle(std::move(specified)), axp_(std::move(axp_script)), cxp_(std::move(cxp_script)) {}

bool ScriptedOracle::decide_waxp(const FeatureSet& w) {
    log_.emplace_back(XpKind::AXp, w);
    auto it = axp_.find(w);
    if (it == axp_.end()) throw ScriptError("unscripted AXp query " + w.str());
    return it->second;
}

bool ScriptedOracle::decide_wcxp(const FeatureSet& y) {
    log_.emplace_back(XpKind::CXp, y);
    auto it = cxp_.find(y);
    if (it == cxp_.end()) throw ScriptError("unscripted CXp query " + y.str());
    return it->second;
}

bool waxp_holds(const ExplanationProblem& problem, const FeatureSet& w) {
    TreeOracle oracle(problem);
    return oracle.waxp_holds(w);
}

bool wcxp_holds(const ExplanationProblem& problem, const FeatureSet& y) {
    TreeOracle oracle(problem);
    return oracle.wcxp_holds(y);
}

bool constrained_waxp(const ExplanationProblem& problem, const FeatureSet& w, const InputConstraint& constraint) {
    ConstrainedTreeOracle oracle(problem, constraint);
    return oracle.waxp_holds(w);
}

}  // namespace pxp
