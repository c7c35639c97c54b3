#include "pxp/enumerate.hpp"

#include "pxp/errors.hpp"

namespace pxp {

SetFamily XpReport::axps() const {
    SetFamily out;
    for (const auto& r : explanations)
        if (r.kind == XpKind::AXp) out.insert(r.features);
    return out;
}

SetFamily XpReport::cxps() const {
    SetFamily out;
    for (const auto& r : explanations)
        if (r.kind == XpKind::CXp) out.insert(r.features);
    return out;
}

XpReport enumerate_xps(XpOracle& oracle, Polarity bias, const XpCallback& on_found) {
    const FeatureSet& specified = oracle.specified();
    SelectorFormula formula(specified, bias);
    XpReport report;
    for (;;) {
        SatResult sat = sat_solve(formula);
        if (!sat.satisfiable) break;

        EnumerationStep step;
        step.assignment = sat.true_vars;
        step.tested = sat.true_vars;
        step.free = specified - step.tested;
        step.cxp_holds = oracle.wcxp_holds(step.tested);
        if (step.cxp_holds) {
            step.found = {XpKind::CXp, extract_xp(oracle, XpKind::CXp, step.tested).result};
            for (FeatureId i : step.found.features) step.clause.push_back({i, false});
        } else {
            step.found = {XpKind::AXp, extract_xp(oracle, XpKind::AXp, step.free).result};
            for (FeatureId i : step.found.features) step.clause.push_back({i, true});
        }
        formula.add_clause(step.clause);
        report.explanations.push_back(step.found);
        if (on_found) on_found(step.found);
        report.steps.push_back(std::move(step));
    }
    return report;
}

XpReport enumerate_xps(const ExplanationProblem& problem, Polarity bias, const XpCallback& on_found) {
    TreeOracle oracle(problem);
    return enumerate_xps(oracle, bias, on_found);
}

// Search for a weak AXp X containing i with X \ {i} not weak: minimizing such
// an X can never drop i, and any AXp containing i is one. The unit clause ~u_i
// keeps i on the fixed side R; rounds that miss are blocked exactly as in the
// enumeration, and none of those clauses excludes an AXp that contains i.
bool is_relevant(XpOracle& oracle, FeatureId i) {
    const FeatureSet& specified = oracle.specified();
    if (!specified.contains(i)) throw UsageError("feature " + std::to_string(i) + " is not specified");
    SelectorFormula formula(specified, Polarity::PreferFalse);
    formula.add_clause({{i, false}});
    for (;;) {
        SatResult sat = sat_solve(formula);
        if (!sat.satisfiable) return false;
        FeatureSet fixed = specified - sat.true_vars;
        SelectorClause clause;
        if (!oracle.waxp_holds(fixed)) {
            for (FeatureId j : extract_xp(oracle, XpKind::CXp, sat.true_vars).result) clause.push_back({j, false});
        } else if (oracle.waxp_holds(fixed.without(i))) {
            for (FeatureId j : extract_xp(oracle, XpKind::AXp, fixed.without(i)).result) clause.push_back({j, true});
        } else {
            return true;
        }
        formula.add_clause(std::move(clause));
    }
}

bool is_relevant(const ExplanationProblem& problem, FeatureId i) {
    TreeOracle oracle(problem);
    return is_relevant(oracle, i);
}

bool hits_all(const FeatureSet& set, const SetFamily& family) {
    for (const auto& f : family)
        if (!set.intersects(f)) return false;
    return true;
}

namespace {

bool minimal_hitting_sets(const SetFamily& sets, const SetFamily& family) {
    for (const auto& s : sets) {
        if (!hits_all(s, family)) return false;
        for (FeatureId e : s)
            if (hits_all(s.without(e), family)) return false;
    }
    return true;
}

}  // namespace

bool check_mhs_duality(const SetFamily& axps, const SetFamily& cxps) {
    return minimal_hitting_sets(axps, cxps) && minimal_hitting_sets(cxps, axps);
}

}  // namespace pxp
