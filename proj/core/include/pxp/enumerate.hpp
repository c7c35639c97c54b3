#pragma once

#include <functional>
#include <vector>

#include "pxp/extract.hpp"
#include "pxp/selector.hpp"

namespace pxp {

struct XpRecord {
    XpKind kind = XpKind::AXp;
    FeatureSet features;
    friend bool operator==(const XpRecord&, const XpRecord&) = default;
};

/// One round of the enumeration loop.
struct EnumerationStep {
    FeatureSet assignment;  // selectors set to true
    FeatureSet free;        // R: selectors false, minimized into an AXp when Q fails
    FeatureSet tested;      // Q: selectors true, tested with the CXp predicate
    bool cxp_holds = false;
    XpRecord found;
    SelectorClause clause;
};

/// Explanations in discovery order, plus the per-round trace.
struct XpReport {
    std::vector<XpRecord> explanations;
    std::vector<EnumerationStep> steps;

    SetFamily axps() const;
    SetFamily cxps() const;
};

using XpCallback = std::function<void(const XpRecord&)>;

/// Joint enumeration of all AXps and CXps. Each round asks the selector
/// formula for an assignment u; Q = {i : u_i}, R = S \ Q. If Q is a weak CXp
/// it is minimized into a CXp P and blocked with (OR_{i in P} ~u_i); otherwise
/// R is minimized into an AXp P and blocked with (OR_{i in P} u_i). Stops when
/// the formula is unsatisfiable. `on_found` sees each explanation as it appears.
XpReport enumerate_xps(XpOracle& oracle, Polarity bias = Polarity::PreferTrue, const XpCallback& on_found = {});
XpReport enumerate_xps(const ExplanationProblem& problem, Polarity bias = Polarity::PreferTrue,
                       const XpCallback& on_found = {});

/// Feature i belongs to some AXp.
bool is_relevant(XpOracle& oracle, FeatureId i);
bool is_relevant(const ExplanationProblem& problem, FeatureId i);

/// Every set of `axps` is a minimal hitting set of `cxps`, and vice versa.
bool check_mhs_duality(const SetFamily& axps, const SetFamily& cxps);

/// `set` intersects every member of `family`.
bool hits_all(const FeatureSet& set, const SetFamily& family);

}  // namespace pxp
