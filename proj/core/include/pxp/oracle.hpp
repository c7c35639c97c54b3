#pragma once

#include <cstddef>
#include <map>

#include "pxp/constraint.hpp"
#include "pxp/problem.hpp"

namespace pxp {

/// Decides the weak-AXp / weak-CXp predicates for one explanation problem.
///
/// waxp_holds(W): fixing the features of W to their values in z forces a
/// prediction inside T. wcxp_holds(Y): freeing Y (fixing only S \ Y) admits a
/// prediction outside T. Both take subsets of the specified set S, and every
/// call bumps a counter that the extraction algorithms are measured by.
class XpOracle {
public:
    explicit XpOracle(FeatureSet specified) : specified_(std::move(specified)) {}
    virtual ~XpOracle() = default;

    XpOracle(const XpOracle&) = delete;
    XpOracle& operator=(const XpOracle&) = delete;

    const FeatureSet& specified() const { return specified_; }

    bool waxp_holds(const FeatureSet& w);
    bool wcxp_holds(const FeatureSet& y);
    bool holds(XpKind kind, const FeatureSet& s) { return kind == XpKind::AXp ? waxp_holds(s) : wcxp_holds(s); }

    std::size_t calls() const { return calls_; }
    void reset_calls() { calls_ = 0; }

protected:
    virtual bool decide_waxp(const FeatureSet& w) = 0;
    /// Default: the complement identity wcxp(Y) = not waxp(S \ Y).
    virtual bool decide_wcxp(const FeatureSet& y) { return !decide_waxp(specified_ - y); }

private:
    void check_subset(const FeatureSet& s, const char* what) const;

    FeatureSet specified_;
    std::size_t calls_ = 0;
};

/// Tree oracle: one depth-first walk per query, looking for a consistent leaf
/// labelled outside T.
class TreeOracle : public XpOracle {
public:
    explicit TreeOracle(const ExplanationProblem& problem);

    /// Tree nodes entered by the most recent query (at most tree size).
    std::size_t last_nodes_visited() const { return last_visited_; }

protected:
    bool decide_waxp(const FeatureSet& w) override;

private:
    const ExplanationProblem& problem_;
    std::size_t last_visited_ = 0;
};

/// Tree oracle under an input constraint: only allowed points count.
class ConstrainedTreeOracle : public XpOracle {
public:
    ConstrainedTreeOracle(const ExplanationProblem& problem, InputConstraint constraint);

protected:
    bool decide_waxp(const FeatureSet& w) override;

private:
    const ExplanationProblem& problem_;
    InputConstraint constraint_;
};

/// Answers from fixed tables keyed by the queried set. Any query missing from
/// the table of its kind throws ScriptError.
class ScriptedOracle : public XpOracle {
public:
    using Script = std::map<FeatureSet, bool>;

    ScriptedOracle(FeatureSet specified, Script axp_script, Script cxp_script);

    /// Every query made so far, in order, with its kind.
    const std::vector<std::pair<XpKind, FeatureSet>>& log() const { return log_; }

protected:
    bool decide_waxp(const FeatureSet& w) override;
    bool decide_wcxp(const FeatureSet& y) override;

private:
    Script axp_;
    Script cxp_;
    std::vector<std::pair<XpKind, FeatureSet>> log_;
};

bool waxp_holds(const ExplanationProblem& problem, const FeatureSet& w);
bool wcxp_holds(const ExplanationProblem& problem, const FeatureSet& y);

/// Weak AXp under an input constraint: every allowed completion fixing W
/// predicts inside T. Constrained features must have finite domains.
bool constrained_waxp(const ExplanationProblem& problem, const FeatureSet& w, const InputConstraint& constraint);

}  // namespace pxp
