#pragma once

#include <string>
#include <vector>

#include "pxp/types.hpp"

namespace pxp {

/// Selector literal: u_var when positive, not u_var otherwise.
struct SelectorLiteral {
    FeatureId var = 0;
    bool positive = true;
    friend bool operator==(const SelectorLiteral&, const SelectorLiteral&) = default;
};

using SelectorClause = std::vector<SelectorLiteral>;

std::string to_string(const SelectorClause& clause);

enum class Polarity { PreferTrue, PreferFalse };

/// Clauses over one selector variable per specified feature. Only grows.
class SelectorFormula {
public:
    SelectorFormula(FeatureSet vars, Polarity bias) : vars_(std::move(vars)), bias_(bias) {}

    /// Throws UsageError when a literal names a variable outside vars().
    void add_clause(SelectorClause clause);

    const FeatureSet& vars() const { return vars_; }
    const std::vector<SelectorClause>& clauses() const { return clauses_; }
    Polarity bias() const { return bias_; }

private:
    FeatureSet vars_;
    std::vector<SelectorClause> clauses_;
    Polarity bias_;
};

/// A total assignment lists the variables set to true; the rest are false.
struct SatResult {
    bool satisfiable = false;
    FeatureSet true_vars;
};

/// Complete backtracking search with unit propagation. Decisions pick the
/// unassigned variable with the highest id and try the biased value first.
SatResult sat_solve(const SelectorFormula& formula);

}  // namespace pxp
