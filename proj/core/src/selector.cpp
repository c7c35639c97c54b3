#include "pxp/selector.hpp"

#include <algorithm>
#include <cstdint>

#include "pxp/errors.hpp"

namespace pxp {

namespace {

enum : std::int8_t { kUnset = -1, kFalse = 0, kTrue = 1 };

class Search {
public:
    explicit Search(const SelectorFormula& f) : f_(f) {
        for (FeatureId v : f.vars()) max_var_ = std::max(max_var_, v);
    }

    bool solve(std::vector<std::int8_t>& a) {
        if (!propagate(a)) return false;
        // Decide highest id first.
        for (auto it = f_.vars().ids().rbegin(); it != f_.vars().ids().rend(); ++it) {
            if (a[static_cast<std::size_t>(*it)] != kUnset) continue;
            std::int8_t first = f_.bias() == Polarity::PreferTrue ? kTrue : kFalse;
            for (std::int8_t value : {first, static_cast<std::int8_t>(1 - first)}) {
                std::vector<std::int8_t> trial = a;
                trial[static_cast<std::size_t>(*it)] = value;
                if (solve(trial)) {
                    a = std::move(trial);
                    return true;
                }
            }
            return false;
        }
        return true;
    }

    std::vector<std::int8_t> empty_assignment() const {
        return std::vector<std::int8_t>(static_cast<std::size_t>(max_var_ + 1), kUnset);
    }

private:
    bool propagate(std::vector<std::int8_t>& a) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : f_.clauses()) {
                const SelectorLiteral* unit = nullptr;
                int unassigned = 0;
                bool sat = false;
                for (const auto& lit : clause) {
                    std::int8_t v = a[static_cast<std::size_t>(lit.var)];
                    if (v == kUnset) {
                        ++unassigned;
                        unit = &lit;
                    } else if ((v == kTrue) == lit.positive) {
                        sat = true;
                        break;
                    }
                }
                if (sat) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    a[static_cast<std::size_t>(unit->var)] = unit->positive ? kTrue : kFalse;
                    changed = true;
                }
            }
        }
        return true;
    }

    const SelectorFormula& f_;
    FeatureId max_var_ = 0;
};

}  // namespace

std::string to_string(const SelectorClause& clause) {
    std::string s = "(";
    for (std::size_t k = 0; k < clause.size(); ++k) {
        if (k) s += " | ";
        if (!clause[k].positive) s += "~";
        s += "u" + std::to_string(clause[k].var);
    }
    return s + ")";
}

void SelectorFormula::add_clause(SelectorClause clause) {
    for (const auto& lit : clause)
        if (!vars_.contains(lit.var))
            throw UsageError("selector literal over unknown variable u" + std::to_string(lit.var));
    clauses_.push_back(std::move(clause));
}

SatResult sat_solve(const SelectorFormula& formula) {
    Search search(formula);
    auto a = search.empty_assignment();
    SatResult r;
    if (!search.solve(a)) return r;
    r.satisfiable = true;
    for (FeatureId v : formula.vars())
        if (a[static_cast<std::size_t>(v)] == kTrue) r.true_vars.insert(v);
    return r;
}

}  // namespace pxp
