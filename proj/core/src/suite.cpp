#include "pxp/suite.hpp"

#include <algorithm>
#include <map>

#include "pxp/enumerate.hpp"
#include "pxp/errors.hpp"
#include "pxp/verify.hpp"

namespace pxp {

bool SuiteReport::ok() const {
    for (const auto& p : properties)
        if (p.violations) return false;
    return true;
}

const PropertyTally* SuiteReport::find(const std::string& name) const {
    for (const auto& p : properties)
        if (p.name == name) return &p;
    return nullptr;
}

namespace {

class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {
        for (const char* name : {property::kEnumeration, property::kFindOne, property::kCallCount, property::kMonotone,
                                 property::kComplement, property::kDuality, property::kRefinement, property::kNested,
                                 property::kLemmas, property::kNecessity, property::kPrediction}) {
            index_[name] = report_.properties.size();
            report_.properties.push_back({name, 0, 0, {}});
        }
    }

    void check(const char* name, bool ok, std::uint64_t instance_seed, const std::string& detail = {}) {
        auto& t = report_.properties[index_.at(name)];
        ++t.checks;
        if (!ok && t.violations++ == 0)
            t.first_failure = "seed " + std::to_string(instance_seed) + (detail.empty() ? "" : ": " + detail);
    }

private:
    SuiteReport& report_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace

SuiteReport run_property_suite(std::uint64_t seed, std::uint64_t instances, const SuiteOptions& options) {
    SuiteReport report;
    report.seed = seed;
    report.instances = instances;
    Recorder rec(report);

    for (std::uint64_t k = 0; k < instances; ++k) {
        const std::uint64_t s = seed + k;
        ProblemGenerator gen(s, options.generator);
        const ExplanationProblem problem = gen.next();
        const FeatureSet& S = problem.specified();
        const BruteForceResult bf = brute_force_xps(problem);

        rec.check(property::kPrediction,
                  problem.model().prediction_set(problem.instance()) ==
                      brute_force_prediction_set(problem.model(), problem.instance()),
                  s);

        for (Polarity bias : {Polarity::PreferTrue, Polarity::PreferFalse}) {
            XpReport r = enumerate_xps(problem, bias);
            bool same = r.axps() == bf.axps && r.cxps() == bf.cxps &&
                        r.explanations.size() == bf.axps.size() + bf.cxps.size();
            rec.check(property::kEnumeration, same, s,
                      "AXps " + to_string(r.axps()) + " vs " + to_string(bf.axps) + ", CXps " + to_string(r.cxps()) +
                          " vs " + to_string(bf.cxps));
        }
        rec.check(property::kDuality, check_mhs_duality(bf.axps, bf.cxps), s);

        std::vector<TraversalOrder> orders{TraversalOrder::ascending(), TraversalOrder::descending()};
        for (int o = 0; o < options.random_orders; ++o) orders.push_back(TraversalOrder::explicit_order(gen.shuffled(S)));
        for (const auto& order : orders) {
            for (XpKind kind : {XpKind::AXp, XpKind::CXp}) {
                TreeOracle oracle(problem);
                Extraction ex = extract_xp(oracle, kind, S, order);
                const SetFamily& family = kind == XpKind::AXp ? bf.axps : bf.cxps;
                rec.check(property::kFindOne, family.contains(ex.result), s,
                          std::string(to_string(kind)) + " " + ex.result.str());
                rec.check(property::kCallCount, oracle.calls() == S.size(), s);
                if (kind == XpKind::AXp) {
                    bool nested = false;
                    try {
                        nested = check_nested_duality(problem, DeletionChain(problem, ex.chain));
                    } catch (const Error&) {
                        nested = false;
                    }
                    rec.check(property::kNested, nested, s);
                }
            }
        }

        {
            TreeOracle oracle(problem);
            const std::vector<FeatureId> ids(S.begin(), S.end());
            const std::size_t n = ids.size();
            bool monotone = true, complement = true;
            for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
                FeatureSet w;
                for (std::size_t b = 0; b < n; ++b)
                    if (m & (std::size_t{1} << b)) w.insert(ids[b]);
                bool wa = oracle.waxp_holds(w), wc = oracle.wcxp_holds(w);
                complement = complement && (wc == !oracle.waxp_holds(S - w));
                for (FeatureId i : S - w) {
                    if (wa && !oracle.waxp_holds(w.with(i))) monotone = false;
                    if (wc && !oracle.wcxp_holds(w.with(i))) monotone = false;
                }
            }
            rec.check(property::kMonotone, monotone, s);
            rec.check(property::kComplement, complement, s);
        }

        rec.check(property::kLemmas, check_hitting_lemmas(problem), s);

        for (int p = 0; p < options.refinement_pairs_per_instance; ++p)
            rec.check(property::kRefinement, check_refinement(RefinementPair(problem, gen.random_cover(problem))), s);

        for (FeatureId i : S) {
            bool in_all = std::all_of(bf.axps.begin(), bf.axps.end(), [&](const FeatureSet& x) { return x.contains(i); });
            bool in_some = std::any_of(bf.axps.begin(), bf.axps.end(), [&](const FeatureSet& x) { return x.contains(i); });
            rec.check(property::kNecessity, is_necessary(problem, i) == in_all && is_relevant(problem, i) == in_some, s,
                      "feature " + std::to_string(i));
        }
    }
    return report;
}

}  // namespace pxp
