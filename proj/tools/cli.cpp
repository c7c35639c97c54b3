#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pxp/assess.hpp"
#include "pxp/enumerate.hpp"
#include "pxp/errors.hpp"
#include "pxp/io.hpp"
#include "pxp/probability.hpp"
#include "pxp/suite.hpp"

namespace pxp::cli {

namespace {

using nlohmann::json;

constexpr const char* kSeedEnv = "PXP_VERIFY_SEED";
constexpr std::uint64_t kDefaultSeed = 20231;

struct Options {
    std::string model_path;
    std::string query_path;
    bool json = false;
    std::string kind = "axp";
    std::string order = "asc";
    std::string bias = "pos";
    std::string feature;
    std::string features;
    std::string delta = "1";
    int leaf = -1;
    std::string symptoms;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t instances = 100;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

FeatureId feature_ref(const FeatureSpace& space, const std::string& ref) {
    if (auto f = space.find_feature(ref)) return *f;
    char* end = nullptr;
    long id = std::strtol(ref.c_str(), &end, 10);
    if (end && *end == '\0' && space.has_feature(static_cast<FeatureId>(id))) return static_cast<FeatureId>(id);
    throw UsageError("unknown feature '" + ref + "'");
}

std::string describe(const FeatureSet& set, const ExplanationProblem& problem) {
    std::string s;
    for (FeatureId i : set) {
        if (!s.empty()) s += ", ";
        s += problem.space().name(i) + "=" + problem.space().domain(i).format(problem.instance().value(i));
    }
    return s;
}

class Session {
public:
    Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    ModelPtr model() {
        if (!model_) model_ = parse_model_ptr(read_text_file(opt_.model_path));
        return model_;
    }

    const Query& query() {
        if (!query_) query_ = parse_query(read_text_file(opt_.query_path), *model());
        return *query_;
    }

    ExplanationProblem problem() { return {model(), query().instance, query().targets}; }

    int predict_set() {
        ClassSet pred = model()->prediction_set(query().instance);
        const auto& space = model()->space();
        if (opt_.json) {
            json names = json::array();
            for (ClassId c : pred) names.push_back(space.class_name(c));
            out_ << json{{"predictions", names}}.dump() << "\n";
        } else if (pred.size() == 1) {
            out_ << space.class_name(*pred.begin()) << "\n";
        } else {
            out_ << format_classes(space, pred) << "\n";
        }
        return 0;
    }

    int check_sufficient() {
        const auto& space = model()->space();
        ClassSet pred = model()->prediction_set(query().instance);
        bool ok = model()->is_sufficient(query().instance, query().targets);
        if (opt_.json) {
            json p = json::array(), t = json::array();
            for (ClassId c : pred) p.push_back(space.class_name(c));
            for (ClassId c : query().targets) t.push_back(space.class_name(c));
            out_ << json{{"sufficient", ok}, {"predictions", p}, {"targets", t}}.dump() << "\n";
        } else {
            out_ << (ok ? "sufficient" : "not sufficient") << ": predictions " << format_classes(space, pred)
                 << ", targets " << format_classes(space, query().targets) << "\n";
        }
        return 0;
    }

    int explain() {
        XpKind kind;
        if (opt_.kind == "axp") kind = XpKind::AXp;
        else if (opt_.kind == "cxp") kind = XpKind::CXp;
        else throw UsageError("--kind must be axp or cxp");
        ExplanationProblem p = problem();
        TraversalOrder order;
        if (opt_.order == "asc") order = TraversalOrder::ascending();
        else if (opt_.order == "desc") order = TraversalOrder::descending();
        else {
            std::vector<FeatureId> perm;
            for (const auto& r : split(opt_.order, ',')) perm.push_back(feature_ref(p.space(), r));
            order = TraversalOrder::explicit_order(std::move(perm));
        }
        emit({kind, find_one_xp(p, kind, order)}, p);
        return 0;
    }

    int enumerate() {
        Polarity bias;
        if (opt_.bias == "pos") bias = Polarity::PreferTrue;
        else if (opt_.bias == "neg") bias = Polarity::PreferFalse;
        else throw UsageError("--bias must be pos or neg");
        ExplanationProblem p = problem();
        XpReport report = enumerate_xps(p, bias, [&](const XpRecord& r) { emit(r, p); });
        if (!check_mhs_duality(report.axps(), report.cxps())) {
            std::cerr << "duality check failed on the enumerated explanations\n";
            return 1;
        }
        return 0;
    }

    int necessary() {
        ExplanationProblem p = problem();
        FeatureId f = feature_ref(p.space(), opt_.feature);
        if (!p.specified().contains(f)) throw UsageError("feature '" + p.space().name(f) + "' is unspecified");
        yes_no("necessary", f, is_necessary(p, f), p);
        return 0;
    }

    int relevant() {
        ExplanationProblem p = problem();
        FeatureId f = feature_ref(p.space(), opt_.feature);
        if (!p.specified().contains(f)) throw UsageError("feature '" + p.space().name(f) + "' is unspecified");
        yes_no("relevant", f, is_relevant(p, f), p);
        return 0;
    }

    int paxp() {
        ExplanationProblem p = problem();
        FeatureSet x;
        for (const auto& r : split(opt_.features, ',')) x.insert(feature_ref(p.space(), r));
        if (!x.is_subset_of(p.specified())) throw UsageError("--features must name specified features");
        Rational delta = parse_rational(opt_.delta);
        if (delta < 0 || delta > 1) throw UsageError("--delta must lie in [0, 1]");
        Rational prob = paxp_probability(p, x);
        bool weak = prob >= delta;
        if (opt_.json) {
            out_ << json{{"features", x.ids()},
                         {"probability", format_rational(prob)},
                         {"delta", format_rational(delta)},
                         {"weak_paxp", weak}}
                        .dump()
                 << "\n";
        } else {
            out_ << "Pr(target | " << x.str() << ") = " << format_rational(prob) << " ("
                 << static_cast<double>(prob) << "); weak PAXp at delta " << format_rational(delta) << ": "
                 << (weak ? "yes" : "no") << "\n";
        }
        return 0;
    }

    int assess_leaf() {
        ModelPtr m = model();
        const auto& space = m->space();
        std::vector<Symptom> symptoms;
        for (const auto& item : split(opt_.symptoms, ',')) {
            auto eq = item.find('=');
            std::string name = item.substr(0, eq);
            std::string positive = eq == std::string::npos ? "1" : item.substr(eq + 1);
            FeatureId f = feature_ref(space, name);
            auto v = space.domain(f).parse(positive);
            if (!v) throw UsageError("'" + positive + "' is not a value of '" + space.name(f) + "'");
            symptoms.push_back({f, {*v}});
        }
        Assessment a = assess(m, opt_.leaf, symptoms);
        auto names = [&](const FeatureSet& s) {
            json arr = json::array();
            for (FeatureId i : s) arr.push_back(space.name(i));
            return arr;
        };
        if (opt_.json) {
            json j{{"leaf", a.leaf_id},
                   {"class", space.class_name(a.leaf_class)},
                   {"unspecified_symptoms", names(a.active_symptoms)},
                   {"outcome", a.outcome == AssessmentOutcome::Explained ? "explained" : "inconclusive"}};
            if (a.axp) {
                j["axp"] = {{"features", a.axp->ids()}, {"names", names(*a.axp)}};
                j["symptom_free"] = a.symptom_free;
            }
            out_ << j.dump() << "\n";
            return 0;
        }
        out_ << "leaf " << a.leaf_id << " -> " << space.class_name(a.leaf_class) << "\n";
        out_ << "active symptoms left unspecified: " << names(a.active_symptoms).dump() << "\n";
        if (!a.axp) {
            out_ << "outcome: inconclusive (instance not sufficient for the leaf class)\n";
            return 0;
        }
        out_ << "outcome: explained\nAXp " << a.axp->str() << " " << names(*a.axp).dump() << "\n";
        if (a.symptom_free) out_ << "FLAG: prediction reachable with no active symptom\n";
        return 0;
    }

    int verify() {
        SuiteReport r = run_property_suite(opt_.seed, opt_.instances);
        for (const auto& p : r.properties) {
            out_ << (p.violations ? "FAIL " : "ok   ") << p.name << " (" << p.checks << " checks";
            if (p.violations) out_ << ", " << p.violations << " violations; first at " << p.first_failure;
            out_ << ")\n";
        }
        out_ << (r.ok() ? "all properties hold" : "violations found") << " on " << r.instances
             << " instances, seed " << r.seed << "\n";
        return r.ok() ? 0 : 1;
    }

private:
    void emit(const XpRecord& r, const ExplanationProblem& p) {
        if (opt_.json) out_ << xp_record_json(r, p.space()) << "\n";
        else out_ << to_string(r.kind) << " " << r.features.str() << "  " << describe(r.features, p) << "\n";
        out_.flush();
    }

    void yes_no(const char* what, FeatureId f, bool answer, const ExplanationProblem& p) {
        if (opt_.json) out_ << json{{"feature", f}, {"name", p.space().name(f)}, {what, answer}}.dump() << "\n";
        else out_ << p.space().name(f) << ": " << (answer ? "" : "not ") << what << "\n";
    }

    const Options& opt_;
    std::ostream& out_;
    ModelPtr model_;
    std::optional<Query> query_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    if (const char* env = std::getenv(kSeedEnv)) {
        try {
            opt.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: " << kSeedEnv << " is not a number\n";
            return 2;
        }
    }

    CLI::App app{"Formal explanations of decision-tree predictions with unspecified inputs"};
    app.name(args.empty() ? "pxp" : args.front());
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "Emit one JSON record per result line");

    auto with_model = [&](CLI::App* sub) {
        sub->add_option("-m,--model", opt.model_path, "Model document (pxp-model JSON)")->required();
        return sub;
    };
    auto with_query = [&](CLI::App* sub) {
        with_model(sub);
        sub->add_option("-q,--query", opt.query_path, "Query document (pxp-query JSON)")->required();
        return sub;
    };

    auto* predict = with_query(app.add_subcommand("predict-set", "Classes reachable from the partial instance"));
    auto* sufficient = with_query(app.add_subcommand("check-sufficient", "Is the instance sufficient for the targets?"));
    auto* explain = with_query(app.add_subcommand("explain", "Compute one AXp or CXp"));
    explain->add_option("--kind", opt.kind, "axp or cxp")->check(CLI::IsMember({"axp", "cxp"}));
    explain->add_option("--order", opt.order, "asc, desc, or a comma-separated permutation of the specified features");
    auto* enumerate = with_query(app.add_subcommand("enumerate", "Enumerate all AXps and CXps"));
    enumerate->add_option("--bias", opt.bias, "Selector polarity: pos or neg")->check(CLI::IsMember({"pos", "neg"}));
    auto* necessary = with_query(app.add_subcommand("necessary", "Is a feature in every AXp?"));
    necessary->add_option("--feature", opt.feature, "Feature name or id")->required();
    auto* relevant = with_query(app.add_subcommand("relevant", "Is a feature in some AXp?"));
    relevant->add_option("--feature", opt.feature, "Feature name or id")->required();
    auto* paxp = with_query(app.add_subcommand("paxp", "Probability of an in-target prediction given fixed features"));
    paxp->add_option("--features", opt.features, "Comma-separated feature names or ids");
    paxp->add_option("--delta", opt.delta, "Threshold in [0,1], as p/q or decimal");
    auto* assess_cmd = with_model(app.add_subcommand("assess", "Assess a leaf with its active symptoms unspecified"));
    assess_cmd->add_option("--leaf", opt.leaf, "Leaf node id")->required();
    assess_cmd->add_option("--symptoms", opt.symptoms, "Comma-separated Name[=positive value] (default value 1)");
    auto* verify = app.add_subcommand("verify", "Check every property against brute force on random problems");
    verify->add_option("--seed", opt.seed, std::string("Base seed (default from ") + kSeedEnv + ")");
    verify->add_option("--instances", opt.instances, "Number of random problems");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("pxp");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    Session session(opt, out);
    try {
        if (predict->parsed()) return session.predict_set();
        if (sufficient->parsed()) return session.check_sufficient();
        if (explain->parsed()) return session.explain();
        if (enumerate->parsed()) return session.enumerate();
        if (necessary->parsed()) return session.necessary();
        if (relevant->parsed()) return session.relevant();
        if (paxp->parsed()) return session.paxp();
        if (assess_cmd->parsed()) return session.assess_leaf();
        if (verify->parsed()) return session.verify();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace pxp::cli
