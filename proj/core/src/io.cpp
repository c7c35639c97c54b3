#include "pxp/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pxp/errors.hpp"

namespace pxp {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string at(const std::string& where, const char* key) { return where.empty() ? key : where + "." + key; }
std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where, "expected a string");
    return j.get<std::string>();
}

double get_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where, "expected a number");
    return j.get<double>();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
}

void check_header(const json& doc, const char* format, int version) {
    if (get_string(field(doc, "format", ""), "format") != format)
        throw ParseError("format", std::string("expected \"") + format + "\"");
    const json& v = field(doc, "version", "");
    if (!v.is_number_integer() || v.get<int>() != version)
        throw ParseError("version", "unsupported version (expected " + std::to_string(version) + ")");
}

Domain parse_domain(const json& j, const std::string& where) {
    std::string type = get_string(field(j, "type", where), at(where, "type"));
    try {
        if (type == "categorical") {
            const json& vals = field(j, "values", where);
            if (!vals.is_array()) throw ParseError(at(where, "values"), "expected an array");
            std::vector<std::string> labels;
            for (std::size_t k = 0; k < vals.size(); ++k) labels.push_back(get_string(vals[k], at(at(where, "values"), k)));
            return Domain::categorical(std::move(labels));
        }
        if (type == "integer") {
            const json& lo = field(j, "lo", where);
            const json& hi = field(j, "hi", where);
            if (!lo.is_number_integer() || !hi.is_number_integer()) throw ParseError(where, "integer bounds expected");
            return Domain::integer(lo.get<std::int64_t>(), hi.get<std::int64_t>());
        }
        if (type == "real")
            return Domain::real(get_number(field(j, "lo", where), at(where, "lo")),
                                get_number(field(j, "hi", where), at(where, "hi")));
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(where, e.what());
    }
    throw ParseError(at(where, "type"), "unknown domain type '" + type + "'");
}

json domain_json(const Domain& d) {
    if (d.is_categorical()) return {{"type", "categorical"}, {"values", d.as_categorical().labels}};
    if (d.is_integer()) return {{"type", "integer"}, {"lo", d.as_integer().lo}, {"hi", d.as_integer().hi}};
    return {{"type", "real"}, {"lo", d.as_real().lo}, {"hi", d.as_real().hi}};
}

// A feature value from JSON: labels for categorical, numbers (or numeric strings) otherwise.
std::optional<Value> parse_value(const json& j, const Domain& d) {
    if (j.is_string()) return d.parse(j.get<std::string>());
    if (j.is_number() && !d.is_categorical()) {
        double v = j.get<double>();
        if (d.contains(v)) return v;
    }
    return std::nullopt;
}

json value_json(Value v, const Domain& d) {
    if (d.is_categorical()) return d.format(v);
    if (d.is_integer()) return static_cast<std::int64_t>(v);
    return v;
}

ClassId parse_class_ref(const json& j, const FeatureSpace& space, const std::string& where) {
    std::string key = j.is_number_integer() ? std::to_string(j.get<std::int64_t>()) : get_string(j, where);
    auto c = space.find_class(key);
    if (!c) throw ParseError(where, "unknown class '" + key + "'");
    return *c;
}

}  // namespace

Model parse_model(std::string_view text) {
    json doc = parse_json(text);
    check_header(doc, "pxp-model", kModelFormatVersion);

    const json& jf = field(doc, "features", "");
    if (!jf.is_array() || jf.empty()) throw ParseError("features", "expected a nonempty array");
    std::vector<FeatureDecl> features;
    std::map<std::string, FeatureId> feature_ids;
    for (std::size_t k = 0; k < jf.size(); ++k) {
        std::string where = at("features", k);
        std::string name = get_string(field(jf[k], "name", where), at(where, "name"));
        if (!feature_ids.emplace(name, static_cast<FeatureId>(k + 1)).second)
            throw ParseError(at(where, "name"), "duplicate feature '" + name + "'");
        features.push_back({name, parse_domain(field(jf[k], "domain", where), at(where, "domain"))});
    }

    const json& jc = field(doc, "classes", "");
    if (!jc.is_array()) throw ParseError("classes", "expected an array");
    std::vector<ClassDecl> classes;
    for (std::size_t k = 0; k < jc.size(); ++k) {
        std::string where = at("classes", k);
        if (jc[k].is_string()) {
            classes.push_back({jc[k].get<std::string>(), std::nullopt});
        } else {
            ClassDecl c{get_string(field(jc[k], "name", where), at(where, "name")), std::nullopt};
            if (auto it = jc[k].find("number"); it != jc[k].end()) {
                if (!it->is_number_integer()) throw ParseError(at(where, "number"), "expected an integer");
                c.number = it->get<std::int64_t>();
            }
            classes.push_back(std::move(c));
        }
    }
    std::optional<FeatureSpace> space;
    try {
        space.emplace(std::move(features), std::move(classes));
    } catch (const DomainError& e) {
        throw ParseError("classes", e.what());
    }

    const json& jn = field(doc, "nodes", "");
    if (!jn.is_array() || jn.empty()) throw ParseError("nodes", "expected a nonempty array");
    std::map<int, std::size_t> index_of;
    for (std::size_t k = 0; k < jn.size(); ++k) {
        const json& id = field(jn[k], "id", at("nodes", k));
        if (!id.is_number_integer()) throw ParseError(at(at("nodes", k), "id"), "expected an integer");
        if (!index_of.emplace(id.get<int>(), k).second)
            throw ParseError(at(at("nodes", k), "id"), "duplicate node id " + std::to_string(id.get<int>()));
    }

    std::vector<Node> nodes(jn.size());
    for (std::size_t k = 0; k < jn.size(); ++k) {
        const json& j = jn[k];
        std::string where = at("nodes", k);
        Node& n = nodes[k];
        n.id = j["id"].get<int>();
        if (j.contains("class")) {
            if (j.contains("children") || j.contains("feature"))
                throw ParseError(where, "leaf must not carry a feature or children");
            n.label = parse_class_ref(j["class"], *space, at(where, "class"));
            continue;
        }
        std::string fname = get_string(field(j, "feature", where), at(where, "feature"));
        auto fit = feature_ids.find(fname);
        if (fit == feature_ids.end()) throw ParseError(at(where, "feature"), "unknown feature '" + fname + "'");
        n.feature = fit->second;
        const Domain& dom = space->domain(n.feature);

        const json& jch = field(j, "children", where);
        if (!jch.is_array()) throw ParseError(at(where, "children"), "expected an array");
        for (std::size_t c = 0; c < jch.size(); ++c) {
            if (!jch[c].is_number_integer()) throw ParseError(at(at(where, "children"), c), "expected a node id");
            auto it = index_of.find(jch[c].get<int>());
            if (it == index_of.end())
                throw ParseError(at(at(where, "children"), c), "unknown node id " + std::to_string(jch[c].get<int>()));
            n.children.push_back(it->second);
        }

        if (j.contains("threshold")) {
            if (!dom.is_ordered()) throw ParseError(at(where, "threshold"), "threshold split on categorical feature");
            n.test = ThresholdTest{get_number(j["threshold"], at(where, "threshold"))};
            if (n.children.size() != 2) throw ParseError(at(where, "children"), "threshold split needs 2 children");
        } else if (j.contains("branches")) {
            std::string bw = at(where, "branches");
            if (!dom.is_categorical()) throw ParseError(bw, "value-set split on non-categorical feature");
            const json& jb = j["branches"];
            if (!jb.is_array()) throw ParseError(bw, "expected an array of value lists");
            ValueSetTest test;
            std::set<Value> seen;
            for (std::size_t b = 0; b < jb.size(); ++b) {
                if (!jb[b].is_array() || jb[b].empty()) throw ParseError(at(bw, b), "expected a nonempty value list");
                std::vector<Value> branch;
                for (std::size_t v = 0; v < jb[b].size(); ++v) {
                    auto val = parse_value(jb[b][v], dom);
                    if (!val) throw ParseError(at(at(bw, b), v), "value not in domain of '" + fname + "'");
                    if (!seen.insert(*val).second) throw ParseError(at(at(bw, b), v), "split branches overlap");
                    branch.push_back(*val);
                }
                test.branches.push_back(std::move(branch));
            }
            if (seen.size() != *dom.cardinality()) throw ParseError(bw, "split does not cover domain");
            if (test.branches.size() != n.children.size())
                throw ParseError(at(where, "children"), "one child per branch required");
            n.test = std::move(test);
        } else {
            throw ParseError(where, "internal node needs 'threshold' or 'branches'");
        }
    }

    const json& jr = field(doc, "root", "");
    if (!jr.is_number_integer()) throw ParseError("root", "expected a node id");
    auto rit = index_of.find(jr.get<int>());
    if (rit == index_of.end()) throw ParseError("root", "unknown node id " + std::to_string(jr.get<int>()));

    try {
        DecisionTree tree(*space, std::move(nodes), rit->second);
        return Model(std::move(*space), std::move(tree));
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError("nodes", e.what());
    }
}

ModelPtr parse_model_ptr(std::string_view text) { return std::make_shared<const Model>(parse_model(text)); }

std::string serialize_model(const Model& model) {
    const FeatureSpace& space = model.space();
    json doc;
    doc["format"] = "pxp-model";
    doc["version"] = kModelFormatVersion;
    json features = json::array();
    for (const auto& f : space.features()) features.push_back({{"name", f.name}, {"domain", domain_json(f.domain)}});
    doc["features"] = std::move(features);
    json classes = json::array();
    for (const auto& c : space.classes()) {
        if (c.number) classes.push_back({{"name", c.name}, {"number", *c.number}});
        else classes.push_back(c.name);
    }
    doc["classes"] = std::move(classes);
    const auto& nodes = model.tree().nodes();
    doc["root"] = nodes[model.tree().root()].id;
    json jn = json::array();
    for (const auto& n : nodes) {
        json j;
        j["id"] = n.id;
        if (n.is_leaf()) {
            j["class"] = space.class_name(n.label);
        } else {
            const Domain& dom = space.domain(n.feature);
            j["feature"] = space.name(n.feature);
            if (const auto* t = std::get_if<ThresholdTest>(&n.test)) {
                j["threshold"] = t->threshold;
            } else {
                json branches = json::array();
                for (const auto& b : std::get<ValueSetTest>(n.test).branches) {
                    json vals = json::array();
                    for (Value v : b) vals.push_back(value_json(v, dom));
                    branches.push_back(std::move(vals));
                }
                j["branches"] = std::move(branches);
            }
            json children = json::array();
            for (std::size_t c : n.children) children.push_back(nodes[c].id);
            j["children"] = std::move(children);
        }
        jn.push_back(std::move(j));
    }
    doc["nodes"] = std::move(jn);
    return doc.dump(2) + "\n";
}

Query parse_query(std::string_view text, const Model& model) {
    const FeatureSpace& space = model.space();
    json doc = parse_json(text);
    check_header(doc, "pxp-query", kQueryFormatVersion);

    const json& ji = field(doc, "instance", "");
    if (!ji.is_object()) throw ParseError("instance", "expected an object");
    for (auto it = ji.begin(); it != ji.end(); ++it)
        if (!space.find_feature(it.key())) throw ParseError(at("instance", it.key().c_str()), "unknown feature");
    Query q;
    q.instance = PartialInstance::unspecified(space.num_features());
    for (FeatureId i = 1; i <= space.num_features(); ++i) {
        const std::string& name = space.name(i);
        std::string where = at("instance", name.c_str());
        auto it = ji.find(name);
        if (it == ji.end()) throw ParseError(where, "feature missing (write \"unspecified\" to leave it open)");
        if (it->is_null() || (it->is_string() && it->get<std::string>() == "unspecified")) continue;
        auto v = parse_value(*it, space.domain(i));
        if (!v) throw ParseError(where, "value not in domain");
        q.instance.set(i, *v);
    }

    const json& jt = field(doc, "target", "");
    if (jt.is_string()) {
        if (jt.get<std::string>() != "infer") throw ParseError("target", "expected \"infer\" or an object");
        q.mode = TargetMode::Infer;
        q.targets = model.prediction_set(q.instance);
    } else if (jt.is_object() && jt.contains("classes")) {
        q.mode = TargetMode::Explicit;
        const json& jc = jt["classes"];
        if (!jc.is_array()) throw ParseError("target.classes", "expected an array");
        for (std::size_t k = 0; k < jc.size(); ++k) q.targets.insert(parse_class_ref(jc[k], space, at("target.classes", k)));
    } else if (jt.is_object() && jt.contains("unwanted")) {
        q.mode = TargetMode::Unwanted;
        const json& ju = jt["unwanted"];
        if (!ju.is_array()) throw ParseError("target.unwanted", "expected an array");
        q.targets = space.all_classes();
        for (std::size_t k = 0; k < ju.size(); ++k) q.targets.erase(parse_class_ref(ju[k], space, at("target.unwanted", k)));
    } else {
        throw ParseError("target", "expected \"infer\", {\"classes\": [...]} or {\"unwanted\": [...]}");
    }
    if (q.targets.empty()) throw ParseError("target", "target class set is empty");
    if (static_cast<int>(q.targets.size()) == space.num_classes())
        throw ParseError("target", "target class set contains every class");
    return q;
}

std::string serialize_query(const Query& query, const Model& model) {
    const FeatureSpace& space = model.space();
    json doc;
    doc["format"] = "pxp-query";
    doc["version"] = kQueryFormatVersion;
    json inst = json::object();
    for (FeatureId i = 1; i <= space.num_features(); ++i) {
        const auto& e = query.instance.entry(i);
        inst[space.name(i)] = e ? value_json(*e, space.domain(i)) : json("unspecified");
    }
    doc["instance"] = std::move(inst);
    if (query.mode == TargetMode::Infer) {
        doc["target"] = "infer";
    } else {
        json names = json::array();
        for (ClassId c = 0; c < space.num_classes(); ++c)
            if (query.targets.contains(c) == (query.mode == TargetMode::Explicit)) names.push_back(space.class_name(c));
        doc["target"] = {{query.mode == TargetMode::Explicit ? "classes" : "unwanted", std::move(names)}};
    }
    return doc.dump(2) + "\n";
}

std::string xp_record_json(const XpRecord& record, const FeatureSpace& space) {
    json names = json::array();
    for (FeatureId i : record.features) names.push_back(space.name(i));
    json j;
    j["kind"] = to_string(record.kind);
    j["features"] = record.features.ids();
    j["names"] = std::move(names);
    return j.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace pxp
