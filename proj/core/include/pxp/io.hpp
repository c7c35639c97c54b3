#pragma once

#include <string>
#include <string_view>

#include "pxp/enumerate.hpp"
#include "pxp/problem.hpp"

namespace pxp {

inline constexpr int kModelFormatVersion = 1;
inline constexpr int kQueryFormatVersion = 1;

/// Parse a "pxp-model" JSON document. Every tree invariant is checked; failures
/// are ParseError with a location such as "nodes[3].branches".
Model parse_model(std::string_view text);
ModelPtr parse_model_ptr(std::string_view text);

/// Canonical JSON text for a model. parse_model(serialize_model(m)) == m.
std::string serialize_model(const Model& model);

enum class TargetMode { Explicit, Infer, Unwanted };

struct Query {
    PartialInstance instance;
    TargetMode mode = TargetMode::Infer;
    ClassSet targets;  // resolved
};

/// Parse a "pxp-query" JSON document against a model. Every feature must be
/// listed; "unspecified" or null marks a missing value. The target is either
/// {"classes": [...]}, {"unwanted": [...]} (targets = all others) or "infer".
Query parse_query(std::string_view text, const Model& model);

std::string serialize_query(const Query& query, const Model& model);

/// {"kind":"AXp","features":[4,6],"names":["PLT","WBC"]}
std::string xp_record_json(const XpRecord& record, const FeatureSpace& space);

std::string read_text_file(const std::string& path);

}  // namespace pxp
