#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pxp/generator.hpp"

namespace pxp {

/// Outcome of one property across a randomized corpus.
struct PropertyTally {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::string first_failure;  // includes the instance seed
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::uint64_t instances = 0;
    std::vector<PropertyTally> properties;

    bool ok() const;
    const PropertyTally* find(const std::string& name) const;
};

struct SuiteOptions {
    GeneratorOptions generator;
    int random_orders = 3;
    int refinement_pairs_per_instance = 1;
};

/// Property names used in SuiteReport.
namespace property {
inline constexpr const char* kEnumeration = "enumeration equals brute force";
inline constexpr const char* kFindOne = "find_one_xp output is an explanation";
inline constexpr const char* kCallCount = "find_one_xp makes |S| oracle calls";
inline constexpr const char* kMonotone = "predicate monotonicity";
inline constexpr const char* kComplement = "wcxp(Y) = not waxp(S \\ Y)";
inline constexpr const char* kDuality = "MHS duality";
inline constexpr const char* kRefinement = "refinement (relaxed vs concretized)";
inline constexpr const char* kNested = "nested duality along deletion chains";
inline constexpr const char* kLemmas = "hitting-set lemmas";
inline constexpr const char* kNecessity = "necessity / relevancy vs brute force";
inline constexpr const char* kPrediction = "prediction_set vs enumeration";
}  // namespace property

/// Runs every property on `instances` random problems. Instance k is generated
/// from seed + k so a failure can be replayed alone.
SuiteReport run_property_suite(std::uint64_t seed, std::uint64_t instances, const SuiteOptions& options = {});

}  // namespace pxp
