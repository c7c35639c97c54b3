#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pxp/problem.hpp"

namespace pxp {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Pr(prediction in T | x_X = z_X) with every feature uniform and independent
/// over its domain; features outside X (specified or not) range freely.
/// Exact: per consistent leaf, the product of per-feature value counts.
/// Throws UnsupportedError when a real-valued feature is present.
Rational paxp_probability(const ExplanationProblem& problem, const FeatureSet& x);

/// paxp_probability(problem, x) >= delta, for delta in [0, 1].
bool is_weak_paxp(const ExplanationProblem& problem, const FeatureSet& x, const Rational& delta);

/// "3/4", "0.75", "1" -> exact rational. Throws UsageError on malformed text.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

}  // namespace pxp
