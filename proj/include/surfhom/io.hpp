#pragma once

// JSON problem files and report serialization.
//
// Problem file (schema_version 1, unknown keys rejected):
//   {"schema_version": 1, "fiber_genus": 2,
//    "base": {"type": "closed" | "one_boundary", "genus": 1},
//    "holonomy": [{"word": "Ta1 Tb1^-1"}, {"matrix": [[1,0,0,0], ...]}]}
//
// Exact numbers: integers are JSON integers, or decimal strings when they do
// not fit in 64 bits. Rationals are [numerator, denominator] pairs.

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "surfhom/bundle_homology.hpp"
#include "surfhom/fixed_class_search.hpp"
#include "surfhom/symplectic.hpp"

namespace surfhom {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, wrong types, unknown keys, bad word syntax.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ParseError for malformed input and ValidationError when a
/// well-formed problem violates an invariant.
HolonomyProblem parse_problem(std::string_view text);

Json problem_to_json(const HolonomyProblem& p);
std::string serialize_problem(const HolonomyProblem& p);

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json vector_to_json(std::span<const Rational> v);
Json matrix_to_json(const IntegerMatrix& m);

Json report_to_json(const HolonomyProblem& p, const BettiReport& r);

struct SearchSummary {
    std::size_t max_len = 0;
    std::size_t distinct_products = 0;
    std::vector<SearchHit> hits;
};

Json search_to_json(const HolonomyProblem& p, const SearchSummary& s);

/// "3", "-1/2"
std::string format_rational(const Rational& x);

} // namespace surfhom
