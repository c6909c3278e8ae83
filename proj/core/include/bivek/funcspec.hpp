#ifndef BIVEK_FUNCSPEC_HPP
#define BIVEK_FUNCSPEC_HPP

#include "bivek/bipoly.hpp"
#include "bivek/closure.hpp"
#include "bivek/vekua.hpp"

#include <string>

namespace bivek {

/**
 * Function-spec JSON exchange format (all APIs are string-in/string-out so
 * the JSON library stays an implementation detail of the core):
 *
 *   {"kind":"bipoly","terms":[{"mz":m,"mzs":n,"coeff":[a,b,c,d]}, ...]}
 *     — Σ c·ẑ^m·(ẑ*)^n with four-real bicomplex coefficients; term order is
 *       irrelevant and duplicate (mz,mzs) entries are summed.
 *
 *   {"kind":"closure","name":<builtin>,"params":{...}} with builtins
 *     pow_one_minus_z (params.beta), exp_of_bipoly (params.poly = bipoly
 *     document) and product_exp (params.phi, params.exponent = bipoly
 *     documents; the similarity-solution form, so solver output can be fed
 *     back into residual checks).
 */

/// Parse a function-spec document.  Throws SchemaError on malformed JSON,
/// negative degrees, bad coefficient arrays, or unknown kind/name.
Func parse_function_spec(const std::string& json_text);

/// Serialize a BiPoly as a function-spec document (indent < 0 = compact).
std::string bipoly_spec_json(const BiPoly& f, int indent = -1);

/// Serialize either representation; throws SchemaError for ad-hoc closures
/// that carry no document form.
std::string function_spec_json(const Func& f, int indent = -1);

/// Conjugation names used in JSON and CLI flags.
std::string conj_name(ConjKind kind);
ConjKind conj_from_name(const std::string& name); ///< SchemaError on unknown names

/// Problem documents {"A":<spec>,"B":<spec>,"conj":"bar_ij"|"bar_j",
/// "degree_cap":int}; A and B must be bipoly specs, conj defaults to bar_ij
/// and degree_cap to 24 when absent.
VekuaProblem parse_problem(const std::string& json_text);
std::string problem_json(const VekuaProblem& problem, int indent = -1);

} // namespace bivek

#endif // BIVEK_FUNCSPEC_HPP
