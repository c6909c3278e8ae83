#ifndef BIVEK_CLOSURE_HPP
#define BIVEK_CLOSURE_HPP

#include "bivek/bicomplex.hpp"
#include "bivek/bipoly.hpp"

#include <functional>
#include <string>
#include <variant>

namespace bivek {

/**
 * @brief Evaluate-only representation of a non-polynomial function D → B.
 *
 * Carries no algebra: anything needing derivatives of a ClosureFn goes
 * through the finite-difference service in calculus.hpp, unless the closure
 * supplies its own analytic derivatives (the exponential builtin does).
 * Evaluation must be deterministic and reentrant.
 */
struct ClosureFn {
    std::function<Bicomplex(Complex)> eval;
    /// Optional analytic ∂̄ and ∂ (null when unavailable).
    std::function<Bicomplex(Complex)> dbar_analytic;
    std::function<Bicomplex(Complex)> d_analytic;
    /// Human-readable descriptor, e.g. "pow_one_minus_z(beta=0.5)".
    std::string descriptor;
    /// Function-spec JSON for the serializable built-ins; empty for ad-hoc
    /// closures that have no document form.
    std::string spec_json;

    Bicomplex operator()(Complex z) const { return eval(z); }
};

/// Either representation of a function D → B.
using Func = std::variant<BiPoly, ClosureFn>;

/// Uniform evaluation over both representations.
Bicomplex evaluate(const Func& f, Complex z);

/// Descriptor for diagnostics ("bipoly" for the polynomial case).
std::string descriptor(const Func& f);

// ============== Built-in closure library ==============

/// (1 − z)^{−β} embedded into B (plus = minus = the complex value); the
/// rational growth family.  Principal branch; 1 − z has positive real part
/// on the open disk so the branch cut is never touched.
ClosureFn make_pow_one_minus_z(double beta);

/// z ↦ bexp(g(z)) for a BiPoly exponent g, with analytic ∂̄ and ∂ via the
/// componentwise chain rule.
ClosureFn make_exp_of_bipoly(const BiPoly& g);

/// z ↦ φ(z)·bexp(g(z)): the similarity-principle product form.  No analytic
/// derivative on purpose — residual checks of similarity solutions must go
/// through finite differences to stay independent.
ClosureFn make_product_exp(const BiPoly& phi, const BiPoly& g);

} // namespace bivek

#endif // BIVEK_CLOSURE_HPP
