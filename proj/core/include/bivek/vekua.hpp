#ifndef BIVEK_VEKUA_HPP
#define BIVEK_VEKUA_HPP

#include "bivek/bicomplex.hpp"
#include "bivek/bipoly.hpp"
#include "bivek/calculus.hpp"
#include "bivek/closure.hpp"

#include <vector>

namespace bivek {

/**
 * @brief The bicomplex Vekua equation ∂̄w = A·w + B·conj(w) with polynomial
 * coefficients.
 *
 * conj_kind selects the conjugation in the B-term.  The default bar_ij is
 * the one under which the equation decouples into two complex problems on
 * the idempotent components; bar_j is kept for experiments and rejected by
 * decouple().
 */
struct VekuaProblem {
    BiPoly A;
    BiPoly B;
    ConjKind conj_kind = ConjKind::bar_ij;
    int degree_cap = 24;

    /// Enforce degree_cap ≥ max bidegree of A and B (DegreeOverflow otherwise).
    void validate() const;
};

/**
 * @brief Outcome of solve_fixed_point.
 *
 * residual_sup is recomputed independently of the iteration (exact ∂̄ of the
 * polynomial iterate over the probe set), so a report never takes the
 * iteration's word for its own accuracy.  truncated_mass is the total
 * coefficient magnitude discarded by degree_cap truncation across all
 * iterations; a nonzero value with a small residual means the cap only
 * removed negligible tail mass.
 */
struct SolveReport {
    BiPoly solution;
    double residual_sup = 0.0;
    int iterations = 0;
    bool converged = false;
    double truncated_mass = 0.0;
    std::vector<Complex> probes;
};

/// Deterministic default probe set: radii {0, 0.3, 0.6, 0.9} × 16 angles.
std::vector<Complex> default_probes();

/**
 * @brief Sup over probes of ‖∂̄w − A·w − B·conj(w)‖_B.
 *
 * Polynomial w uses the exact ∂̄; closures use their analytic ∂̄ when present
 * and otherwise the finite-difference service (default order 6, h = 1e−3,
 * with boundary fallback).  Coefficient products are evaluated pointwise, so
 * no degree cap applies here.
 */
double residual(const VekuaProblem& problem, const Func& w, const std::vector<Complex>& probes,
                FDStencil stencil = {});

/**
 * @brief Similarity-principle solution for B ≡ 0: w = φ·bexp(T_B(A)).
 *
 * φ must be B-holomorphic (holomorphy_check true); the result is the product
 * closure, whose exponential factor is never a zero divisor.  Satisfies
 * ∂̄w = A·w wherever T_B right-inverts ∂̄ on A, i.e. throughout the disk for
 * polynomial A.
 */
ClosureFn solve_similarity(const BiPoly& A, const BiPoly& phi);

/**
 * @brief Truncated fixed-point iteration w ← φ + T_B(A·w + B·conj(w)).
 *
 * Stops when the coefficient change drops below step_tol or after max_iter
 * sweeps; each sweep truncates at problem.degree_cap and accumulates the
 * discarded mass.  The final residual is then measured independently; if it
 * exceeds residual_tol (or an iterate goes non-finite) the iteration did not
 * contract and NonConvergence is thrown.
 */
SolveReport solve_fixed_point(const VekuaProblem& problem, const BiPoly& phi,
                              int max_iter = 50, double step_tol = 1e-14,
                              double residual_tol = 1e-8,
                              std::vector<Complex> probes = {});

/**
 * @brief The two complex Vekua problems carried by a bicomplex one.
 *
 * With u = (w⁺)* the plus slice reads ∂u/∂z* = plus_a·u + plus_b·u* where
 * plus_a = (A⁺)*, plus_b = (B⁺)*; the minus slice is ∂w⁻/∂z* = minus_a·w⁻ +
 * minus_b·(w⁻)* with minus_a = A⁻, minus_b = B⁻.  Per-probe moduli of the
 * two complex residuals and the bicomplex residual come back side by side;
 * the norm sandwich bounds each by √2 times the other.
 */
struct DecoupledReport {
    ComplexPoly plus_a, plus_b;
    ComplexPoly minus_a, minus_b;
    std::vector<Complex> probes;
    std::vector<double> plus_residual;
    std::vector<double> minus_residual;
    std::vector<double> bicomplex_residual;
};

/// Decouple problem/w into the two complex slices (ConventionError unless
/// conj_kind is bar_ij, since only that conjugation acts componentwise).
DecoupledReport decouple(const VekuaProblem& problem, const BiPoly& w,
                         std::vector<Complex> probes = {});

} // namespace bivek

#endif // BIVEK_VEKUA_HPP
