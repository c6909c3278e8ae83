#ifndef BIVEK_THEODORESCU_HPP
#define BIVEK_THEODORESCU_HPP

#include "bivek/bicomplex.hpp"
#include "bivek/bipoly.hpp"

namespace bivek {

/**
 * @brief Polar quadrature grid for disk integrals with a Cauchy kernel.
 *
 * Gauss–Legendre in the radial variable × periodic trapezoid in the angular
 * one, with the angular nodes offset by a configurable fraction of a cell so
 * they never coincide with evaluation points.  The grid is laid out in polar
 * coordinates centered at the evaluation point, which cancels the 1/(ζ−z₀)
 * singularity against the Jacobian and leaves a smooth integrand.
 */
struct QuadratureGrid {
    int n_r = 256;
    int n_theta = 512;
    double angular_offset = 0.5; ///< node offset in cells, θ_k = (k + offset)·2π/n_θ

    void validate() const; ///< throws SchemaError unless n_r ≥ 8, n_θ ≥ 16 even
};

// ============== Complex transforms ==============
//
// T(g)(z₀)  = −(1/π)∬_D g(ζ)/(ζ−z₀) dA(ζ)      (right inverse of ∂/∂z*)
// T*(g)(z₀) = −(1/π)∬_D g(ζ)/(ζ*−z₀*) dA(ζ)    (right inverse of ∂/∂z)
//           = (T(g*)(z₀))*.

/**
 * Closed form of T on a monomial z^m·(z*)^n, valid on |z₀| < 1, derived by
 * expanding the Cauchy kernel into angular harmonics on the two annular
 * regions ρ > |z₀| and ρ < |z₀| and integrating radially:
 *
 *   T(z^m z*^n) = z^m z*^(n+1)/(n+1) − [m > n]·z^(m−n−1)/(n+1).
 *
 * The result is again a polynomial, so T maps BiPoly to BiPoly.
 */
ComplexPoly t_monomial(int m, int n);

/// Closed form of T* on a monomial: z^(m+1) z*^n/(m+1) − [n > m]·z*^(n−m−1)/(m+1).
ComplexPoly t_star_monomial(int m, int n);

/// Linear extension of the monomial transforms to a full polynomial.
ComplexPoly t_poly(const ComplexPoly& g);
ComplexPoly t_star_poly(const ComplexPoly& g);

/// T(g)(z₀) via the closed form.
Complex t_complex(const ComplexPoly& g, Complex z0);

/// T(g)(z₀) via quadrature on the given grid (the oracle path).
Complex t_complex_quad(const ComplexPoly& g, Complex z0, const QuadratureGrid& grid = {});

/// T*(g)(z₀) via quadrature, using T*(g) = (T(g*))*.
Complex t_star_quad(const ComplexPoly& g, Complex z0, const QuadratureGrid& grid = {});

/**
 * Adaptive variant: doubles n_r and n_θ until two successive estimates agree
 * to tol; throws QuadratureDivergence if max_doublings refinements do not
 * get there.
 */
Complex t_complex_quad_adaptive(const ComplexPoly& g, Complex z0, double tol,
                                QuadratureGrid start = {.n_r = 16, .n_theta = 32},
                                int max_doublings = 6);

// ============== Bicomplex transform ==============

/// Which bicomplex Theodorescu operator to apply.
enum class TbKind {
    /// Default: (T_B f)⁺ = T*(f⁺), (T_B f)⁻ = T(f⁻) — each component gets the
    /// kernel matched to its Wirtinger operator, so ∂̄·T_B = id on polynomials.
    component_matched,
    /// Both kernels applied to the full function: (T_B f)± = T(f±) + T*(f±).
    /// Fails the right-inverse identity (the ∂T term — a Beurling transform —
    /// does not cancel); kept for falsification experiments.
    literal,
};

/// Whole-function transform in closed form; output is again a BiPoly.
BiPoly t_bicomplex_poly(const BiPoly& f, TbKind kind = TbKind::component_matched);

/// Pointwise value via the closed form.
Bicomplex t_bicomplex(const BiPoly& f, Complex z0, TbKind kind = TbKind::component_matched);

/// Pointwise value via quadrature (oracle path).
Bicomplex t_bicomplex_quad(const BiPoly& f, Complex z0, const QuadratureGrid& grid = {},
                           TbKind kind = TbKind::component_matched);

} // namespace bivek

#endif // BIVEK_THEODORESCU_HPP
