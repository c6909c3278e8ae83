#ifndef BIVEK_CALCULUS_HPP
#define BIVEK_CALCULUS_HPP

#include "bivek/bicomplex.hpp"
#include "bivek/bipoly.hpp"
#include "bivek/closure.hpp"

namespace bivek {

/**
 * The bicomplex Wirtinger operators ∂ = ½(∂x − j∂y) and ∂̄ = ½(∂x + j∂y).
 * On the idempotent components they reduce to the ordinary complex operators:
 *   (∂̄f)⁺ = ∂f⁺/∂z,  (∂̄f)⁻ = ∂f⁻/∂z*,
 *   (∂f)⁺  = ∂f⁺/∂z*, (∂f)⁻  = ∂f⁻/∂z.
 * ∂̄ annihilates exactly the functions with holomorphy_check(f) true.
 */
BiPoly dbar(const BiPoly& f);
BiPoly d(const BiPoly& f);

/// Which Wirtinger operator a finite-difference request realizes.
enum class WirtingerOp { dbar, d };

/// Centered finite-difference stencil: order ∈ {2, 4, 6}, step h > 0.
/// Evaluation points z ± k·h and z ± i·k·h must stay inside the disk.
struct FDStencil {
    int order = 6;
    double h = 1e-3;
};

/**
 * @brief Finite-difference realization of ∂ or ∂̄ for closures.
 *
 * Combines centered ∂x and ∂y stencils per the operator definitions; error
 * O(h^order).  Throws StencilOutOfDomain when the stencil does not fit
 * inside the closed unit disk around z₀.
 */
Bicomplex fd_apply(const Func& f, WirtingerOp which, Complex z0, FDStencil stencil = {});

/**
 * @brief fd_apply with a boundary fallback.
 *
 * When the requested stencil would clip the boundary, the step is shrunk to
 * fit and the result is Richardson-combined across h and h/2 to recover the
 * lost accuracy.  Still throws StencilOutOfDomain when z₀ leaves no usable
 * margin (|z₀| ≥ 1 − 1e−9) or lies outside the disk.
 */
Bicomplex fd_apply_auto(const Func& f, WirtingerOp which, Complex z0, FDStencil stencil = {});

} // namespace bivek

#endif // BIVEK_CALCULUS_HPP
