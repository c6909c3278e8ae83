#ifndef BIVEK_DECOMP_HPP
#define BIVEK_DECOMP_HPP

#include "bivek/bipoly.hpp"

#include <string>
#include <vector>

namespace bivek {

/**
 * @brief Function class for order-n decompositions.
 *
 * poly: ∂̄ⁿf = 0 (polyanalytic); basis ẑ*ᵏ; coefficients B-holomorphic.
 * meta: (∂̄−A)ⁿf = 0 (meta-analytic); basis ẑ*ᵏ; coefficients solve ∂̄φ = Aφ.
 * hoiv: (∂̄−A−B·conj)ⁿf = 0 (higher-order iterated Vekua); basis (ẑ+ẑ*)ᵏ —
 *   chosen because it is conjugation-invariant (real-valued), which keeps the
 *   iterated operator's action on basis powers identical for every
 *   conjugation convention; coefficients solve ∂̄φ = Aφ + B·conj(φ).
 */
enum class DecompMode { poly, meta, hoiv };

std::string mode_name(DecompMode mode);
DecompMode mode_from_name(const std::string& name); ///< SchemaError on unknown names

/// Order-n decomposition with per-mode basis powers and coefficient list.
struct DecompResult {
    DecompMode mode = DecompMode::poly;
    int order = 1;
    std::vector<BiPoly> coefficients; ///< φ₀ … φ_{n−1}
    double reconstruction_error = 0.0; ///< sup‖f − Σ basisᵏ·φ_k‖_B over probes
};

/// The basis element for a mode: ẑ* for poly/meta, ẑ+ẑ* for hoiv.
BiPoly mode_basis(DecompMode mode);

/// Fixed 64-point probe set (4 radii × 16 angles) used by the class-membership
/// and coefficient-condition checks.
std::vector<Complex> decomp_probes();

/**
 * @brief Apply L = ∂̄ − A − B·conj_{bar_ij}(·) exactly k times.
 *
 * k = 0 is the identity.  All algebra is exact on coefficient tables, so
 * nilpotency statements (Lⁿf = 0) can be asserted with zero tolerance.
 */
BiPoly iterate_op(const BiPoly& f, const BiPoly& A, const BiPoly& B, int k);

/**
 * @brief Assemble f = Σ_k basisᵏ·φ_k after checking each φ_k's coefficient
 * condition (holomorphy for poly; first-order Vekua residual ≤ tol for
 * meta/hoiv, measured on decomp_probes()).
 *
 * Throws CoefficientConditionError naming every offending index.
 */
BiPoly construct(DecompMode mode, const std::vector<BiPoly>& phis,
                 const BiPoly& A, const BiPoly& B, double tol = 1e-8);

/**
 * @brief Recover the coefficients of an order-n class member by the explicit
 * alternating sum φ_k = (1/k!)·Σ_{j=0}^{n−1−k} ((−1)ʲ/j!)·basisʲ·L^{k+j}f.
 *
 * Requires sup‖Lⁿf‖ ≤ tol on decomp_probes() (NotInClassError otherwise);
 * reports the reconstruction error of Σ basisᵏ·φ_k against f.
 */
DecompResult extract(DecompMode mode, const BiPoly& f, int n,
                     const BiPoly& A, const BiPoly& B, double tol = 1e-8);

} // namespace bivek

#endif // BIVEK_DECOMP_HPP
