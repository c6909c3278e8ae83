#ifndef BIVEK_POISSON_HPP
#define BIVEK_POISSON_HPP

#include "bivek/bicomplex.hpp"
#include "bivek/closure.hpp"

#include <vector>

namespace bivek {

/**
 * @brief Per-component boundary trace: dense samples at θ_k = 2πk/N.
 *
 * plus[k] and minus[k] hold the idempotent components of f(e^{iθ_k}).
 */
struct BoundaryTrace {
    std::vector<Complex> plus;
    std::vector<Complex> minus;

    std::size_t size() const { return plus.size(); }
};

/// Sample the boundary values of f on an N-point uniform grid.
BoundaryTrace sample_boundary(const Func& f, int n_theta);

/// Synthesize a trace from per-component Fourier coefficients:
/// plus(θ) = Σ_k plus_fourier[k]·e^{ikθ} over the given harmonics, same for minus.
BoundaryTrace trace_from_fourier(const std::vector<std::pair<int, Complex>>& plus_fourier,
                                 const std::vector<std::pair<int, Complex>>& minus_fourier,
                                 int n_theta);

/// P_r(θ) = (1−r²)/(1−2r·cosθ+r²); unit mean, P₀ ≡ 1.
double poisson_kernel(double r, double theta);

/**
 * @brief Bicomplex Poisson extension of a boundary trace.
 *
 * Returns p⁺·((1/2π)⟨(f_b⁺)*, P_r(θ−·)⟩)* + p⁻·(1/2π)⟨f_b⁻, P_r(θ−·)⟩ with
 * the pairings computed by periodic trapezoid over the trace grid.  The plus
 * component passes through a conjugation because (f⁺)* is the holomorphic
 * object on that slice; for a real kernel the two conjugations cancel
 * numerically, and the structure is kept as documentation of the convention.
 */
Bicomplex poisson_extend(const BoundaryTrace& trace, double r, double theta);

} // namespace bivek

#endif // BIVEK_POISSON_HPP
