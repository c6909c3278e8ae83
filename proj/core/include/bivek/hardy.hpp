#ifndef BIVEK_HARDY_HPP
#define BIVEK_HARDY_HPP

#include "bivek/bicomplex.hpp"
#include "bivek/closure.hpp"

#include <utility>
#include <vector>

namespace bivek {

// ============== Circle integrals and Hardy profiles ==============

/// Periodic-trapezoid estimate of ∫₀^{2π} ‖f(re^{iθ})‖_B^p dθ.
/// Spectrally accurate for integrands smooth in θ.  Requires 0 < r < 1,
/// p > 0, n_theta ≥ 64.
double circle_lp(const Func& f, double r, double p, int n_theta = 1024);

/// The three componentwise circle integrals used by the norm-sandwich
/// diagnostics, evaluated on one shared grid so the comparison is exact:
///   plus  = ∫|f⁺|^p,  minus = ∫|f⁻|^p,  sum = ∫(|f⁺|+|f⁻|)^p.
struct ComponentLp {
    double plus = 0.0;
    double minus = 0.0;
    double sum = 0.0;
};
ComponentLp circle_lp_components(const Func& f, double r, double p, int n_theta = 1024);

/// Geometric radii schedule r_k = 1 − 2^{−k}, k = 1…K.
std::vector<double> default_radii(int K = 12);

/**
 * @brief Circle-integral profile over a radii schedule.
 *
 * bounded_flag applies a least-squares slope test on the tail (last 6 radii)
 * of log circle_values against log 1/(1−r): slopes below 0.5 count as
 * bounded.  The threshold sits halfway between the flat profile of an H^p
 * member and the slope-≥1 growth of the unbounded closure family, so the
 * heuristic is insensitive to the exact cutoff.
 */
struct HardyProfile {
    double p = 2.0;
    std::vector<double> radii;
    std::vector<double> circle_values;
    double sup_estimate = 0.0;
    bool bounded_flag = true;
};
HardyProfile hardy_profile(const Func& f, double p,
                           std::vector<double> radii = {}, int n_theta = 1024);

/// ∫₀^{2π} ‖f(e^{iθ}) − f(re^{iθ})‖_B^p dθ; f must be evaluable on the
/// closed disk (polynomials and boundary-regular closures).
double boundary_gap(const Func& f, double p, double r, int n_theta = 1024);

// ============== Nontangential approach ==============

/**
 * @brief A discrete approach path to e^{iθ₀} inside a Stolz cone.
 *
 * Points must lie in the open disk, within the aperture cone (the angle at
 * e^{iθ₀} between the chord to the point and the radius is ≤ aperture), and
 * at strictly decreasing distance from the boundary point.
 */
struct StolzPath {
    double theta0 = 0.0;
    double aperture = 0.5;
    std::vector<Complex> points;

    /// Throws PathInvalid with the offending index/reason.
    void validate() const;
};

/// Dyadic path z_k = e^{iθ₀}·(1 − s₀·2^{−k}·e^{iβ}), k = 0…count−1.  The
/// approach angle β tilts the path off the radius (|β| ≤ aperture).
StolzPath make_stolz_path(double theta0, double aperture, int count,
                          double approach_angle = 0.0, double s0 = 0.5);

/// Limit estimate along a Stolz path with two Richardson levels in the
/// distance to the boundary point; oscillation = max pairwise distance of
/// the last three extrapolants (small ⇔ the limit is trustworthy).
struct StolzProbe {
    Bicomplex limit;
    double oscillation = 0.0;
    std::vector<Bicomplex> extrapolants;
};
StolzProbe stolz_probe(const Func& f, const StolzPath& path);

// ============== Distributional boundary pairings ==============

/// Real trigonometric polynomial a₀ + Σ_m (c_m cos mθ + s_m sin mθ).
struct TrigPoly {
    double a0 = 0.0;
    std::vector<double> cos_coef; ///< c₁, c₂, …
    std::vector<double> sin_coef; ///< s₁, s₂, …

    double eval(double theta) const;
    int degree() const;

    static TrigPoly one() { return {1.0, {}, {}}; }
    static TrigPoly cosine(int m);
    static TrigPoly sine(int m);
};

/// Complex test Σ_m c_m·e^{imθ} for the optional complex-test pairing mode.
struct ComplexTrigPoly {
    std::vector<std::pair<int, Complex>> modes;
    Complex eval(double theta) const;
};

/// Single-radius pairing ∫₀^{2π} f(re^{iθ})·test(θ) dθ (trapezoid).
Bicomplex pair_value(const Func& f, const TrigPoly& test, double r, int n_theta = 1024);

/**
 * @brief Distributional boundary pairing: limit of pair_value as r ↗ 1.
 *
 * Richardson order 2 in (1−r) along the schedule; throws
 * ExtrapolationUnstable when the extrapolant tail differences stop
 * decreasing (or go non-finite) instead of settling.
 */
Bicomplex dist_pair(const Func& f, const TrigPoly& test,
                    std::vector<double> radii = {}, int n_theta = 1024);

/// Complex-test variant.  The minus component pairs directly; the plus
/// component pairs through conjugation, (∫ (f⁺)*·test)*, so that for
/// real-valued tests the result coincides with dist_pair.
Bicomplex dist_pair_complex(const Func& f, const ComplexTrigPoly& test,
                            std::vector<double> radii = {}, int n_theta = 1024);

// ============== Growth fitting ==============

/// Least-squares fit ‖f(re^{iθ})‖_B ≲ C/(1−r)^α: regress log sup_θ‖f‖
/// (4096 θ-samples) on log 1/(1−r) over the last 8 schedule radii; α is
/// clamped at 0.
struct GrowthFit {
    double C = 0.0;
    double alpha = 0.0;
    std::vector<double> radii;
    std::vector<double> sup_values;
};
GrowthFit growth_fit(const Func& f, std::vector<double> radii = {});

} // namespace bivek

#endif // BIVEK_HARDY_HPP
