#include "bivek/hardy.hpp"

#include "bivek/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bivek {

namespace {

constexpr double kPi = std::numbers::pi;

void require_circle_args(double r, double p, int n_theta, const char* who) {
    if (!(r > 0.0) || !(r < 1.0))
        throw std::domain_error(std::string(who) + ": radius " + std::to_string(r) +
                                " is not in (0, 1)");
    if (!(p > 0.0)) throw SchemaError(std::string(who) + ": p must be > 0");
    if (n_theta < 64) throw SchemaError(std::string(who) + ": n_theta must be >= 64");
}

/// Least-squares slope/intercept of y against x.
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    return {slope, intercept};
}

bool finite(const Bicomplex& w) {
    return std::isfinite(w.a) && std::isfinite(w.b) && std::isfinite(w.c) && std::isfinite(w.d);
}

/// Two Richardson levels for values sampled on the dyadic radii schedule
/// (1−r halving per step); throws when the extrapolant tail does not settle.
Bicomplex extrapolate_pairings(const std::vector<Bicomplex>& values, const char* who) {
    if (values.size() < 5)
        throw SchemaError(std::string(who) + ": need at least 5 schedule radii");
    std::vector<Bicomplex> r1;
    for (std::size_t k = 0; k + 1 < values.size(); ++k)
        r1.push_back(values[k + 1] * 2.0 - values[k]);
    std::vector<Bicomplex> r2;
    for (std::size_t k = 0; k + 1 < r1.size(); ++k)
        r2.push_back((r1[k + 1] * 4.0 - r1[k]) * (1.0 / 3.0));

    for (const Bicomplex& w : r2)
        if (!finite(w))
            throw ExtrapolationUnstable(std::string(who) +
                                        ": extrapolants are non-finite; the pairing diverges");
    // Threshold sits above the double-precision floor of boundary-peaked
    // evaluations: forming 1-z from a rounded point costs eps/(1-r) relative
    // accuracy, which integrates to ~1e-8 absolute at the deepest default
    // radius.  Genuine divergence blows past 1e-7 within a level or two.
    const std::size_t m = r2.size();
    const double d_last = norm(r2[m - 1] - r2[m - 2]);
    const double d_prev = norm(r2[m - 2] - r2[m - 3]);
    if (d_last > 1e-7 && d_last >= d_prev)
        throw ExtrapolationUnstable(std::string(who) + ": extrapolant differences stopped " +
                                    "decreasing (" + std::to_string(d_prev) + " -> " +
                                    std::to_string(d_last) + "); no distributional limit");
    return r2.back();
}

} // namespace

// ============== Circle integrals and Hardy profiles ==============

double circle_lp(const Func& f, double r, double p, int n_theta) {
    require_circle_args(r, p, n_theta, "circle_lp");
    double acc = 0.0;
    for (int k = 0; k < n_theta; ++k) {
        const double theta = 2.0 * kPi * k / n_theta;
        acc += std::pow(norm(evaluate(f, std::polar(r, theta))), p);
    }
    return acc * (2.0 * kPi / n_theta);
}

ComponentLp circle_lp_components(const Func& f, double r, double p, int n_theta) {
    require_circle_args(r, p, n_theta, "circle_lp_components");
    ComponentLp out;
    for (int k = 0; k < n_theta; ++k) {
        const double theta = 2.0 * kPi * k / n_theta;
        const Bicomplex w = evaluate(f, std::polar(r, theta));
        const double ap = std::abs(w.plus());
        const double am = std::abs(w.minus());
        out.plus += std::pow(ap, p);
        out.minus += std::pow(am, p);
        out.sum += std::pow(ap + am, p);
    }
    const double dtheta = 2.0 * kPi / n_theta;
    out.plus *= dtheta;
    out.minus *= dtheta;
    out.sum *= dtheta;
    return out;
}

std::vector<double> default_radii(int K) {
    if (K < 1) throw SchemaError("default_radii: K must be >= 1");
    std::vector<double> radii;
    for (int k = 1; k <= K; ++k) radii.push_back(1.0 - std::pow(2.0, -k));
    return radii;
}

HardyProfile hardy_profile(const Func& f, double p, std::vector<double> radii, int n_theta) {
    if (radii.empty()) radii = default_radii();
    HardyProfile profile;
    profile.p = p;
    profile.radii = radii;
    for (double r : radii)
        profile.circle_values.push_back(circle_lp(f, r, p, n_theta));
    profile.sup_estimate =
        *std::max_element(profile.circle_values.begin(), profile.circle_values.end());

    // Boundedness heuristic: slope of log V against log 1/(1−r) on the tail.
    // A finite H^p norm gives a flat tail; the unbounded closure families give
    // slope ≥ min(1, p·α), so 0.5 separates the two regimes.
    const std::size_t tail = std::min<std::size_t>(6, radii.size());
    if (profile.sup_estimate <= 0.0 || tail < 2) {
        profile.bounded_flag = true;
        return profile;
    }
    std::vector<double> x, y;
    for (std::size_t i = radii.size() - tail; i < radii.size(); ++i) {
        x.push_back(std::log(1.0 / (1.0 - radii[i])));
        y.push_back(std::log(std::max(profile.circle_values[i], 1e-300)));
    }
    profile.bounded_flag = fit_line(x, y).first < 0.5;
    return profile;
}

double boundary_gap(const Func& f, double p, double r, int n_theta) {
    require_circle_args(r, p, n_theta, "boundary_gap");
    double acc = 0.0;
    for (int k = 0; k < n_theta; ++k) {
        const double theta = 2.0 * kPi * k / n_theta;
        const Bicomplex gap =
            evaluate(f, std::polar(1.0, theta)) - evaluate(f, std::polar(r, theta));
        acc += std::pow(norm(gap), p);
    }
    return acc * (2.0 * kPi / n_theta);
}

// ============== Nontangential approach ==============

void StolzPath::validate() const {
    if (!(aperture > 0.0) || !(aperture < kPi / 2.0))
        throw PathInvalid("stolz path: aperture must lie in (0, pi/2)");
    if (points.size() < 5)
        throw PathInvalid("stolz path: need at least 5 points for two Richardson levels");
    const Complex target = std::polar(1.0, theta0);
    double previous = 2.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const Complex z = points[k];
        if (!(std::abs(z) < 1.0))
            throw PathInvalid("stolz path: point " + std::to_string(k) +
                              " is not in the open disk");
        const Complex chord = target - z;
        const double dist = std::abs(chord);
        const double angle = std::abs(std::arg(std::conj(target) * chord));
        if (angle > aperture + 1e-12)
            throw PathInvalid("stolz path: point " + std::to_string(k) + " sits at angle " +
                              std::to_string(angle) + " outside the aperture cone " +
                              std::to_string(aperture));
        if (!(dist < previous))
            throw PathInvalid("stolz path: point " + std::to_string(k) +
                              " does not approach the boundary point");
        previous = dist;
    }
}

StolzPath make_stolz_path(double theta0, double aperture, int count,
                          double approach_angle, double s0) {
    if (!(aperture > 0.0) || !(aperture < kPi / 2.0))
        throw PathInvalid("make_stolz_path: aperture must lie in (0, pi/2)");
    if (count < 5) throw PathInvalid("make_stolz_path: count must be >= 5");
    if (std::abs(approach_angle) > aperture)
        throw PathInvalid("make_stolz_path: approach angle exceeds the aperture");
    if (!(s0 > 0.0) || !(s0 < 2.0 * std::cos(approach_angle)))
        throw PathInvalid("make_stolz_path: s0 must be in (0, 2cos(approach_angle)) "
                          "to keep the path inside the disk");
    StolzPath path;
    path.theta0 = theta0;
    path.aperture = aperture;
    const Complex target = std::polar(1.0, theta0);
    const Complex step_dir = std::polar(1.0, approach_angle);
    double s = s0;
    for (int k = 0; k < count; ++k, s *= 0.5)
        path.points.push_back(target * (1.0 - s * step_dir));
    return path;
}

StolzProbe stolz_probe(const Func& f, const StolzPath& path) {
    path.validate();
    std::vector<Bicomplex> values;
    for (Complex z : path.points) values.push_back(evaluate(f, z));

    // Dyadic Richardson weights (the affine combinations tend to the same
    // limit for any approach rate; the rate only shows up in oscillation).
    std::vector<Bicomplex> r1;
    for (std::size_t k = 0; k + 1 < values.size(); ++k)
        r1.push_back(values[k + 1] * 2.0 - values[k]);
    StolzProbe probe;
    for (std::size_t k = 0; k + 1 < r1.size(); ++k)
        probe.extrapolants.push_back((r1[k + 1] * 4.0 - r1[k]) * (1.0 / 3.0));
    probe.limit = probe.extrapolants.back();

    const std::size_t m = probe.extrapolants.size();
    double worst = 0.0;
    for (std::size_t i = m - 3; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            worst = std::max(worst, norm(probe.extrapolants[i] - probe.extrapolants[j]));
    probe.oscillation = worst;
    return probe;
}

// ============== Distributional boundary pairings ==============

double TrigPoly::eval(double theta) const {
    double value = a0;
    for (std::size_t m = 0; m < cos_coef.size(); ++m)
        value += cos_coef[m] * std::cos((m + 1) * theta);
    for (std::size_t m = 0; m < sin_coef.size(); ++m)
        value += sin_coef[m] * std::sin((m + 1) * theta);
    return value;
}

int TrigPoly::degree() const {
    return static_cast<int>(std::max(cos_coef.size(), sin_coef.size()));
}

TrigPoly TrigPoly::cosine(int m) {
    if (m < 1) throw SchemaError("TrigPoly::cosine: m must be >= 1");
    TrigPoly t;
    t.cos_coef.assign(m, 0.0);
    t.cos_coef[m - 1] = 1.0;
    return t;
}

TrigPoly TrigPoly::sine(int m) {
    if (m < 1) throw SchemaError("TrigPoly::sine: m must be >= 1");
    TrigPoly t;
    t.sin_coef.assign(m, 0.0);
    t.sin_coef[m - 1] = 1.0;
    return t;
}

Complex ComplexTrigPoly::eval(double theta) const {
    Complex value{};
    for (const auto& [mode, coeff] : modes) value += coeff * std::polar(1.0, mode * theta);
    return value;
}

Bicomplex pair_value(const Func& f, const TrigPoly& test, double r, int n_theta) {
    require_circle_args(r, 1.0, n_theta, "pair_value");
    // Compensated summation: integrands with boundary peaks contribute terms
    // orders of magnitude above the integral, and naive accumulation over the
    // finely resolved grids would leave rounding noise near the extrapolation
    // guard.
    Bicomplex acc{}, comp{};
    for (int k = 0; k < n_theta; ++k) {
        const double theta = 2.0 * kPi * k / n_theta;
        const Bicomplex term = evaluate(f, std::polar(r, theta)) * test.eval(theta);
        const Bicomplex y = term - comp;
        const Bicomplex t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc * (2.0 * kPi / n_theta);
}

namespace {
/// Integrands that concentrate on boundary peaks of width 1-r (e.g. powers of
/// 1/(1-z)) alias badly on a fixed angular grid: the trapezoid picks up modes
/// spaced n_theta apart, whose coefficients only decay like r^n_theta.  Forty
/// nodes per peak width keeps that aliasing term below the extrapolation
/// guard at every default radius.
int boundary_resolved_nodes(double r, int n_theta) {
    return std::max(n_theta, static_cast<int>(std::ceil(40.0 / (1.0 - r))));
}
} // namespace

Bicomplex dist_pair(const Func& f, const TrigPoly& test, std::vector<double> radii,
                    int n_theta) {
    if (radii.empty()) radii = default_radii();
    std::vector<Bicomplex> values;
    for (double r : radii)
        values.push_back(pair_value(f, test, r, boundary_resolved_nodes(r, n_theta)));
    return extrapolate_pairings(values, "dist_pair");
}

Bicomplex dist_pair_complex(const Func& f, const ComplexTrigPoly& test,
                            std::vector<double> radii, int n_theta) {
    if (radii.empty()) radii = default_radii();
    std::vector<Bicomplex> values;
    for (double r : radii) {
        const int n_eff = boundary_resolved_nodes(r, n_theta);
        Complex plus_acc{}, plus_comp{};
        Complex minus_acc{}, minus_comp{};
        for (int k = 0; k < n_eff; ++k) {
            const double theta = 2.0 * kPi * k / n_eff;
            const Bicomplex w = evaluate(f, std::polar(r, theta));
            const Complex t = test.eval(theta);
            const Complex py = std::conj(w.plus()) * t - plus_comp;
            const Complex pt = plus_acc + py;
            plus_comp = (pt - plus_acc) - py;
            plus_acc = pt;
            const Complex my = w.minus() * t - minus_comp;
            const Complex mt = minus_acc + my;
            minus_comp = (mt - minus_acc) - my;
            minus_acc = mt;
        }
        const double dtheta = 2.0 * kPi / n_eff;
        values.push_back(join(std::conj(plus_acc * dtheta), minus_acc * dtheta));
    }
    return extrapolate_pairings(values, "dist_pair_complex");
}

// ============== Growth fitting ==============

GrowthFit growth_fit(const Func& f, std::vector<double> radii) {
    if (radii.empty()) radii = default_radii();
    constexpr int kSupSamples = 4096;
    GrowthFit fit;
    fit.radii = radii;
    for (double r : radii) {
        double sup = 0.0;
        for (int k = 0; k < kSupSamples; ++k) {
            const double theta = 2.0 * kPi * k / kSupSamples;
            sup = std::max(sup, norm(evaluate(f, std::polar(r, theta))));
        }
        fit.sup_values.push_back(sup);
    }

    const std::size_t tail = std::min<std::size_t>(8, radii.size());
    if (tail < 2 || *std::max_element(fit.sup_values.begin(), fit.sup_values.end()) <= 0.0)
        return fit;
    std::vector<double> x, y;
    for (std::size_t i = radii.size() - tail; i < radii.size(); ++i) {
        x.push_back(std::log(1.0 / (1.0 - radii[i])));
        y.push_back(std::log(std::max(fit.sup_values[i], 1e-300)));
    }
    const auto [slope, intercept] = fit_line(x, y);
    fit.alpha = std::max(slope, 0.0);
    fit.C = std::exp(intercept);
    return fit;
}

} // namespace bivek
