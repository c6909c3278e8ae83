#include "bivek/theodorescu.hpp"

#include "bivek/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace bivek {

namespace {

constexpr double kPi = std::numbers::pi;

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss–Legendre nodes/weights by Newton iteration on P_n; cached per n.
const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Recurrence for P_n(x) and P'_n(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x; // ascending order
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

void require_interior(Complex z0, const char* who) {
    if (!(std::abs(z0) < 1.0))
        throw std::domain_error(std::string(who) + ": evaluation point |z0|=" +
                                std::to_string(std::abs(z0)) + " is not in the open disk");
}

} // namespace

void QuadratureGrid::validate() const {
    if (n_r < 8) throw SchemaError("quadrature grid: n_r must be >= 8");
    if (n_theta < 16 || n_theta % 2 != 0)
        throw SchemaError("quadrature grid: n_theta must be even and >= 16");
}

// ============== Closed forms ==============

ComplexPoly t_monomial(int m, int n) {
    if (m < 0 || n < 0) throw SchemaError("t_monomial: negative exponents");
    ComplexPoly out = ComplexPoly::term(m, n + 1, Complex{1.0 / (n + 1), 0.0});
    if (m > n) out.add_term(m - n - 1, 0, Complex{-1.0 / (n + 1), 0.0});
    return out;
}

ComplexPoly t_star_monomial(int m, int n) {
    if (m < 0 || n < 0) throw SchemaError("t_star_monomial: negative exponents");
    ComplexPoly out = ComplexPoly::term(m + 1, n, Complex{1.0 / (m + 1), 0.0});
    if (n > m) out.add_term(0, n - m - 1, Complex{-1.0 / (m + 1), 0.0});
    return out;
}

ComplexPoly t_poly(const ComplexPoly& g) {
    ComplexPoly out;
    for (const auto& [e, c] : g.terms())
        out = out + c * t_monomial(e.first, e.second);
    return out;
}

ComplexPoly t_star_poly(const ComplexPoly& g) {
    ComplexPoly out;
    for (const auto& [e, c] : g.terms())
        out = out + c * t_star_monomial(e.first, e.second);
    return out;
}

Complex t_complex(const ComplexPoly& g, Complex z0) {
    require_interior(z0, "t_complex");
    return t_poly(g).eval(z0);
}

// ============== Quadrature ==============

Complex t_complex_quad(const ComplexPoly& g, Complex z0, const QuadratureGrid& grid) {
    grid.validate();
    require_interior(z0, "t_complex_quad");

    // Polar coordinates centered at z0: ζ = z0 + s·e^{iα}.  The area element
    // s·ds·dα cancels the kernel modulus, leaving −(1/π)·g(ζ)·e^{−iα}, which
    // is smooth; the radial extent S(α) solves |z0 + S·e^{iα}| = 1.
    const GaussRule& rule = gauss_legendre(grid.n_r);
    const double dalpha = 2.0 * kPi / grid.n_theta;
    const double r2 = std::norm(z0);

    Complex acc{};
    for (int j = 0; j < grid.n_theta; ++j) {
        const double alpha = (j + grid.angular_offset) * dalpha;
        const Complex dir = std::polar(1.0, alpha);
        const double cpar = (std::conj(z0) * dir).real();
        const double S = -cpar + std::sqrt(cpar * cpar + 1.0 - r2);
        Complex inner{};
        for (int i = 0; i < grid.n_r; ++i) {
            const double s = 0.5 * S * (rule.nodes[i] + 1.0);
            inner += (0.5 * S * rule.weights[i]) * g.eval(z0 + s * dir);
        }
        acc += inner * std::conj(dir);
    }
    return acc * (-dalpha / kPi);
}

Complex t_star_quad(const ComplexPoly& g, Complex z0, const QuadratureGrid& grid) {
    return std::conj(t_complex_quad(g.conj_fn(), z0, grid));
}

Complex t_complex_quad_adaptive(const ComplexPoly& g, Complex z0, double tol,
                                QuadratureGrid start, int max_doublings) {
    Complex previous = t_complex_quad(g, z0, start);
    QuadratureGrid grid = start;
    double delta = 0.0;
    for (int k = 0; k < max_doublings; ++k) {
        grid.n_r *= 2;
        grid.n_theta *= 2;
        const Complex refined = t_complex_quad(g, z0, grid);
        delta = std::abs(refined - previous);
        if (delta < tol) return refined;
        previous = refined;
    }
    throw QuadratureDivergence("t_complex_quad_adaptive: estimates still differ by " +
                               std::to_string(delta) + " after " +
                               std::to_string(max_doublings) + " refinements (tol " +
                               std::to_string(tol) + ")");
}

// ============== Bicomplex transform ==============

BiPoly t_bicomplex_poly(const BiPoly& f, TbKind kind) {
    if (kind == TbKind::component_matched)
        return {t_star_poly(f.plus), t_poly(f.minus)};
    return {t_poly(f.plus) + t_star_poly(f.plus), t_poly(f.minus) + t_star_poly(f.minus)};
}

Bicomplex t_bicomplex(const BiPoly& f, Complex z0, TbKind kind) {
    const BiPoly transformed = t_bicomplex_poly(f, kind);
    return transformed.eval(z0);
}

Bicomplex t_bicomplex_quad(const BiPoly& f, Complex z0, const QuadratureGrid& grid, TbKind kind) {
    if (kind == TbKind::component_matched)
        return join(t_star_quad(f.plus, z0, grid), t_complex_quad(f.minus, z0, grid));
    return join(t_complex_quad(f.plus, z0, grid) + t_star_quad(f.plus, z0, grid),
                t_complex_quad(f.minus, z0, grid) + t_star_quad(f.minus, z0, grid));
}

} // namespace bivek
