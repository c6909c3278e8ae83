#include "bivek/vekua.hpp"

#include "bivek/calculus.hpp"
#include "bivek/errors.hpp"
#include "bivek/theodorescu.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace bivek {

namespace {

constexpr double kPi = std::numbers::pi;

int bidegree(const BiPoly& f) {
    int deg = 0;
    for (const ComplexPoly* part : {&f.plus, &f.minus})
        for (const auto& [e, c] : part->terms())
            deg = std::max({deg, e.first, e.second});
    return deg;
}

void require_probes(const std::vector<Complex>& probes, const char* who) {
    if (probes.empty())
        throw SchemaError(std::string(who) + ": probe set must not be empty");
    for (Complex z : probes)
        if (!(std::abs(z) < 1.0))
            throw std::domain_error(std::string(who) + ": probe |z|=" +
                                    std::to_string(std::abs(z)) + " is not in the open disk");
}

bool finite(const Bicomplex& w) {
    return std::isfinite(w.a) && std::isfinite(w.b) && std::isfinite(w.c) && std::isfinite(w.d);
}

} // namespace

void VekuaProblem::validate() const {
    const int need = std::max(bidegree(A), bidegree(B));
    if (degree_cap < need)
        throw DegreeOverflow("vekua problem: degree_cap " + std::to_string(degree_cap) +
                             " is below the coefficient bidegree " + std::to_string(need));
}

std::vector<Complex> default_probes() {
    std::vector<Complex> probes;
    probes.push_back(Complex{0.0, 0.0});
    for (double r : {0.3, 0.6, 0.9})
        for (int k = 0; k < 16; ++k)
            probes.push_back(std::polar(r, 2.0 * kPi * (k + 0.5) / 16.0));
    return probes;
}

double residual(const VekuaProblem& problem, const Func& w, const std::vector<Complex>& probes,
                FDStencil stencil) {
    require_probes(probes, "residual");
    // Pointwise evaluation: the equation's terms are combined as values, so
    // coefficient-times-solution products never build (or cap) a polynomial.
    const BiPoly* poly = std::get_if<BiPoly>(&w);
    BiPoly dbw;
    if (poly) dbw = dbar(*poly);
    const ClosureFn* closure = poly ? nullptr : &std::get<ClosureFn>(w);

    double worst = 0.0;
    for (Complex z : probes) {
        Bicomplex dval;
        Bicomplex wval;
        if (poly) {
            dval = dbw.eval(z);
            wval = poly->eval(z);
        } else {
            wval = closure->eval(z);
            dval = closure->dbar_analytic ? closure->dbar_analytic(z)
                                          : fd_apply_auto(w, WirtingerOp::dbar, z, stencil);
        }
        const Bicomplex r = dval - mul(problem.A.eval(z), wval) -
                            mul(problem.B.eval(z), conj(wval, problem.conj_kind));
        worst = std::max(worst, norm(r));
    }
    return worst;
}

ClosureFn solve_similarity(const BiPoly& A, const BiPoly& phi) {
    if (!holomorphy_check(phi))
        throw CoefficientConditionError(
            "solve_similarity: phi fails holomorphy_check; the similarity factor "
            "requires a B-holomorphic phi");
    return make_product_exp(phi, t_bicomplex_poly(A));
}

SolveReport solve_fixed_point(const VekuaProblem& problem, const BiPoly& phi,
                              int max_iter, double step_tol, double residual_tol,
                              std::vector<Complex> probes) {
    problem.validate();
    if (!holomorphy_check(phi))
        throw CoefficientConditionError(
            "solve_fixed_point: phi fails holomorphy_check; the free term must be "
            "B-holomorphic");
    if (max_iter < 1) throw SchemaError("solve_fixed_point: max_iter must be >= 1");
    if (bidegree(phi) > problem.degree_cap)
        throw DegreeOverflow("solve_fixed_point: phi bidegree " + std::to_string(bidegree(phi)) +
                             " exceeds degree_cap " + std::to_string(problem.degree_cap));
    if (probes.empty()) probes = default_probes();
    require_probes(probes, "solve_fixed_point");

    SolveReport report;
    report.probes = probes;
    BiPoly w = phi;
    const int mul_cap = 2 * problem.degree_cap + 2; // room for A·w before truncation
    for (int k = 0; k < max_iter; ++k) {
        BiPoly rhs = mul(problem.A, w, mul_cap) +
                     mul(problem.B, conj(w, problem.conj_kind), mul_cap);
        BiPoly next = phi + t_bicomplex_poly(rhs);
        report.truncated_mass += truncate(next, problem.degree_cap);
        if (!std::isfinite(next.max_coeff()))
            throw NonConvergence("solve_fixed_point: iterate " + std::to_string(k + 1) +
                                 " has non-finite coefficients");
        report.iterations = k + 1;
        const double step = coeff_distance(next, w);
        w = std::move(next);
        if (step < step_tol) break;
    }

    report.solution = w;
    report.residual_sup = residual(problem, Func{w}, probes);
    report.converged = report.residual_sup <= residual_tol;
    if (!report.converged)
        throw NonConvergence("solve_fixed_point: residual " +
                             std::to_string(report.residual_sup) + " after " +
                             std::to_string(report.iterations) +
                             " iterations exceeds tolerance " + std::to_string(residual_tol) +
                             "; coefficients too large for contraction at degree_cap " +
                             std::to_string(problem.degree_cap));
    return report;
}

DecoupledReport decouple(const VekuaProblem& problem, const BiPoly& w,
                         std::vector<Complex> probes) {
    if (problem.conj_kind != ConjKind::bar_ij)
        throw ConventionError(
            "decouple: only the componentwise conjugation bar_ij decouples the "
            "equation; bar_j mixes the idempotent components");
    if (probes.empty()) probes = default_probes();
    require_probes(probes, "decouple");

    DecoupledReport report;
    report.plus_a = problem.A.plus.conj_fn();
    report.plus_b = problem.B.plus.conj_fn();
    report.minus_a = problem.A.minus;
    report.minus_b = problem.B.minus;
    report.probes = probes;

    const ComplexPoly dz_plus = w.plus.dz();
    const ComplexPoly dzstar_minus = w.minus.dzstar();
    const BiPoly dbw = dbar(w);
    for (Complex z : probes) {
        const Complex wp = w.plus.eval(z);
        const Complex wm = w.minus.eval(z);
        // Plus slice in the unknown u = (w⁺)*.
        const Complex rp = std::conj(dz_plus.eval(z)) -
                           report.plus_a.eval(z) * std::conj(wp) -
                           report.plus_b.eval(z) * wp;
        const Complex rm = dzstar_minus.eval(z) -
                           report.minus_a.eval(z) * wm -
                           report.minus_b.eval(z) * std::conj(wm);
        const Bicomplex rb = dbw.eval(z) - mul(problem.A.eval(z), w.eval(z)) -
                             mul(problem.B.eval(z), conj(w.eval(z), ConjKind::bar_ij));
        report.plus_residual.push_back(std::abs(rp));
        report.minus_residual.push_back(std::abs(rm));
        report.bicomplex_residual.push_back(norm(rb));
    }
    return report;
}

} // namespace bivek
