#include "bivek/decomp.hpp"

#include "bivek/calculus.hpp"
#include "bivek/errors.hpp"
#include "bivek/vekua.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bivek {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// Sup of ‖g‖_B over the probe set.
double sup_norm(const BiPoly& g, const std::vector<Complex>& probes) {
    double worst = 0.0;
    for (Complex z : probes) worst = std::max(worst, norm(g.eval(z)));
    return worst;
}

/// One application of L = ∂̄ − A − B·conj(·).
BiPoly apply_op(const BiPoly& f, const BiPoly& A, const BiPoly& B) {
    return dbar(f) - mul(A, f) - mul(B, conj(f, ConjKind::bar_ij));
}

} // namespace

std::string mode_name(DecompMode mode) {
    switch (mode) {
        case DecompMode::poly: return "poly";
        case DecompMode::meta: return "meta";
        case DecompMode::hoiv: return "hoiv";
    }
    throw SchemaError("mode_name: unknown decomposition mode");
}

DecompMode mode_from_name(const std::string& name) {
    if (name == "poly") return DecompMode::poly;
    if (name == "meta") return DecompMode::meta;
    if (name == "hoiv") return DecompMode::hoiv;
    throw SchemaError("decomposition mode must be poly, meta or hoiv; got \"" + name + "\"");
}

BiPoly mode_basis(DecompMode mode) {
    if (mode == DecompMode::hoiv) return BiPoly::zhat() + BiPoly::zhat_star();
    return BiPoly::zhat_star();
}

std::vector<Complex> decomp_probes() {
    std::vector<Complex> probes;
    for (double r : {0.2, 0.5, 0.75, 0.9})
        for (int k = 0; k < 16; ++k)
            probes.push_back(std::polar(r, 2.0 * kPi * (k + 0.5) / 16.0));
    return probes;
}

BiPoly iterate_op(const BiPoly& f, const BiPoly& A, const BiPoly& B, int k) {
    if (k < 0) throw SchemaError("iterate_op: k must be >= 0");
    BiPoly out = f;
    for (int i = 0; i < k; ++i) out = apply_op(out, A, B);
    return out;
}

BiPoly construct(DecompMode mode, const std::vector<BiPoly>& phis,
                 const BiPoly& A, const BiPoly& B, double tol) {
    if (phis.empty()) throw SchemaError("construct: need at least one coefficient");

    const std::vector<Complex> probes = decomp_probes();
    std::string offenders;
    for (std::size_t k = 0; k < phis.size(); ++k) {
        bool ok = true;
        if (mode == DecompMode::poly) {
            ok = holomorphy_check(phis[k]);
        } else {
            VekuaProblem first_order;
            first_order.A = A;
            if (mode == DecompMode::hoiv) first_order.B = B;
            first_order.degree_cap = kDefaultDegreeCap;
            ok = residual(first_order, Func{phis[k]}, probes) <= tol;
        }
        if (!ok) offenders += (offenders.empty() ? "" : ", ") + std::to_string(k);
    }
    if (!offenders.empty())
        throw CoefficientConditionError(
            "construct(" + mode_name(mode) + "): coefficient condition fails at k = " +
            offenders +
            (mode == DecompMode::poly ? " (not B-holomorphic)"
                                      : " (first-order Vekua residual above tolerance)"));

    const BiPoly basis = mode_basis(mode);
    BiPoly f = phis[0];
    BiPoly power = BiPoly::constant(kOne);
    for (std::size_t k = 1; k < phis.size(); ++k) {
        power = mul(power, basis);
        f = f + mul(power, phis[k]);
    }
    return f;
}

DecompResult extract(DecompMode mode, const BiPoly& f, int n,
                     const BiPoly& A, const BiPoly& B, double tol) {
    if (n < 1) throw SchemaError("extract: order must be >= 1");

    const std::vector<Complex> probes = decomp_probes();
    const BiPoly hoiv_B = (mode == DecompMode::hoiv) ? B : BiPoly::zero();
    const BiPoly op_A = (mode == DecompMode::poly) ? BiPoly::zero() : A;

    // L^m f for m = 0 … n; the last power is the class-membership witness.
    std::vector<BiPoly> powers_of_op;
    powers_of_op.reserve(n + 1);
    powers_of_op.push_back(f);
    for (int m = 1; m <= n; ++m)
        powers_of_op.push_back(iterate_op(powers_of_op.back(), op_A, hoiv_B, 1));
    const double membership = sup_norm(powers_of_op[n], probes);
    if (membership > tol)
        throw NotInClassError("extract(" + mode_name(mode) + "): sup-norm of the " +
                              std::to_string(n) + "-fold iterated operator is " +
                              std::to_string(membership) + " > tolerance " +
                              std::to_string(tol) + "; f is not an order-" +
                              std::to_string(n) + " class member");

    const BiPoly basis = mode_basis(mode);
    std::vector<BiPoly> basis_powers; // basis^j for j = 0 … n−1
    basis_powers.reserve(n);
    basis_powers.push_back(BiPoly::constant(kOne));
    for (int j = 1; j < n; ++j) basis_powers.push_back(mul(basis_powers.back(), basis));

    DecompResult result;
    result.mode = mode;
    result.order = n;
    for (int k = 0; k < n; ++k) {
        BiPoly phi;
        for (int j = 0; j <= n - 1 - k; ++j) {
            const double weight = (j % 2 == 0 ? 1.0 : -1.0) / factorial(j);
            phi = phi + scale(Bicomplex{weight, 0.0, 0.0, 0.0},
                              mul(basis_powers[j], powers_of_op[k + j]));
        }
        result.coefficients.push_back(
            scale(Bicomplex{1.0 / factorial(k), 0.0, 0.0, 0.0}, phi));
    }

    BiPoly reconstruction = result.coefficients[0];
    for (int k = 1; k < n; ++k)
        reconstruction = reconstruction + mul(basis_powers[k], result.coefficients[k]);
    result.reconstruction_error = sup_norm(f - reconstruction, probes);
    return result;
}

} // namespace bivek
