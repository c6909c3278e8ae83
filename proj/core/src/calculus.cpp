#include "bivek/calculus.hpp"

#include "bivek/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bivek {

BiPoly dbar(const BiPoly& f) {
    return {f.plus.dz(), f.minus.dzstar()};
}

BiPoly d(const BiPoly& f) {
    return {f.plus.dzstar(), f.minus.dz()};
}

// ============== Finite differences ==============

namespace {

struct StencilTap {
    int offset;
    double weight; // weight of f(z + offset·h·direction), divided by h later
};

std::vector<StencilTap> stencil_taps(int order) {
    switch (order) {
    case 2:
        return {{-1, -0.5}, {1, 0.5}};
    case 4:
        return {{-2, 1.0 / 12.0}, {-1, -8.0 / 12.0}, {1, 8.0 / 12.0}, {2, -1.0 / 12.0}};
    case 6:
        return {{-3, -1.0 / 60.0}, {-2, 9.0 / 60.0},  {-1, -45.0 / 60.0},
                {1, 45.0 / 60.0},  {2, -9.0 / 60.0}, {3, 1.0 / 60.0}};
    default:
        throw SchemaError("fd stencil order must be 2, 4, or 6, got " + std::to_string(order));
    }
}

bool stencil_fits(Complex z0, int order, double h) {
    const double reach = (order / 2) * h;
    return std::abs(z0) + reach < 1.0;
}

/// Directional centered difference Σ c_k f(z0 + k·h·dir) / h.
Bicomplex directional_diff(const Func& f, Complex z0, Complex dir, int order, double h) {
    Bicomplex acc;
    for (const auto& tap : stencil_taps(order))
        acc += tap.weight * evaluate(f, z0 + double(tap.offset) * h * dir);
    return (1.0 / h) * acc;
}

Bicomplex fd_combine(const Func& f, WirtingerOp which, Complex z0, int order, double h) {
    const Bicomplex dx = directional_diff(f, z0, Complex{1.0, 0.0}, order, h);
    const Bicomplex dy = directional_diff(f, z0, Complex{0.0, 1.0}, order, h);
    const Bicomplex jdy = mul(kJ, dy);
    return which == WirtingerOp::dbar ? 0.5 * (dx + jdy) : 0.5 * (dx - jdy);
}

} // namespace

Bicomplex fd_apply(const Func& f, WirtingerOp which, Complex z0, FDStencil stencil) {
    if (!(stencil.h > 0.0))
        throw SchemaError("fd stencil step must be positive");
    if (!stencil_fits(z0, stencil.order, stencil.h))
        throw StencilOutOfDomain("fd_apply: order-" + std::to_string(stencil.order) +
                                 " stencil with h=" + std::to_string(stencil.h) +
                                 " does not fit inside the disk around |z0|=" +
                                 std::to_string(std::abs(z0)));
    return fd_combine(f, which, z0, stencil.order, stencil.h);
}

Bicomplex fd_apply_auto(const Func& f, WirtingerOp which, Complex z0, FDStencil stencil) {
    if (!(stencil.h > 0.0))
        throw SchemaError("fd stencil step must be positive");
    if (stencil_fits(z0, stencil.order, stencil.h))
        return fd_combine(f, which, z0, stencil.order, stencil.h);

    const double margin = 1.0 - std::abs(z0);
    if (margin <= 1e-9)
        throw StencilOutOfDomain("fd_apply_auto: no usable margin at |z0|=" +
                                 std::to_string(std::abs(z0)));
    // Shrink to fit, then cancel the leading error term across h and h/2.
    const double h = margin / double(stencil.order / 2 + 1);
    const Bicomplex coarse = fd_combine(f, which, z0, stencil.order, h);
    const Bicomplex fine = fd_combine(f, which, z0, stencil.order, 0.5 * h);
    const double scale = std::pow(2.0, stencil.order);
    return (1.0 / (scale - 1.0)) * (scale * fine - coarse);
}

} // namespace bivek
