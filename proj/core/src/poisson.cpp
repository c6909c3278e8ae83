#include "bivek/poisson.hpp"

#include "bivek/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bivek {

namespace {
constexpr double kPi = std::numbers::pi;
}

BoundaryTrace sample_boundary(const Func& f, int n_theta) {
    if (n_theta < 4) throw SchemaError("sample_boundary: n_theta must be >= 4");
    BoundaryTrace trace;
    trace.plus.resize(n_theta);
    trace.minus.resize(n_theta);
    for (int k = 0; k < n_theta; ++k) {
        const double theta = 2.0 * kPi * k / n_theta;
        const Bicomplex value = evaluate(f, std::polar(1.0, theta));
        trace.plus[k] = value.plus();
        trace.minus[k] = value.minus();
    }
    return trace;
}

BoundaryTrace trace_from_fourier(const std::vector<std::pair<int, Complex>>& plus_fourier,
                                 const std::vector<std::pair<int, Complex>>& minus_fourier,
                                 int n_theta) {
    if (n_theta < 4) throw SchemaError("trace_from_fourier: n_theta must be >= 4");
    BoundaryTrace trace;
    trace.plus.assign(n_theta, Complex{});
    trace.minus.assign(n_theta, Complex{});
    for (int k = 0; k < n_theta; ++k) {
        const double theta = 2.0 * kPi * k / n_theta;
        for (const auto& [mode, coeff] : plus_fourier)
            trace.plus[k] += coeff * std::polar(1.0, mode * theta);
        for (const auto& [mode, coeff] : minus_fourier)
            trace.minus[k] += coeff * std::polar(1.0, mode * theta);
    }
    return trace;
}

double poisson_kernel(double r, double theta) {
    if (!(r >= 0.0) || !(r < 1.0))
        throw std::domain_error("poisson_kernel: radius " + std::to_string(r) +
                                " is not in [0, 1)");
    return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

Bicomplex poisson_extend(const BoundaryTrace& trace, double r, double theta) {
    const std::size_t n = trace.size();
    if (n < 4 || trace.minus.size() != n)
        throw SchemaError("poisson_extend: trace must hold >= 4 matching samples per component");
    const double dphi = 2.0 * kPi / static_cast<double>(n);
    Complex plus_acc{};
    Complex minus_acc{};
    for (std::size_t k = 0; k < n; ++k) {
        const double phi = dphi * static_cast<double>(k);
        const double kernel = poisson_kernel(r, theta - phi);
        plus_acc += std::conj(trace.plus[k]) * kernel;
        minus_acc += trace.minus[k] * kernel;
    }
    const double scale = dphi / (2.0 * kPi);
    return join(std::conj(plus_acc * scale), minus_acc * scale);
}

} // namespace bivek
