#ifndef BIVEK_BICOMPLEX_HPP
#define BIVEK_BICOMPLEX_HPP

#include "bivek/errors.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

namespace bivek {

using Complex = std::complex<double>;

/// The three bicomplex conjugations: bar_j negates the j-plane, bar_i
/// conjugates the i-units, bar_ij composes both (componentwise complex
/// conjugation in the idempotent picture).
enum class ConjKind { bar_j, bar_i, bar_ij };

/**
 * @brief A bicomplex number a + i·b + j·c + ij·d with i² = j² = −1, ij = ji.
 *
 * The algebra is commutative and contains nonzero zero divisors.  Writing
 * z1 = a + i·b (scalar part) and z2 = c + i·d (vector part), every element
 * decomposes uniquely over the idempotents p± = ½(1 ± ij) as
 *
 *     w = p⁺·w⁺ + p⁻·w⁻,   w± = z1 ∓ i·z2,
 *
 * and multiplication, inversion, exponentiation and the bar_ij conjugation
 * all act componentwise on (w⁺, w⁻).  Canonical storage is the four-real
 * form; the idempotent pair is always computed on demand so that the two
 * norm formulas stay independently testable.
 */
struct Bicomplex {
    double a{0.0}; ///< real unit coefficient
    double b{0.0}; ///< i coefficient
    double c{0.0}; ///< j coefficient
    double d{0.0}; ///< ij coefficient

    constexpr Bicomplex() = default;
    constexpr Bicomplex(double a_, double b_ = 0.0, double c_ = 0.0, double d_ = 0.0)
        : a(a_), b(b_), c(c_), d(d_) {}

    /// Build from the two complex planes: w = z1 + j·z2.
    static Bicomplex from_planes(Complex z1, Complex z2 = Complex{}) {
        return {z1.real(), z1.imag(), z2.real(), z2.imag()};
    }

    /// Scalar (i-plane) part Sc w = a + i·b.
    Complex sc() const { return {a, b}; }
    /// Vector part Vec w = c + i·d, so that w = Sc w + j·Vec w.
    Complex vec() const { return {c, d}; }

    /// Idempotent component w⁺ = (a+d) + i(b−c).
    Complex plus() const { return {a + d, b - c}; }
    /// Idempotent component w⁻ = (a−d) + i(b+c).
    Complex minus() const { return {a - d, b + c}; }

    bool is_zero() const { return a == 0.0 && b == 0.0 && c == 0.0 && d == 0.0; }

    /// Nonzero element with exactly one vanishing idempotent component
    /// (exact comparison by design; fuzzy callers must threshold norms themselves).
    bool is_zero_divisor() const {
        const bool zp = plus() == Complex{};
        const bool zm = minus() == Complex{};
        return !is_zero() && (zp != zm);
    }

    Bicomplex operator-() const { return {-a, -b, -c, -d}; }

    Bicomplex& operator+=(const Bicomplex& o) {
        a += o.a; b += o.b; c += o.c; d += o.d;
        return *this;
    }
    Bicomplex& operator-=(const Bicomplex& o) {
        a -= o.a; b -= o.b; c -= o.c; d -= o.d;
        return *this;
    }
    Bicomplex& operator*=(double s) {
        a *= s; b *= s; c *= s; d *= s;
        return *this;
    }

    friend Bicomplex operator+(Bicomplex l, const Bicomplex& r) { return l += r; }
    friend Bicomplex operator-(Bicomplex l, const Bicomplex& r) { return l -= r; }
    friend Bicomplex operator*(Bicomplex l, double s) { return l *= s; }
    friend Bicomplex operator*(double s, Bicomplex r) { return r *= s; }

    friend bool operator==(const Bicomplex& l, const Bicomplex& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
    }
};

/// Units and idempotents.
inline constexpr Bicomplex kOne{1.0};
inline constexpr Bicomplex kI{0.0, 1.0};
inline constexpr Bicomplex kJ{0.0, 0.0, 1.0};
inline constexpr Bicomplex kIJ{0.0, 0.0, 0.0, 1.0};
inline constexpr Bicomplex kPPlus{0.5, 0.0, 0.0, 0.5};   ///< p⁺ = ½(1+ij)
inline constexpr Bicomplex kPMinus{0.5, 0.0, 0.0, -0.5}; ///< p⁻ = ½(1−ij)

/// Rebuild w from its idempotent pair: z1 = (w⁺+w⁻)/2, z2 = i(w⁺−w⁻)/2.
inline Bicomplex join(Complex wp, Complex wm) {
    const Complex z1 = 0.5 * (wp + wm);
    const Complex z2 = Complex(0.0, 0.5) * (wp - wm);
    return Bicomplex::from_planes(z1, z2);
}

/// The idempotent pair (w⁺, w⁻); join(split(w)) = w exactly.
inline std::pair<Complex, Complex> split(const Bicomplex& w) {
    return {w.plus(), w.minus()};
}

/// Componentwise product: (wv)± = w±·v±.  Expanded in the four-real basis so
/// the componentwise law is a testable consequence, not the implementation.
/// Each component is grouped into pairs that map onto each other when the
/// operands are swapped; IEEE addition commutes, so w*v == v*w bit-for-bit.
inline Bicomplex mul(const Bicomplex& w, const Bicomplex& v) {
    return {
        (w.a * v.a + w.d * v.d) - (w.b * v.b + w.c * v.c),
        (w.a * v.b + w.b * v.a) - (w.c * v.d + w.d * v.c),
        (w.a * v.c + w.c * v.a) - (w.b * v.d + w.d * v.b),
        (w.a * v.d + w.d * v.a) + (w.b * v.c + w.c * v.b),
    };
}

inline Bicomplex operator*(const Bicomplex& w, const Bicomplex& v) { return mul(w, v); }

/// One of the three conjugations; they are involutions and bar_ij = bar_i ∘ bar_j.
inline Bicomplex conj(const Bicomplex& w, ConjKind kind) {
    switch (kind) {
    case ConjKind::bar_j:  return {w.a, w.b, -w.c, -w.d};
    case ConjKind::bar_i:  return {w.a, -w.b, w.c, -w.d};
    case ConjKind::bar_ij: return {w.a, -w.b, -w.c, w.d};
    }
    throw ConventionError("conj: unknown conjugation kind");
}

/// Bicomplex norm from the idempotent components: sqrt((|w⁺|²+|w⁻|²)/2).
inline double norm(const Bicomplex& w) {
    const Complex wp = w.plus(), wm = w.minus();
    return std::sqrt(0.5 * (std::norm(wp) + std::norm(wm)));
}

/// The same norm from the four-real form, sqrt(a²+b²+c²+d²): an independent
/// formula kept separate so agreement with norm() is a checkable invariant.
inline double norm_cartesian(const Bicomplex& w) {
    return std::sqrt(w.a * w.a + w.b * w.b + w.c * w.c + w.d * w.d);
}

/// Reciprocal-component inverse; defined exactly off the zero-divisor cone.
inline Bicomplex inverse(const Bicomplex& w) {
    const Complex wp = w.plus(), wm = w.minus();
    const bool zp = (wp == Complex{}), zm = (wm == Complex{});
    if (zp && zm) throw ZeroError("inverse: zero has no inverse");
    if (zp || zm)
        throw ZeroDivisorError("inverse: zero divisor (vanishing " +
                               std::string(zp ? "plus" : "minus") + " component)");
    return join(1.0 / wp, 1.0 / wm);
}

/// Componentwise exponential; never zero and never a zero divisor.
inline Bicomplex bexp(const Bicomplex& w) {
    return join(std::exp(w.plus()), std::exp(w.minus()));
}

/// Scale by a complex scalar acting through the embedding C ⊂ B.
inline Bicomplex cscale(Complex s, const Bicomplex& w) {
    return mul(Bicomplex::from_planes(s), w);
}

} // namespace bivek

#endif // BIVEK_BICOMPLEX_HPP
