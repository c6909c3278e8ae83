#ifndef BIVEK_BIPOLY_HPP
#define BIVEK_BIPOLY_HPP

#include "bivek/bicomplex.hpp"
#include "bivek/errors.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bivek {

/// Per-variable degree cap for polynomial arithmetic.  Exceeding it is an
/// error (DegreeOverflow), never a silent truncation; only the fixed-point
/// Vekua solver truncates, and it does so explicitly via truncate().
inline constexpr int kDefaultDegreeCap = 64;

/// Exponent pair (m, n) = (degree in z, degree in z*).
using Exponents = std::pair<int, int>;

/**
 * @brief Sparse complex bivariate polynomial in (z, z*).
 *
 * Terms are kept in an ordered map from (m, n) to a complex coefficient;
 * normalization drops exact-zero coefficients so that equality of coefficient
 * tables is meaningful and iteration order is deterministic.
 */
class ComplexPoly {
public:
    using Terms = std::map<Exponents, Complex>;

    ComplexPoly() = default;

    /// Single term c·z^m·(z*)^n.
    static ComplexPoly term(int m, int n, Complex c);
    static ComplexPoly constant(Complex c) { return term(0, 0, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c to the (m, n) coefficient, dropping the term if it cancels to zero.
    void add_term(int m, int n, Complex c);

    Complex coeff(int m, int n) const;
    int degree_z() const;      ///< max m over stored terms (-1 if zero poly)
    int degree_zstar() const;  ///< max n over stored terms (-1 if zero poly)

    Complex eval(Complex z) const;

    ComplexPoly operator-() const;
    friend ComplexPoly operator+(const ComplexPoly& f, const ComplexPoly& g);
    friend ComplexPoly operator-(const ComplexPoly& f, const ComplexPoly& g);
    friend ComplexPoly operator*(Complex s, const ComplexPoly& f);

    /// Product with per-variable degree-cap enforcement.
    static ComplexPoly mul(const ComplexPoly& f, const ComplexPoly& g,
                           int degree_cap = kDefaultDegreeCap);
    friend ComplexPoly operator*(const ComplexPoly& f, const ComplexPoly& g) {
        return mul(f, g);
    }

    /// ∂/∂z and ∂/∂z* as formal operations on the coefficient table.
    ComplexPoly dz() const;
    ComplexPoly dzstar() const;

    /// Pointwise complex conjugate as a function of z: conjugate coefficients
    /// and swap the exponents of z and z*.
    ComplexPoly conj_fn() const;

    /// Largest coefficient modulus (0 for the zero polynomial).
    double max_coeff() const;

    friend bool operator==(const ComplexPoly& f, const ComplexPoly& g) {
        return f.terms_ == g.terms_;
    }

private:
    Terms terms_;
};

/// Largest coefficient modulus of f − g; the tests' coefficientwise metric.
double coeff_distance(const ComplexPoly& f, const ComplexPoly& g);

/**
 * @brief A function D → B stored per idempotent component.
 *
 * The value at z is join(plus(z, z*), minus(z, z*)).  Storing the two
 * components separately makes multiplication, the bar_ij conjugation and both
 * differential operators act componentwise, i.e. every bicomplex identity
 * becomes a pair of independent complex-polynomial identities.
 *
 * Basis dictionary (ẑ denotes the bicomplexification x + jy of z = x + iy):
 *   ẑ    has parts (z*, z);    ẑ*   has parts (z, z*);
 *   a complex-valued function embeds with plus = minus.
 */
struct BiPoly {
    ComplexPoly plus;  ///< plus-component polynomial f⁺(z, z*)
    ComplexPoly minus; ///< minus-component polynomial f⁻(z, z*)

    BiPoly() = default;
    BiPoly(ComplexPoly p, ComplexPoly m) : plus(std::move(p)), minus(std::move(m)) {}

    static BiPoly zero() { return {}; }
    static BiPoly constant(const Bicomplex& c);
    /// c·ẑ^mz·(ẑ*)^mzs — the basis the function-spec JSON terms use.
    static BiPoly zhat_monomial(int mz, int mzs, const Bicomplex& c);
    /// Embed a complex-valued function of z (plus = minus = p).
    static BiPoly embed(const ComplexPoly& p) { return {p, p}; }
    static BiPoly zhat() { return zhat_monomial(1, 0, kOne); }
    static BiPoly zhat_star() { return zhat_monomial(0, 1, kOne); }

    bool is_zero() const { return plus.is_zero() && minus.is_zero(); }
    Bicomplex eval(Complex z) const { return join(plus.eval(z), minus.eval(z)); }

    /// Largest coefficient modulus over both parts.
    double max_coeff() const;

    friend bool operator==(const BiPoly& f, const BiPoly& g) {
        return f.plus == g.plus && f.minus == g.minus;
    }
};

BiPoly operator+(const BiPoly& f, const BiPoly& g);
BiPoly operator-(const BiPoly& f, const BiPoly& g);
BiPoly operator-(const BiPoly& f);

/// Componentwise product ((fg)± = f±·g±), degree-capped.
BiPoly mul(const BiPoly& f, const BiPoly& g, int degree_cap = kDefaultDegreeCap);
inline BiPoly operator*(const BiPoly& f, const BiPoly& g) { return mul(f, g); }

/// Scale by a bicomplex constant λ (componentwise λ±·f±).
BiPoly scale(const Bicomplex& lambda, const BiPoly& f);

/// Pointwise conjugation of the function values, closed on BiPoly for all
/// three kinds: bar_ij conjugates each part in place, bar_j swaps the parts,
/// bar_i does both.
BiPoly conj(const BiPoly& f, ConjKind kind);

/// True iff ∂̄f = 0: the plus part has no z-dependence and the minus part has
/// no z*-dependence.
bool holomorphy_check(const BiPoly& f);

/// Drop all terms with m > cap or n > cap in either part; returns the dropped
/// coefficient mass (sum of |coefficient| over dropped terms).  The explicit
/// truncation used by the fixed-point solver.
double truncate(BiPoly& f, int cap);

/// Largest coefficient modulus of f − g over both parts.
double coeff_distance(const BiPoly& f, const BiPoly& g);

} // namespace bivek

#endif // BIVEK_BIPOLY_HPP
