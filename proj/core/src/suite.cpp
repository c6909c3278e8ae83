#include "bivek/suite.hpp"

#include "bivek/calculus.hpp"
#include "bivek/decomp.hpp"
#include "bivek/errors.hpp"
#include "bivek/funcspec.hpp"
#include "bivek/hardy.hpp"
#include "bivek/poisson.hpp"
#include "bivek/rng.hpp"
#include "bivek/vekua.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

namespace bivek {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

// ============== Bookkeeping ==============

/// Collects one invariant's cases; a case fails when its metric exceeds the
/// bound (NaN metrics fail and propagate into worst).
struct Check {
    InvariantResult inv;

    Check(std::string id, std::string detail, double bound) {
        inv.id = std::move(id);
        inv.detail = std::move(detail);
        inv.bound = bound;
    }

    void record(double metric) {
        ++inv.cases;
        if (!(metric <= inv.worst)) inv.worst = metric;
        if (!(metric <= inv.bound)) ++inv.failed;
    }

    /// Boolean expectation: metric 0 on success, 1 on failure.
    void expect(bool ok) { record(ok ? 0.0 : 1.0); }
};

struct Suite {
    SuiteReport report;
    const SuiteOptions& opts;

    explicit Suite(std::string name, const SuiteOptions& o) : opts(o) {
        report.suite = std::move(name);
        report.seed = o.seed;
    }

    /// Pinned tolerance, overridable by --tol (exact bounds never are).
    double tol(double dflt) const { return opts.tol > 0.0 ? opts.tol : dflt; }

    void add(const Check& c) {
        report.invariants.push_back(c.inv);
        report.cases_run += c.inv.cases;
        report.failed += c.inv.failed;
        report.passed += c.inv.cases - c.inv.failed;
    }

    std::mt19937_64 stream(std::string_view label, std::uint64_t index) const {
        return rng::make_stream(opts.seed, label, index);
    }
};

double rel(double err, double scale) { return err / (1.0 + scale); }

double crel(Complex got, Complex want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

double brel(const Bicomplex& got, const Bicomplex& want) {
    return norm(got - want) / (1.0 + norm(want));
}

double poly_rel(const BiPoly& got, const BiPoly& want) {
    return coeff_distance(got, want) / (1.0 + want.max_coeff());
}

double sup_at(const BiPoly& g, const std::vector<Complex>& probes) {
    double worst = 0.0;
    for (Complex z : probes) worst = std::max(worst, norm(g.eval(z)));
    return worst;
}

template <typename Fn>
bool throws(Fn&& fn) {
    try {
        fn();
    } catch (const std::exception&) {
        return true;
    }
    return false;
}

// ============== algebra ==============

SuiteReport run_algebra(const SuiteOptions& opts) {
    Suite s("algebra", opts);

    Check recon("algebra.idempotent-reconstruction",
                "join(split(w)) = w and the product acts componentwise, (w*v)pm = wpm*vpm, "
                "relative to the operand norms",
                s.tol(1e-12));
    Check normagree("algebra.norm-formula-agreement",
                    "component-norm sqrt((|w+|^2+|w-|^2)/2) matches the four-real norm "
                    "sqrt(a^2+b^2+c^2+d^2)",
                    s.tol(1e-12));
    Check sandwich("algebra.norm-sandwich",
                   "(1/sqrt2)*max|wpm| <= ||w|| <= (1/sqrt2)(|w+|+|w-|); violations measured "
                   "relative with floating-point slack only",
                   1e-14);
    Check submul("algebra.submultiplicative",
                 "||w*v|| <= sqrt2*||w||*||v||; violations measured relative with "
                 "floating-point slack only",
                 1e-14);
    for (int i = 0; i < 100000; ++i) {
        auto gen = s.stream("algebra.pairs", i);
        const Bicomplex w = rng::bicomplex_in(gen, 2.0);
        const Bicomplex v = rng::bicomplex_in(gen, 2.0);
        const auto [wp, wm] = split(w);
        const auto [vp, vm] = split(v);
        const Bicomplex prod = mul(w, v);

        double err = norm(join(wp, wm) - w);
        err = std::max(err, std::abs(prod.plus() - wp * vp));
        err = std::max(err, std::abs(prod.minus() - wm * vm));
        recon.record(rel(err, norm(w) * (1.0 + norm(v))));

        normagree.record(rel(std::abs(norm(w) - norm_cartesian(w)), norm(w)));

        const double nw = norm(w);
        const double lower = std::max(std::abs(wp), std::abs(wm)) / kSqrt2;
        const double upper = (std::abs(wp) + std::abs(wm)) / kSqrt2;
        sandwich.record(rel(std::max(lower - nw, nw - upper), nw));

        submul.record(rel(norm(prod) - kSqrt2 * norm(w) * norm(v), norm(prod)));
    }
    s.add(recon);
    s.add(normagree);
    s.add(sandwich);
    s.add(submul);

    Check equality("algebra.submultiplicative-equality",
                   "the sqrt2 product bound is attained at w = v = p+ (both sides 1/sqrt2)",
                   1e-15);
    equality.record(std::abs(norm(mul(kPPlus, kPPlus)) - kSqrt2 * norm(kPPlus) * norm(kPPlus)));
    s.add(equality);

    Check commut("algebra.mul-commutativity", "w*v and v*w are bit-identical", 0.0);
    Check assoc("algebra.mul-laws",
                "associativity (w*v)*u = w*(v*u) and distributivity w*(v+u) = w*v + w*u, "
                "relative",
                s.tol(1e-12));
    for (int i = 0; i < 20000; ++i) {
        auto gen = s.stream("algebra.triples", i);
        const Bicomplex w = rng::bicomplex_in(gen, 2.0);
        const Bicomplex v = rng::bicomplex_in(gen, 2.0);
        const Bicomplex u = rng::bicomplex_in(gen, 2.0);
        commut.expect(mul(w, v) == mul(v, w));
        const double scale = (1.0 + norm(w)) * (1.0 + norm(v)) * (1.0 + norm(u));
        double err = norm(mul(mul(w, v), u) - mul(w, mul(v, u)));
        err = std::max(err, norm(mul(w, v + u) - (mul(w, v) + mul(w, u))));
        assoc.record(err / scale);
    }
    s.add(commut);
    s.add(assoc);

    Check conjlaw("algebra.conjugation-laws",
                  "all three conjugations are involutions, bar_ij = bar_i o bar_j, and the "
                  "component laws hold: (bar_j w)pm = wmp, (bar_i w)pm = (wmp)*, "
                  "(bar_ij w)pm = (wpm)* (exact sign arithmetic)",
                  0.0);
    for (int i = 0; i < 100000; ++i) {
        auto gen = s.stream("algebra.conj", i);
        const Bicomplex w = rng::bicomplex_in(gen, 2.0);
        bool ok = true;
        for (ConjKind k : {ConjKind::bar_j, ConjKind::bar_i, ConjKind::bar_ij})
            ok = ok && conj(conj(w, k), k) == w;
        ok = ok && conj(w, ConjKind::bar_ij) == conj(conj(w, ConjKind::bar_j), ConjKind::bar_i);
        ok = ok && conj(w, ConjKind::bar_j).plus() == w.minus();
        ok = ok && conj(w, ConjKind::bar_j).minus() == w.plus();
        ok = ok && conj(w, ConjKind::bar_i).plus() == std::conj(w.minus());
        ok = ok && conj(w, ConjKind::bar_i).minus() == std::conj(w.plus());
        ok = ok && conj(w, ConjKind::bar_ij).plus() == std::conj(w.plus());
        ok = ok && conj(w, ConjKind::bar_ij).minus() == std::conj(w.minus());
        conjlaw.expect(ok);
    }
    s.add(conjlaw);

    Check linear("algebra.split-join-linearity",
                 "split and join are mutually inverse linear maps (additivity up to "
                 "floating-point reassociation)",
                 1e-14);
    for (int i = 0; i < 20000; ++i) {
        auto gen = s.stream("algebra.linear", i);
        const Bicomplex w = rng::bicomplex_in(gen, 2.0);
        const Bicomplex v = rng::bicomplex_in(gen, 2.0);
        double err = std::abs((w + v).plus() - (w.plus() + v.plus()));
        err = std::max(err, std::abs((w + v).minus() - (w.minus() + v.minus())));
        err = std::max(err, norm(join(w.plus() + v.plus(), w.minus() + v.minus()) - (w + v)));
        linear.record(rel(err, norm(w) + norm(v)));
    }
    s.add(linear);

    Check inv("algebra.inverse",
              "w*inverse(w) = 1 away from the zero-divisor cone; zero and zero divisors "
              "raise ZeroError/ZeroDivisorError",
              s.tol(1e-12));
    for (int i = 0; i < 10000; ++i) {
        auto gen = s.stream("algebra.inverse", i);
        Bicomplex w = rng::bicomplex_in(gen, 2.0);
        while (std::min(std::abs(w.plus()), std::abs(w.minus())) < 0.05)
            w = rng::bicomplex_in(gen, 2.0);
        inv.record(brel(mul(w, inverse(w)), kOne));
    }
    inv.expect(throws([] { inverse(kPPlus); }));
    inv.expect(throws([] { inverse(Bicomplex{}); }));
    s.add(inv);

    Check exp("algebra.bexp",
              "bexp(w+v) = bexp(w)*bexp(v), inverse(bexp(w)) = bexp(-w), and bexp is never "
              "zero nor a zero divisor",
              s.tol(1e-12));
    for (int i = 0; i < 10000; ++i) {
        auto gen = s.stream("algebra.bexp", i);
        const Bicomplex w = rng::bicomplex_in(gen, 1.5);
        const Bicomplex v = rng::bicomplex_in(gen, 1.5);
        double err = brel(bexp(w + v), mul(bexp(w), bexp(v)));
        err = std::max(err, brel(inverse(bexp(w)), bexp(-w)));
        if (bexp(w).is_zero() || bexp(w).is_zero_divisor()) err = 1.0;
        exp.record(err);
    }
    s.add(exp);

    Check zd("algebra.zero-divisor-detection",
             "c*p+ and c*p- are flagged as zero divisors; generic elements and zero are not",
             0.0);
    for (int i = 0; i < 1000; ++i) {
        auto gen = s.stream("algebra.zerodiv", i);
        const Complex c = rng::complex_in(gen, 3.0);
        if (c == Complex{}) continue;
        bool ok = cscale(c, kPPlus).is_zero_divisor() && cscale(c, kPMinus).is_zero_divisor();
        Bicomplex w = rng::bicomplex_in(gen, 2.0);
        if (std::min(std::abs(w.plus()), std::abs(w.minus())) > 1e-6)
            ok = ok && !w.is_zero_divisor();
        ok = ok && !Bicomplex{}.is_zero_divisor();
        zd.expect(ok);
    }
    s.add(zd);

    Check pinned("algebra.pinned-values",
                 "split(j) = (-i,+i); split(1+ij) = (2,0); p+*p- = 0; j*j = -1; i*j = ij; "
                 "(1+j)(1-j) = 2; norm(p+) = 1/sqrt2; inverse(2p+ + p-) = 0.75 - 0.25ij; "
                 "bexp(i*pi) = -1; bexp(j*pi/2) = j",
                 1e-15);
    pinned.record(std::abs(split(kJ).first - Complex(0.0, -1.0)));
    pinned.record(std::abs(split(kJ).second - Complex(0.0, 1.0)));
    pinned.record(std::abs(split(kOne + kIJ).first - Complex(2.0, 0.0)));
    pinned.record(std::abs(split(kOne + kIJ).second));
    pinned.record(norm(mul(kPPlus, kPMinus)));
    pinned.record(norm(mul(kJ, kJ) + kOne));
    pinned.record(norm(mul(kI, kJ) - kIJ));
    pinned.record(norm(mul(kOne + kJ, kOne - kJ) - Bicomplex{2.0}));
    pinned.record(std::abs(norm(kPPlus) - 1.0 / kSqrt2));
    pinned.record(norm(inverse(Bicomplex{2.0} * kPPlus + kPMinus) -
                       Bicomplex{0.75, 0.0, 0.0, -0.25}));
    pinned.record(norm(bexp(cscale(Complex(0.0, kPi), kOne)) + kOne));
    pinned.record(norm(bexp(Bicomplex{0.0, 0.0, kPi / 2.0, 0.0}) - kJ));
    s.add(pinned);

    return s.report;
}

// ============== toperator ==============

SuiteReport run_toperator(const SuiteOptions& opts) {
    Suite s("toperator", opts);

    Check rightinv("toperator.monomial-right-inverse",
                   "dbar(T_B(f)) = f coefficientwise for every zhat-monomial of bidegree "
                   "<= (8,8), unit and random bicomplex coefficients (component-matched "
                   "transform)",
                   s.tol(1e-12));
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            auto gen = s.stream("toperator.rightinv", m * 9 + n);
            for (const Bicomplex& c : {kOne, rng::bicomplex_in(gen, 2.0)}) {
                const BiPoly f = BiPoly::zhat_monomial(m, n, c);
                rightinv.record(poly_rel(dbar(t_bicomplex_poly(f)), f));
            }
        }
    s.add(rightinv);

    Check complexinv("toperator.complex-right-inverses",
                     "on complex monomials z^m z*^n, d/dz* of T and d/dz of T* reproduce "
                     "the monomial (closed forms)",
                     s.tol(1e-12));
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            const ComplexPoly mono = ComplexPoly::term(m, n, Complex{1.0, 0.0});
            double err = coeff_distance(t_monomial(m, n).dzstar(), mono);
            err = std::max(err, coeff_distance(t_star_monomial(m, n).dz(), mono));
            complexinv.record(err);
        }
    s.add(complexinv);

    Check pinnedT("toperator.pinned-transforms",
                  "T(1) = z*, T(z) = z z* - 1, T(z*) = z*^2/2; T_B(1) = zhat*, "
                  "T_B(zhat*) = zhat*^2/2, T_B(0) = 0; T_B(1) at 0.3+0.2i equals "
                  "[0.3, 0, -0.2, 0]",
                  1e-15);
    {
        ComplexPoly zz = ComplexPoly::term(1, 1, {1.0, 0.0});
        zz.add_term(0, 0, {-1.0, 0.0});
        pinnedT.record(coeff_distance(t_poly(ComplexPoly::constant({1.0, 0.0})),
                                      ComplexPoly::term(0, 1, {1.0, 0.0})));
        pinnedT.record(coeff_distance(t_poly(ComplexPoly::term(1, 0, {1.0, 0.0})), zz));
        pinnedT.record(coeff_distance(t_poly(ComplexPoly::term(0, 1, {1.0, 0.0})),
                                      ComplexPoly::term(0, 2, {0.5, 0.0})));
        pinnedT.record(coeff_distance(t_bicomplex_poly(BiPoly::constant(kOne)),
                                      BiPoly::zhat_star()));
        pinnedT.record(coeff_distance(t_bicomplex_poly(BiPoly::zhat_star()),
                                      BiPoly::zhat_monomial(0, 2, Bicomplex{0.5})));
        pinnedT.expect(t_bicomplex_poly(BiPoly::zero()).is_zero());
        pinnedT.record(norm(t_bicomplex(BiPoly::constant(kOne), Complex(0.3, 0.2)) -
                            Bicomplex{0.3, 0.0, -0.2, 0.0}));
    }
    s.add(pinnedT);

    Check oracle("toperator.oracle-agreement",
                 "closed-form T matches the polar Gauss-Legendre/trapezoid quadrature on "
                 "monomials z^m z*^n, m,n <= 4, at random interior points |z0| <= 0.9",
                 s.tol(1e-6));
    for (int i = 0; i < 50; ++i) {
        auto gen = s.stream("toperator.oracle", i);
        const Complex z0 = rng::disk_point(gen, 0.9);
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n) {
                const ComplexPoly mono = ComplexPoly::term(m, n, Complex{1.0, 0.0});
                oracle.record(std::abs(t_complex(mono, z0) -
                                       t_complex_quad(mono, z0, opts.grid)));
            }
    }
    s.add(oracle);

    Check tstarq("toperator.tstar-quadrature",
                 "conjugate-kernel transform: closed form matches quadrature on monomials "
                 "m,n <= 2",
                 s.tol(1e-6));
    for (int i = 0; i < 5; ++i) {
        auto gen = s.stream("toperator.tstarq", i);
        const Complex z0 = rng::disk_point(gen, 0.9);
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                const ComplexPoly mono = ComplexPoly::term(m, n, Complex{1.0, 0.0});
                tstarq.record(std::abs(t_star_poly(mono).eval(z0) -
                                       t_star_quad(mono, z0, opts.grid)));
            }
    }
    s.add(tstarq);

    Check adaptive("toperator.adaptive-quadrature",
                   "grid-doubling refinement reaches the requested tolerance on smooth "
                   "integrands and raises QuadratureDivergence for unreachable ones",
                   s.tol(1e-8));
    {
        auto gen = s.stream("toperator.adaptive", 0);
        for (int i = 0; i < 3; ++i) {
            const Complex z0 = rng::disk_point(gen, 0.8);
            const ComplexPoly mono = ComplexPoly::term(2, 1, Complex{1.0, 0.0});
            adaptive.record(std::abs(t_complex_quad_adaptive(mono, z0, 1e-9) -
                                     t_complex(mono, z0)));
        }
        adaptive.expect(throws([] {
            t_complex_quad_adaptive(ComplexPoly::term(1, 1, Complex{1.0, 0.0}),
                                    Complex(0.5, 0.0), 1e-30, {.n_r = 8, .n_theta = 16}, 1);
        }));
    }
    s.add(adaptive);

    Check mixed("toperator.mixed-partials",
                "d(dbar(f)) = dbar(d(f)) exactly on integer-coefficient polynomials", 0.0);
    for (int i = 0; i < 200; ++i) {
        auto gen = s.stream("toperator.mixed", i);
        const BiPoly f = rng::integer_bipoly_in(gen, 6, 6);
        mixed.expect(d(dbar(f)) == dbar(d(f)));
    }
    s.add(mixed);

    Check rules("toperator.monomial-derivative-rules",
                "dbar(zhat) = 0, dbar(zhat*^n) = n zhat*^(n-1), d(zhat^n) = n zhat^(n-1), "
                "d(zhat*) = 0, d(zhat + zhat*) = 1, derivatives of constants vanish (exact)",
                0.0);
    for (int n = 1; n <= 8; ++n) {
        rules.expect(dbar(BiPoly::zhat_monomial(n, 0, kOne)).is_zero());
        rules.expect(d(BiPoly::zhat_monomial(0, n, kOne)).is_zero());
        rules.expect(dbar(BiPoly::zhat_monomial(0, n, kOne)) ==
                     BiPoly::zhat_monomial(0, n - 1, Bicomplex{double(n)}));
        rules.expect(d(BiPoly::zhat_monomial(n, 0, kOne)) ==
                     BiPoly::zhat_monomial(n - 1, 0, Bicomplex{double(n)}));
    }
    rules.expect(dbar(BiPoly::constant(Bicomplex{1.0, 2.0, 3.0, 4.0})).is_zero());
    rules.expect(dbar(BiPoly::zhat() + BiPoly::zhat_star()) == BiPoly::constant(kOne));
    rules.expect(d(BiPoly::zhat() + BiPoly::zhat_star()) == BiPoly::constant(kOne));
    s.add(rules);

    Check holo("toperator.holomorphy-dbar-link",
               "holomorphy_check(f) is true exactly when dbar(f) is the zero polynomial; "
               "component characterization p+*(z* poly) + p-*(z poly) passes",
               0.0);
    for (int i = 0; i < 100; ++i) {
        auto gen = s.stream("toperator.holo", i);
        const BiPoly h = rng::holomorphic_in(gen, 5);
        holo.expect(holomorphy_check(h) && dbar(h).is_zero());
        const BiPoly g = rng::bipoly_in(gen, 3, 3);
        holo.expect(holomorphy_check(g) == dbar(g).is_zero());
    }
    holo.expect(holomorphy_check(BiPoly::zhat()));
    holo.expect(!holomorphy_check(BiPoly::zhat_star()));
    s.add(holo);

    Check evalhom("toperator.eval-homomorphism",
                  "evaluate respects the algebra: (f*g)(z) = f(z)*g(z), (f+g)(z) = "
                  "f(z)+g(z), (lambda*f)(z) = lambda*f(z), relative",
                  s.tol(1e-12));
    for (int i = 0; i < 200; ++i) {
        auto gen = s.stream("toperator.evalhom", i);
        const BiPoly f = rng::bipoly_in(gen, 3, 3);
        const BiPoly g = rng::bipoly_in(gen, 3, 3);
        const Bicomplex lambda = rng::bicomplex_in(gen, 2.0);
        for (int k = 0; k < 5; ++k) {
            const Complex z = rng::disk_point(gen, 1.0);
            const double sc =
                (1.0 + norm(f.eval(z))) * (1.0 + norm(g.eval(z))) * (1.0 + norm(lambda));
            double err = norm(mul(f, g).eval(z) - mul(f.eval(z), g.eval(z)));
            err = std::max(err, norm((f + g).eval(z) - (f.eval(z) + g.eval(z))));
            err = std::max(err, norm(scale(lambda, f).eval(z) - mul(lambda, f.eval(z))));
            evalhom.record(err / sc);
        }
    }
    s.add(evalhom);

    Check conjclose("toperator.conjugation-closure",
                    "function-level conjugation commutes with evaluation for all three "
                    "kinds: conj(f, k)(z) = conj(f(z), k)",
                    1e-14);
    for (int i = 0; i < 200; ++i) {
        auto gen = s.stream("toperator.conjclose", i);
        const BiPoly f = rng::bipoly_in(gen, 3, 3);
        for (int k = 0; k < 3; ++k) {
            const Complex z = rng::disk_point(gen, 1.0);
            double err = 0.0;
            for (ConjKind kind : {ConjKind::bar_j, ConjKind::bar_i, ConjKind::bar_ij})
                err = std::max(err, norm(conj(f, kind).eval(z) - conj(f.eval(z), kind)));
            conjclose.record(rel(err, f.max_coeff()));
        }
    }
    s.add(conjclose);

    Check fd("toperator.fd-matches-exact",
             "order-4/6 centered stencils reproduce exact dbar and d of polynomial "
             "closures (their truncation terms vanish on bidegree (2,2); roundoff only)",
             s.tol(1e-8));
    for (int i = 0; i < 60; ++i) {
        auto gen = s.stream("toperator.fd", i);
        const BiPoly f = rng::bipoly_in(gen, 2, 2);
        ClosureFn wrap;
        wrap.descriptor = "wrapped-bipoly";
        wrap.eval = [f](Complex z) { return f.eval(z); };
        const Complex z0 = rng::disk_point(gen, 0.8);
        const BiPoly dbf = dbar(f), df = d(f);
        for (int order : {4, 6}) {
            const FDStencil st{order, 1e-3};
            fd.record(norm(fd_apply(Func{wrap}, WirtingerOp::dbar, z0, st) - dbf.eval(z0)));
            fd.record(norm(fd_apply(Func{wrap}, WirtingerOp::d, z0, st) - df.eval(z0)));
        }
    }
    s.add(fd);

    Check fdclose("toperator.fd-closure-consistency",
                  "finite differences agree with the analytic derivative of the "
                  "exponential closure",
                  s.tol(1e-7));
    for (int i = 0; i < 20; ++i) {
        auto gen = s.stream("toperator.fdclose", i);
        const ClosureFn e = make_exp_of_bipoly(rng::bipoly_in(gen, 2, 2, 0.5));
        const Complex z0 = rng::disk_point(gen, 0.8);
        fdclose.record(norm(fd_apply(Func{e}, WirtingerOp::dbar, z0, {6, 1e-3}) -
                            e.dbar_analytic(z0)));
        fdclose.record(norm(fd_apply(Func{e}, WirtingerOp::d, z0, {6, 1e-3}) -
                            e.d_analytic(z0)));
    }
    s.add(fdclose);

    Check fddom("toperator.fd-domain-handling",
                "stencils that would leave the disk raise StencilOutOfDomain; the auto "
                "variant shrinks the step near the boundary and stays accurate",
                s.tol(1e-9));
    {
        const BiPoly f = BiPoly::zhat_monomial(0, 3, kOne);
        ClosureFn wrap;
        wrap.descriptor = "wrapped-bipoly";
        wrap.eval = [f](Complex z) { return f.eval(z); };
        fddom.expect(throws([&] {
            fd_apply(Func{wrap}, WirtingerOp::dbar, Complex(0.9995, 0.0), {6, 1e-3});
        }));
        fddom.expect(throws([&] {
            fd_apply(Func{wrap}, WirtingerOp::dbar, Complex(0.2, 0.1), {5, 1e-3});
        }));
        const BiPoly dbf = dbar(f);
        for (double x : {0.999, 0.9995}) {
            const Complex z0(x, 0.0);
            fddom.record(norm(fd_apply_auto(Func{wrap}, WirtingerOp::dbar, z0) - dbf.eval(z0)));
        }
    }
    s.add(fddom);

    Check grid("toperator.quadrature-grid-validation",
               "grids below n_r = 8 / n_theta = 16 or with odd n_theta are rejected; "
               "evaluation outside the open disk is rejected",
               0.0);
    grid.expect(throws([] { QuadratureGrid{4, 512}.validate(); }));
    grid.expect(throws([] { QuadratureGrid{256, 15}.validate(); }));
    grid.expect(throws([] { QuadratureGrid{256, 17}.validate(); }));
    grid.expect(!throws([] { QuadratureGrid{8, 16}.validate(); }));
    grid.expect(throws([] {
        t_complex_quad(ComplexPoly::constant({1.0, 0.0}), Complex(1.0, 0.0));
    }));
    s.add(grid);

    Check poisson("toperator.poisson",
                  "P_0 = 1, the kernel has unit mean, constant traces extend to "
                  "themselves, the trace of p-*z extends to p-*r e^{i theta}, and "
                  "degree <= 10 B-holomorphic polynomials are reproduced at |z| <= 0.95 "
                  "from 1024 boundary samples",
                  s.tol(1e-8));
    {
        auto gen = s.stream("toperator.poisson", 0);
        poisson.record(std::abs(poisson_kernel(0.0, rng::uniform(gen, 0.0, 6.28)) - 1.0));
        for (double r : {0.3, 0.7, 0.95}) {
            double mean = 0.0;
            const int n = 4096;
            for (int k = 0; k < n; ++k) mean += poisson_kernel(r, 2.0 * kPi * k / n);
            poisson.record(std::abs(mean / n - 1.0));
        }
        const Bicomplex c = rng::bicomplex_in(gen, 2.0);
        BoundaryTrace ct;
        ct.plus.assign(256, c.plus());
        ct.minus.assign(256, c.minus());
        poisson.record(norm(poisson_extend(ct, 0.5, 1.1) - c));

        const BiPoly pminus_z = scale(kPMinus, BiPoly::embed(ComplexPoly::term(1, 0, {1, 0})));
        const BoundaryTrace tr = sample_boundary(Func{pminus_z}, 512);
        for (int k = 0; k < 8; ++k) {
            const double r = 0.1 + 0.1 * k, theta = rng::uniform(gen, 0.0, 6.28);
            poisson.record(norm(poisson_extend(tr, r, theta) -
                                pminus_z.eval(std::polar(r, theta))));
        }
        for (int i = 0; i < 10; ++i) {
            auto g2 = s.stream("toperator.poisson-holo", i);
            const BiPoly h = rng::holomorphic_in(g2, 10);
            const BoundaryTrace ht = sample_boundary(Func{h}, 1024);
            for (int k = 0; k < 5; ++k) {
                const Complex z = rng::disk_point(g2, 0.95);
                poisson.record(norm(poisson_extend(ht, std::abs(z), std::arg(z)) - h.eval(z)));
            }
        }
    }
    s.add(poisson);

    if (opts.tb_literal) {
        Check literal("toperator.literal-right-inverse",
                      "right-inverse check under the literal both-kernels transform; the "
                      "documented failure on the conjugate embedding f(z) = z* shows a "
                      "residual defect equal to the monomial z (coefficient distance "
                      "exactly 1)",
                      s.tol(1e-12));
        const BiPoly zbar = BiPoly::embed(ComplexPoly::term(0, 1, {1.0, 0.0}));
        literal.record(
            coeff_distance(dbar(t_bicomplex_poly(zbar, TbKind::literal)), zbar));
        s.add(literal);
    }

    return s.report;
}

// ============== vekua ==============

std::vector<Complex> random_probes(const Suite& s, std::string_view label, int index,
                                   int count, double rmax) {
    auto gen = s.stream(label, index);
    std::vector<Complex> probes;
    for (int i = 0; i < count; ++i) probes.push_back(rng::disk_point(gen, rmax));
    return probes;
}

SuiteReport run_vekua(const SuiteOptions& opts) {
    Suite s("vekua", opts);

    Check simres("vekua.similarity-residual",
                 "phi * bexp(T_B(A)) solves dbar w = A w to 1e-7 under order-6 finite "
                 "differences (h = 1e-3) at 100 interior probes, for random A of "
                 "bidegree <= 3 and holomorphic phi of degree <= 5",
                 s.tol(1e-7));
    Check nonvanish("vekua.nonvanishing-factor",
                    "the exponential similarity factor is never zero nor a zero divisor "
                    "at any probe",
                    0.0);
    for (int i = 0; i < 50; ++i) {
        auto gen = s.stream("vekua.similarity", i);
        VekuaProblem problem;
        problem.A = rng::bipoly_in(gen, 3, 3);
        const BiPoly phi = rng::holomorphic_in(gen, 5);
        const ClosureFn w = solve_similarity(problem.A, phi);
        const std::vector<Complex> probes = random_probes(s, "vekua.simprobes", i, 100, 0.9);
        simres.record(residual(problem, Func{w}, probes, {opts.fd_order, 1e-3}));

        const BiPoly expo = t_bicomplex_poly(problem.A);
        for (Complex z : probes) {
            const Bicomplex factor = bexp(expo.eval(z));
            nonvanish.expect(!factor.is_zero() && !factor.is_zero_divisor());
        }
    }
    s.add(simres);
    s.add(nonvanish);

    Check pinnedres("vekua.pinned-residuals",
                    "residual(zhat*, A=B=0) = 1 and residual(zhat, A=B=0) = 0 exactly; "
                    "the A = 1, phi = 1 solution e^(zhat*) has finite-difference "
                    "residual <= 1e-7; A = 0 reduces the solver to phi itself",
                    s.tol(1e-7));
    {
        VekuaProblem trivial;
        const std::vector<Complex> probes = random_probes(s, "vekua.pinnedres", 0, 20, 0.9);
        pinnedres.record(
            std::abs(residual(trivial, Func{BiPoly::zhat_star()}, probes) - 1.0));
        pinnedres.record(residual(trivial, Func{BiPoly::zhat()}, probes));
        VekuaProblem expons;
        expons.A = BiPoly::constant(kOne);
        pinnedres.record(
            residual(expons, Func{solve_similarity(expons.A, BiPoly::constant(kOne))}, probes));
        auto gen = s.stream("vekua.pinnedres-phi", 0);
        const BiPoly phi = rng::holomorphic_in(gen, 4);
        pinnedres.record(residual(trivial, Func{solve_similarity(BiPoly::zero(), phi)}, probes));
    }
    s.add(pinnedres);

    Check fixed("vekua.fixed-point-contraction",
                "constant coefficients with ||A||, ||B|| <= 0.1 contract within 50 "
                "iterations at degree cap 24 to an independently measured residual "
                "<= 1e-8",
                s.tol(1e-8));
    for (int i = 0; i < 20; ++i) {
        auto gen = s.stream("vekua.fixed", i);
        VekuaProblem problem;
        problem.A = BiPoly::constant(rng::bicomplex_in(gen, 0.05));
        problem.B = BiPoly::constant(rng::bicomplex_in(gen, 0.05));
        problem.degree_cap = opts.degree_cap;
        const BiPoly phi = rng::holomorphic_in(gen, 3);
        const SolveReport report = solve_fixed_point(problem, phi, 50);
        fixed.record(report.residual_sup);
        fixed.expect(report.converged && report.iterations <= 50);
    }
    s.add(fixed);

    Check cross("vekua.similarity-fixed-point-agreement",
                "for constant A (B = 0) and constant phi the truncated fixed point and "
                "the similarity product agree at 20 probes (both equal phi*e^(A zhat*))",
                s.tol(1e-6));
    for (int i = 0; i < 10; ++i) {
        auto gen = s.stream("vekua.cross", i);
        VekuaProblem problem;
        problem.A = BiPoly::constant(rng::bicomplex_in(gen, 0.1));
        problem.degree_cap = opts.degree_cap;
        const BiPoly phi = BiPoly::constant(rng::bicomplex_in(gen, 2.0));
        const SolveReport fp = solve_fixed_point(problem, phi, 50);
        const ClosureFn sim = solve_similarity(problem.A, phi);
        const std::vector<Complex> probes = random_probes(s, "vekua.crossprobes", i, 20, 0.9);
        double worst = 0.0;
        for (Complex z : probes)
            worst = std::max(worst, norm(fp.solution.eval(z) - sim.eval(z)));
        cross.record(worst);
    }
    s.add(cross);

    Check fppinned("vekua.fixed-point-pinned",
                   "A = B = 0 returns phi itself after one sweep; A = 0.05 matches the "
                   "similarity values to 1e-6; a constant A = 50 raises NonConvergence",
                   s.tol(1e-6));
    {
        VekuaProblem trivial;
        const BiPoly zh = BiPoly::zhat();
        const SolveReport r0 = solve_fixed_point(trivial, zh, 50);
        fppinned.expect(r0.iterations == 1 && r0.solution == zh);

        VekuaProblem small;
        small.A = BiPoly::constant(Bicomplex{0.05});
        const BiPoly one = BiPoly::constant(kOne);
        const SolveReport r1 = solve_fixed_point(small, one, 50);
        const ClosureFn sim = solve_similarity(small.A, one);
        const std::vector<Complex> probes = random_probes(s, "vekua.fpp", 0, 20, 0.9);
        double worst = 0.0;
        for (Complex z : probes)
            worst = std::max(worst, norm(r1.solution.eval(z) - sim.eval(z)));
        fppinned.record(worst);

        VekuaProblem big;
        big.A = BiPoly::constant(Bicomplex{50.0});
        fppinned.expect(throws([&] { solve_fixed_point(big, one, 50); }));
        fppinned.expect(throws([&] {
            solve_fixed_point(trivial, BiPoly::zhat_star(), 50);
        }));
    }
    s.add(fppinned);

    Check sandwich("vekua.decoupling-sandwich",
                   "per probe, max component residual <= sqrt2 * bicomplex residual and "
                   "bicomplex residual <= sqrt2 * max component residual, on exact "
                   "polynomial instances",
                   s.tol(1e-12));
    Check identity("vekua.decoupling-identity",
                   "the bicomplex residual norm equals sqrt((rp^2 + rm^2)/2) of the two "
                   "complex slice residuals",
                   s.tol(1e-12));
    for (int i = 0; i < 50; ++i) {
        auto gen = s.stream("vekua.decouple", i);
        VekuaProblem problem;
        problem.A = rng::integer_bipoly_in(gen, 2, 2);
        problem.B = rng::integer_bipoly_in(gen, 2, 2);
        const BiPoly w = rng::integer_bipoly_in(gen, 3, 3);
        const DecoupledReport report = decouple(problem, w);
        for (std::size_t k = 0; k < report.probes.size(); ++k) {
            const double comp = std::max(report.plus_residual[k], report.minus_residual[k]);
            const double bic = report.bicomplex_residual[k];
            const double scale = 1.0 + comp + bic;
            sandwich.record(std::max(comp - kSqrt2 * bic, bic - kSqrt2 * comp) / scale);
            identity.record(
                std::abs(bic - std::sqrt(0.5 * (report.plus_residual[k] *
                                                    report.plus_residual[k] +
                                                report.minus_residual[k] *
                                                    report.minus_residual[k]))) /
                scale);
        }
    }
    s.add(sandwich);
    s.add(identity);

    Check dpinned("vekua.decoupling-pinned",
                  "w = p-*z with A = B = 0 has both slice residuals identically 0; A = j "
                  "splits into slice coefficients (-i, +i); bar_j problems are rejected "
                  "with ConventionError",
                  0.0);
    {
        VekuaProblem trivial;
        const BiPoly w = scale(kPMinus, BiPoly::embed(ComplexPoly::term(1, 0, {1.0, 0.0})));
        const DecoupledReport rep = decouple(trivial, w);
        bool zero = true;
        for (double r : rep.plus_residual) zero = zero && r == 0.0;
        for (double r : rep.minus_residual) zero = zero && r == 0.0;
        for (double r : rep.bicomplex_residual) zero = zero && r == 0.0;
        dpinned.expect(zero);

        VekuaProblem jproblem;
        jproblem.A = BiPoly::constant(kJ);
        const DecoupledReport jrep = decouple(jproblem, w);
        dpinned.expect(jproblem.A.plus.coeff(0, 0) == Complex(0.0, -1.0) &&
                       jproblem.A.minus.coeff(0, 0) == Complex(0.0, 1.0));
        dpinned.expect(jrep.plus_a.coeff(0, 0) == Complex(0.0, 1.0) &&
                       jrep.minus_a.coeff(0, 0) == Complex(0.0, 1.0));

        VekuaProblem barj;
        barj.conj_kind = ConjKind::bar_j;
        dpinned.expect(throws([&] { decouple(barj, w); }));
        dpinned.expect(throws([&] { solve_similarity(BiPoly::zero(), BiPoly::zhat_star()); }));
    }
    s.add(dpinned);

    Check hardycmp("vekua.hardy-comparability",
                   "for computed similarity solutions w = phi*e^v, every circle integral "
                   "of ||w||^p is bounded by 2^(p/2) M^p times the circle integral of "
                   "||phi||^p, with M the sampled sup of ||e^v|| (p = 2)",
                   1e-9);
    for (int i = 0; i < 5; ++i) {
        auto gen = s.stream("vekua.hardycmp", i);
        const BiPoly A = rng::bipoly_in(gen, 2, 2, 0.5);
        const BiPoly phi = rng::holomorphic_in(gen, 3);
        const ClosureFn w = solve_similarity(A, phi);
        const BiPoly expo = t_bicomplex_poly(A);
        const std::vector<double> radii = default_radii(8);
        const int n_theta = 512;
        const double p = 2.0;

        double M = 0.0;
        for (double r : radii)
            for (int k = 0; k < n_theta; ++k)
                M = std::max(M, norm(bexp(expo.eval(std::polar(r, 2.0 * kPi * k / n_theta)))));
        const double factor = std::pow(2.0, p / 2.0) * std::pow(M, p);
        for (double r : radii) {
            const double vw = circle_lp(Func{w}, r, p, n_theta);
            const double vphi = circle_lp(Func{phi}, r, p, n_theta);
            hardycmp.record((vw - factor * vphi) / (1.0 + vw));
        }
    }
    s.add(hardycmp);

    Check errors("vekua.problem-validation",
                 "degree caps below the coefficient bidegree raise DegreeOverflow; "
                 "empty or exterior probe sets are rejected",
                 0.0);
    {
        auto gen = s.stream("vekua.errors", 0);
        VekuaProblem bad;
        bad.A = rng::integer_bipoly_in(gen, 3, 3);
        bad.degree_cap = 1;
        errors.expect(throws([&] { bad.validate(); }));
        VekuaProblem ok;
        errors.expect(throws([&] { residual(ok, Func{BiPoly::zhat()}, {}); }));
        errors.expect(throws([&] {
            residual(ok, Func{BiPoly::zhat()}, {Complex(1.5, 0.0)});
        }));
    }
    s.add(errors);

    return s.report;
}

// ============== decomp ==============

/// Exact coefficient families for each mode (integer arithmetic throughout).
struct DecompFamily {
    BiPoly A, B;
    std::vector<BiPoly> phis;
};

DecompFamily make_family(DecompMode mode, int n, std::mt19937_64& gen) {
    DecompFamily family;
    if (mode == DecompMode::poly) {
        for (int k = 0; k < n; ++k)
            family.phis.push_back(rng::integer_holomorphic_in(gen, 3));
        return family;
    }
    if (mode == DecompMode::meta) {
        // A supported on one idempotent slice, coefficients on the other:
        // A*phi = 0 exactly and each phi is B-holomorphic, so dbar(phi) = A*phi
        // holds with zero residual while A itself is nonzero.
        const bool plus_slice = (gen() & 1u) != 0;
        ComplexPoly a;
        for (int m = 0; m <= 2; ++m)
            for (int nn = 0; nn <= 2; ++nn)
                a.add_term(m, nn,
                           Complex(rng::uniform_int(gen, -3, 3), rng::uniform_int(gen, -3, 3)));
        for (int k = 0; k < n; ++k) {
            ComplexPoly v;
            for (int d = 0; d <= 3; ++d)
                v.add_term(plus_slice ? 0 : d, plus_slice ? d : 0,
                           Complex(rng::uniform_int(gen, -3, 3), rng::uniform_int(gen, -3, 3)));
            family.phis.push_back(plus_slice ? BiPoly{v, ComplexPoly{}}
                                             : BiPoly{ComplexPoly{}, v});
        }
        family.A = plus_slice ? BiPoly{ComplexPoly{}, a} : BiPoly{a, ComplexPoly{}};
        return family;
    }
    // hoiv: per slice, A = p* q and B = -p q make phi = c p an exact solution
    // of d phi = A phi + B phi* for real integers c, by p (p* q) - p q p* = 0.
    ComplexPoly p_plus, p_minus, q_plus, q_minus;
    for (int d = 0; d <= 2; ++d) {
        p_plus.add_term(0, d,
                        Complex(rng::uniform_int(gen, -2, 2), rng::uniform_int(gen, -2, 2)));
        p_minus.add_term(d, 0,
                         Complex(rng::uniform_int(gen, -2, 2), rng::uniform_int(gen, -2, 2)));
    }
    for (int m = 0; m <= 1; ++m)
        for (int nn = 0; nn <= 1; ++nn) {
            q_plus.add_term(m, nn,
                            Complex(rng::uniform_int(gen, -2, 2), rng::uniform_int(gen, -2, 2)));
            q_minus.add_term(m, nn,
                             Complex(rng::uniform_int(gen, -2, 2), rng::uniform_int(gen, -2, 2)));
        }
    family.A = BiPoly{p_plus.conj_fn() * q_plus, p_minus.conj_fn() * q_minus};
    family.B = BiPoly{-(p_plus * q_plus), -(p_minus * q_minus)};
    for (int k = 0; k < n; ++k) {
        const Complex cp{double(rng::uniform_int(gen, -3, 3)), 0.0};
        const Complex cm{double(rng::uniform_int(gen, -3, 3)), 0.0};
        family.phis.push_back(BiPoly{cp * p_plus, cm * p_minus});
    }
    return family;
}

SuiteReport run_decomp(const SuiteOptions& opts) {
    Suite s("decomp", opts);

    Check roundtrip("decomp.round-trip",
                    "extract(construct(phis)) returns the coefficients, coefficientwise "
                    "<= 1e-9, for n <= 5 in all three modes over exact integer families",
                    s.tol(1e-9));
    Check nilpotent("decomp.nilpotency",
                    "the n-fold iterated operator annihilates every constructed order-n "
                    "member exactly (zero coefficient table)",
                    0.0);
    Check expansion("decomp.expansion-identity",
                    "L^k of a constructed member equals sum_{j>=k} j!/(j-k)! "
                    "basis^(j-k) phi_j exactly (falling-factorial law)",
                    0.0);
    for (int seed_case = 0; seed_case < 100; ++seed_case) {
        for (DecompMode mode : {DecompMode::poly, DecompMode::meta, DecompMode::hoiv}) {
            auto gen = s.stream("decomp.roundtrip." + mode_name(mode), seed_case);
            const int n = 1 + rng::uniform_int(gen, 0, 4);
            const DecompFamily family = make_family(mode, n, gen);
            const BiPoly f = construct(mode, family.phis, family.A, family.B);

            const DecompResult result = extract(mode, f, n, family.A, family.B);
            double err = result.reconstruction_error;
            for (int k = 0; k < n; ++k)
                err = std::max(err, coeff_distance(result.coefficients[k], family.phis[k]));
            roundtrip.record(err);

            const BiPoly opA = (mode == DecompMode::poly) ? BiPoly::zero() : family.A;
            const BiPoly opB = (mode == DecompMode::hoiv) ? family.B : BiPoly::zero();
            nilpotent.expect(iterate_op(f, opA, opB, n).is_zero());

            const BiPoly basis = mode_basis(mode);
            for (int k = 1; k < n; ++k) {
                BiPoly expected;
                BiPoly basis_power = BiPoly::constant(kOne);
                for (int j = k; j < n; ++j) {
                    double fall = 1.0;
                    for (int t = j; t > j - k; --t) fall *= t;
                    expected = expected +
                               scale(Bicomplex{fall}, mul(basis_power, family.phis[j]));
                    basis_power = mul(basis_power, basis);
                }
                expansion.expect(iterate_op(f, opA, opB, k) == expected);
            }
        }
    }
    s.add(roundtrip);
    s.add(nilpotent);
    s.add(expansion);

    Check leibniz("decomp.leibniz-step",
                  "one application of L sends basis^(k+1)*phi/(k+1) to basis^k*phi "
                  "whenever phi solves the first-order equation",
                  s.tol(1e-12));
    for (int i = 0; i < 10; ++i) {
        for (DecompMode mode : {DecompMode::poly, DecompMode::meta, DecompMode::hoiv}) {
            auto gen = s.stream("decomp.leibniz." + mode_name(mode), i);
            const DecompFamily family = make_family(mode, 1, gen);
            const BiPoly opA = (mode == DecompMode::poly) ? BiPoly::zero() : family.A;
            const BiPoly opB = (mode == DecompMode::hoiv) ? family.B : BiPoly::zero();
            const BiPoly basis = mode_basis(mode);
            BiPoly power = BiPoly::constant(kOne);
            for (int k = 0; k <= 3; ++k) {
                const BiPoly lhs = iterate_op(
                    scale(Bicomplex{1.0 / (k + 1)}, mul(mul(power, basis), family.phis[0])),
                    opA, opB, 1);
                leibniz.record(poly_rel(lhs, mul(power, family.phis[0])));
                power = mul(power, basis);
            }
        }
    }
    s.add(leibniz);

    Check conjinv("decomp.hoiv-basis-conj-invariance",
                  "(zhat + zhat*)^k is invariant under both bar_j and bar_ij, which is "
                  "why the iterated-operator theorems do not depend on the conjugation "
                  "reading",
                  0.0);
    {
        const BiPoly basis = mode_basis(DecompMode::hoiv);
        BiPoly power = BiPoly::constant(kOne);
        for (int k = 0; k <= 5; ++k) {
            conjinv.expect(conj(power, ConjKind::bar_j) == power &&
                           conj(power, ConjKind::bar_ij) == power);
            power = mul(power, basis);
        }
    }
    s.add(conjinv);

    Check pinned("decomp.pinned",
                 "iterate_op(zhat*^2, 0, 0, 2) = 2; k = 0 is the identity; "
                 "iterate_op(zhat*^3 phi, 0, 0, 1) = 3 zhat*^2 phi; extract(poly, "
                 "zhat*, 2) = (0, 1); construct(poly, (0,1)) = zhat*; meta order 1 "
                 "reduces to its coefficient; hoiv (0, phi) with A = B = 0 gives "
                 "(zhat+zhat*)*phi with L^2 = 0",
                 s.tol(1e-12));
    {
        pinned.expect(iterate_op(BiPoly::zhat_monomial(0, 2, kOne), BiPoly::zero(),
                                 BiPoly::zero(), 2) == BiPoly::constant(Bicomplex{2.0}));
        auto gen = s.stream("decomp.pinned", 0);
        const BiPoly f = rng::integer_bipoly_in(gen, 3, 3);
        pinned.expect(iterate_op(f, BiPoly::zero(), BiPoly::zero(), 0) == f);
        const BiPoly phi = rng::integer_holomorphic_in(gen, 3);
        pinned.expect(iterate_op(mul(BiPoly::zhat_monomial(0, 3, kOne), phi), BiPoly::zero(),
                                 BiPoly::zero(), 1) ==
                      scale(Bicomplex{3.0}, mul(BiPoly::zhat_monomial(0, 2, kOne), phi)));

        const DecompResult zr = extract(DecompMode::poly, BiPoly::zhat_star(), 2,
                                        BiPoly::zero(), BiPoly::zero());
        pinned.expect(zr.coefficients[0].is_zero() &&
                      zr.coefficients[1] == BiPoly::constant(kOne));
        pinned.expect(construct(DecompMode::poly,
                                {BiPoly::zero(), BiPoly::constant(kOne)}, BiPoly::zero(),
                                BiPoly::zero()) == BiPoly::zhat_star());

        const DecompFamily meta1 = make_family(DecompMode::meta, 1, gen);
        pinned.expect(construct(DecompMode::meta, meta1.phis, meta1.A, meta1.B) ==
                      meta1.phis[0]);

        const BiPoly hf = construct(DecompMode::hoiv, {BiPoly::zero(), phi}, BiPoly::zero(),
                                    BiPoly::zero());
        pinned.expect(hf == mul(mode_basis(DecompMode::hoiv), phi) &&
                      iterate_op(hf, BiPoly::zero(), BiPoly::zero(), 2).is_zero());
    }
    s.add(pinned);

    Check errors("decomp.error-paths",
                 "extract raises NotInClassError outside the class; construct raises "
                 "CoefficientConditionError naming the offending index; invalid "
                 "orders and modes are rejected",
                 0.0);
    errors.expect(throws([] {
        extract(DecompMode::poly, BiPoly::zhat_star(), 1, BiPoly::zero(), BiPoly::zero());
    }));
    errors.expect(throws([] {
        construct(DecompMode::poly, {BiPoly::zhat_star()}, BiPoly::zero(), BiPoly::zero());
    }));
    try {
        construct(DecompMode::poly, {BiPoly::constant(kOne), BiPoly::zhat_star()},
                  BiPoly::zero(), BiPoly::zero());
        errors.expect(false);
    } catch (const CoefficientConditionError& e) {
        errors.expect(std::string(e.what()).find("k = 1") != std::string::npos);
    }
    errors.expect(throws([] {
        extract(DecompMode::poly, BiPoly::zhat(), 0, BiPoly::zero(), BiPoly::zero());
    }));
    errors.expect(throws([] { mode_from_name("fourier"); }));
    s.add(errors);

    return s.report;
}

// ============== hardy ==============

SuiteReport run_hardy(const SuiteOptions& opts) {
    Suite s("hardy", opts);

    Check monomial("hardy.monomial-profile",
                   "for f = z^k embedded, the profile sup tends to 2 pi with relative "
                   "gap <= k p 2^-12 * 1.1 on the default schedule, and the bounded "
                   "flag stays true (metric: gap / (k p 2^-12))",
                   1.1);
    for (int k = 1; k <= 6; ++k)
        for (double p : {1.0, 2.0}) {
            const BiPoly f = BiPoly::embed(ComplexPoly::term(k, 0, {1.0, 0.0}));
            const HardyProfile profile = hardy_profile(Func{f}, p);
            const double gap = (2.0 * kPi - profile.sup_estimate) / (2.0 * kPi);
            monomial.record(gap / (k * p * std::pow(2.0, -12.0)));
            monomial.expect(profile.bounded_flag);
        }
    s.add(monomial);

    Check circle("hardy.circle-integral-values",
                 "circle_lp is exact on functions with constant circle norm: z-embed "
                 "gives 2 pi r^p, constants give 2 pi ||c||^p, and p+ z*^a + p- z^b at "
                 "p = 2 gives pi(r^2a + r^2b)",
                 s.tol(1e-12));
    {
        auto gen = s.stream("hardy.circle", 0);
        const BiPoly zemb = BiPoly::embed(ComplexPoly::term(1, 0, {1.0, 0.0}));
        for (int i = 0; i < 10; ++i) {
            const double r = rng::uniform(gen, 0.1, 0.95);
            const double p = rng::uniform(gen, 0.5, 3.0);
            circle.record(
                std::abs(circle_lp(Func{zemb}, r, p) - 2.0 * kPi * std::pow(r, p)) /
                (2.0 * kPi));
            const Bicomplex c = rng::bicomplex_in(gen, 2.0);
            circle.record(std::abs(circle_lp(Func{BiPoly::constant(c)}, r, p) -
                                   2.0 * kPi * std::pow(norm(c), p)) /
                          (1.0 + 2.0 * kPi * std::pow(norm(c), p)));
            const int a = rng::uniform_int(gen, 0, 3), b = rng::uniform_int(gen, 0, 3);
            const BiPoly mixed{ComplexPoly::term(0, a, {1.0, 0.0}),
                               ComplexPoly::term(b, 0, {1.0, 0.0})};
            const double expect =
                kPi * (std::pow(r, 2.0 * a) + std::pow(r, 2.0 * b));
            circle.record(std::abs(circle_lp(Func{mixed}, r, 2.0) - expect) / (1.0 + expect));
        }
    }
    s.add(circle);

    Check unbounded("hardy.unbounded-profile",
                    "the closure 1/(1-z) at p = 2 matches the geometric-series value "
                    "2 pi/(1-r^2) on moderate radii and is flagged unbounded on the "
                    "full schedule",
                    s.tol(1e-9));
    {
        const ClosureFn f = make_pow_one_minus_z(1.0);
        for (int k = 1; k <= 6; ++k) {
            const double r = 1.0 - std::pow(2.0, -k);
            const double expect = 2.0 * kPi / (1.0 - r * r);
            // 4096 nodes keep the trapezoid aliasing term 2 r^N of the
            // geometric integrand far below the bound out to r = 1 - 2^-6.
            unbounded.record(std::abs(circle_lp(Func{f}, r, 2.0, 4096) - expect) / expect);
        }
        unbounded.expect(!hardy_profile(Func{f}, 2.0).bounded_flag);
        unbounded.expect(hardy_profile(Func{BiPoly::zero()}, 2.0).sup_estimate == 0.0);
    }
    s.add(unbounded);

    Check gap("hardy.boundary-gap",
              "boundary_gap(z-embed) equals 2 pi (1-r)^p exactly and its log-log slope "
              "against (1-r) recovers p within 1% for p in {1/2, 1, 2}; constants have "
              "gap 0; random polynomial gaps are nonincreasing for r >= 0.9",
              0.01);
    {
        const BiPoly zemb = BiPoly::embed(ComplexPoly::term(1, 0, {1.0, 0.0}));
        const std::vector<double> radii{0.9, 0.95, 0.975, 0.9875, 0.99375};
        for (double p : {0.5, 1.0, 2.0}) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (double r : radii) {
                const double g = boundary_gap(Func{zemb}, p, r);
                gap.record(std::abs(g - 2.0 * kPi * std::pow(1.0 - r, p)) /
                           (2.0 * kPi * std::pow(1.0 - r, p)) / 100.0);
                const double x = std::log(1.0 - r), y = std::log(g);
                sx += x; sy += y; sxx += x * x; sxy += x * y;
            }
            const double nn = radii.size();
            const double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
            gap.record(std::abs(slope - p) / p);
        }
        gap.record(boundary_gap(Func{BiPoly::constant(Bicomplex{1.0, 2.0})}, 1.0, 0.5));
        for (int i = 0; i < 10; ++i) {
            auto gen = s.stream("hardy.gapmono", i);
            const BiPoly f = rng::bipoly_in(gen, 3, 3);
            double previous = -1.0;
            for (double r : radii) {
                const double g = boundary_gap(Func{f}, 2.0, r);
                if (previous >= 0.0)
                    gap.record(std::max(0.0, (g - previous) / (1.0 + previous)) / 100.0);
                previous = g;
            }
        }
    }
    s.add(gap);

    Check sandwichc("hardy.component-sandwich",
                    "on a shared circle grid, max component integral <= 2^(p/2) * "
                    "circle_lp and circle_lp <= 2^(-p/2) * integral of (|f+|+|f-|)^p",
                    s.tol(1e-12));
    for (int i = 0; i < 30; ++i) {
        auto gen = s.stream("hardy.sandwich", i);
        const Func f = (i % 3 == 2)
                           ? Func{make_exp_of_bipoly(rng::bipoly_in(gen, 2, 2, 0.4))}
                           : Func{rng::bipoly_in(gen, 3, 3)};
        const double r = rng::uniform(gen, 0.2, 0.95);
        const double p = (i % 3 == 0) ? 0.5 : (i % 3 == 1 ? 1.0 : 2.0);
        const double full = circle_lp(f, r, p, 512);
        const ComponentLp comp = circle_lp_components(f, r, p, 512);
        const double scale = 1.0 + full + comp.sum;
        double viol = std::max(comp.plus, comp.minus) - std::pow(2.0, p / 2.0) * full;
        viol = std::max(viol, full - std::pow(2.0, -p / 2.0) * comp.sum);
        sandwichc.record(viol / scale);
    }
    s.add(sandwichc);

    Check stolz("hardy.stolz-probe",
                "z-embed at theta0 = 0 has limit 1 with oscillation <= 1e-12; zhat* "
                "approaches its boundary bicomplexification; limits agree across "
                "apertures pi/6 and pi/3 to 1e-8 for random polynomials",
                s.tol(1e-8));
    {
        const BiPoly zemb = BiPoly::embed(ComplexPoly::term(1, 0, {1.0, 0.0}));
        const StolzProbe p0 = stolz_probe(Func{zemb}, make_stolz_path(0.0, 0.5, 12));
        stolz.record(norm(p0.limit - kOne));
        stolz.record(p0.oscillation);

        auto gen = s.stream("hardy.stolz", 0);
        for (int i = 0; i < 5; ++i) {
            const double theta0 = rng::uniform(gen, 0.0, 2.0 * kPi);
            const StolzProbe pz =
                stolz_probe(Func{BiPoly::zhat_star()}, make_stolz_path(theta0, 0.5, 12));
            stolz.record(norm(pz.limit - join(std::polar(1.0, theta0),
                                              std::polar(1.0, -theta0))));
        }
        for (int i = 0; i < 10; ++i) {
            auto g2 = s.stream("hardy.stolz-aperture", i);
            const BiPoly f = rng::bipoly_in(g2, 4, 4);
            const double theta0 = rng::uniform(g2, 0.0, 2.0 * kPi);
            const StolzProbe narrow =
                stolz_probe(Func{f}, make_stolz_path(theta0, kPi / 6.0, 12, kPi / 12.0));
            const StolzProbe wide =
                stolz_probe(Func{f}, make_stolz_path(theta0, kPi / 3.0, 12, -kPi / 4.0));
            stolz.record(norm(narrow.limit - wide.limit));
        }
    }
    s.add(stolz);

    Check stolzerr("hardy.stolz-validation",
                   "paths with exterior points, cone violations, non-approaching "
                   "points, or bad apertures raise PathInvalid",
                   0.0);
    {
        StolzPath outside = make_stolz_path(0.0, 0.5, 6);
        outside.points[3] = Complex(0.0, 0.99); // far outside the cone at 1
        stolzerr.expect(throws([&] { outside.validate(); }));
        StolzPath stuck = make_stolz_path(0.0, 0.5, 6);
        stuck.points[4] = stuck.points[2];
        stolzerr.expect(throws([&] { stuck.validate(); }));
        stolzerr.expect(throws([] { make_stolz_path(0.0, 2.0, 6); }));
        stolzerr.expect(throws([] { make_stolz_path(0.0, 0.3, 6, 0.4); }));
        stolzerr.expect(throws([] { make_stolz_path(0.0, 0.5, 3); }));
    }
    s.add(stolzerr);

    Check pair("hardy.dist-pair",
               "constant c against test 1 pairs to 2 pi c; z-embed against cos gives "
               "pi and against 1 gives 0; random polynomials match the direct boundary "
               "pairing",
               s.tol(1e-8));
    {
        auto gen = s.stream("hardy.pair", 0);
        const Bicomplex c = rng::bicomplex_in(gen, 2.0);
        pair.record(brel(dist_pair(Func{BiPoly::constant(c)}, TrigPoly::one()),
                         c * (2.0 * kPi)));
        const BiPoly zemb = BiPoly::embed(ComplexPoly::term(1, 0, {1.0, 0.0}));
        pair.record(norm(dist_pair(Func{zemb}, TrigPoly::cosine(1)) -
                         Bicomplex{kPi}));
        pair.record(norm(dist_pair(Func{zemb}, TrigPoly::one())));
        for (int i = 0; i < 10; ++i) {
            auto g2 = s.stream("hardy.pair-poly", i);
            const BiPoly f = rng::bipoly_in(g2, 3, 3);
            TrigPoly test;
            test.a0 = rng::uniform(g2, -1.0, 1.0);
            for (int m = 0; m < 4; ++m) {
                test.cos_coef.push_back(rng::uniform(g2, -1.0, 1.0));
                test.sin_coef.push_back(rng::uniform(g2, -1.0, 1.0));
            }
            // Direct boundary pairing: f is continuous up to |z| = 1.
            Bicomplex direct{};
            const int n = 1024;
            for (int k = 0; k < n; ++k) {
                const double theta = 2.0 * kPi * k / n;
                direct += f.eval(std::polar(1.0, theta)) * test.eval(theta);
            }
            direct = direct * (2.0 * kPi / n);
            pair.record(brel(dist_pair(Func{f}, test), direct));
        }
    }
    s.add(pair);

    Check cpair("hardy.dist-pair-complex",
                "the complex-test pairing reduces to the real pairing on real tests "
                "and extracts single Fourier modes with e^(i m theta) tests",
                s.tol(1e-8));
    {
        auto gen = s.stream("hardy.cpair", 0);
        const BiPoly f = rng::bipoly_in(gen, 2, 2);
        ComplexTrigPoly realish;
        realish.modes = {{1, Complex(0.5, 0.0)}, {-1, Complex(0.5, 0.0)}}; // = cos theta
        cpair.record(brel(dist_pair_complex(Func{f}, realish),
                          dist_pair(Func{f}, TrigPoly::cosine(1))));
        // minus component of zhat*^2 on the boundary is e^(-2 i theta); pairing
        // against e^(+2 i theta) picks it out with weight 2 pi.
        ComplexTrigPoly probe;
        probe.modes = {{2, Complex(1.0, 0.0)}};
        const Bicomplex got = dist_pair_complex(Func{BiPoly::zhat_monomial(0, 2, kOne)}, probe);
        cpair.record(std::abs(got.minus() - Complex(2.0 * kPi, 0.0)));
    }
    s.add(cpair);

    Check unstable("hardy.extrapolation-guard",
                   "a boundary-oscillating closure triggers ExtrapolationUnstable "
                   "instead of returning a fake limit",
                   0.0);
    {
        ClosureFn wild;
        wild.descriptor = "oscillating-test-closure";
        wild.eval = [](Complex z) {
            const double t = 1.0 / (1.0 - std::abs(z));
            const double mag = std::exp(t); // overflows to inf near the boundary
            return Bicomplex::from_planes(Complex(mag * std::cos(t), mag * std::sin(t)));
        };
        unstable.expect(throws([&] { dist_pair(Func{wild}, TrigPoly::one()); }));
    }
    s.add(unstable);

    Check growth("hardy.growth-fit",
                 "growth_fit recovers the exponent of 1/(1-z)^beta within 0.05 for "
                 "beta in {0.5, 1, 2} and reports alpha <= 0.05 for bounded "
                 "polynomials",
                 0.05);
    {
        for (double beta : {0.5, 1.0, 2.0}) {
            const GrowthFit fit = growth_fit(Func{make_pow_one_minus_z(beta)});
            growth.record(std::abs(fit.alpha - beta));
            growth.expect(fit.C > 0.0);
        }
        auto gen = s.stream("hardy.growth", 0);
        const GrowthFit flat = growth_fit(Func{rng::bipoly_in(gen, 2, 2)});
        growth.record(flat.alpha);
    }
    s.add(growth);

    Check gpair("hardy.growth-implies-pairing",
                "every member of the built-in closure family with finite fitted "
                "growth has convergent distributional pairings for all trig tests up "
                "to degree 8 (no ExtrapolationUnstable)",
                0.0);
    {
        std::vector<Func> family;
        for (double beta : {0.5, 1.0, 2.0}) family.push_back(make_pow_one_minus_z(beta));
        auto gen = s.stream("hardy.gpair", 0);
        family.push_back(make_exp_of_bipoly(rng::bipoly_in(gen, 1, 1, 0.5)));
        for (const Func& f : family) {
            bool ok = true;
            ok = ok && !throws([&] { dist_pair(f, TrigPoly::one()); });
            for (int m = 1; m <= 8; ++m) {
                ok = ok && !throws([&] { dist_pair(f, TrigPoly::cosine(m)); });
                ok = ok && !throws([&] { dist_pair(f, TrigPoly::sine(m)); });
            }
            gpair.expect(ok);
        }
    }
    s.add(gpair);

    Check consistency("hardy.poisson-consistency",
                      "Fourier data recovered from extrapolated pairings, fed through "
                      "the Poisson extension, reproduces holomorphic polynomials at "
                      "interior points to 1e-6",
                      s.tol(1e-6));
    for (int i = 0; i < 5; ++i) {
        auto gen = s.stream("hardy.consistency", i);
        const BiPoly f = rng::holomorphic_in(gen, 4);
        const int deg = 4;
        // Boundary Fourier data: f+ = sum a_k e^(-ik theta), f- = sum b_k e^(ik theta).
        std::vector<std::pair<int, Complex>> plus_fourier, minus_fourier;
        const Bicomplex mean = dist_pair(Func{f}, TrigPoly::one());
        plus_fourier.push_back({0, mean.plus() / (2.0 * kPi)});
        minus_fourier.push_back({0, mean.minus() / (2.0 * kPi)});
        for (int m = 1; m <= deg; ++m) {
            const Bicomplex vc = dist_pair(Func{f}, TrigPoly::cosine(m));
            const Bicomplex vs = dist_pair(Func{f}, TrigPoly::sine(m));
            const Complex am = vc.plus() / kPi;
            const Complex bm = vc.minus() / kPi;
            // Cross-check the sine route for the same coefficients.
            consistency.record(std::abs(am - Complex(0.0, 1.0) * vs.plus() / kPi));
            consistency.record(std::abs(bm + Complex(0.0, 1.0) * vs.minus() / kPi));
            plus_fourier.push_back({-m, am});
            minus_fourier.push_back({m, bm});
        }
        const BoundaryTrace trace = trace_from_fourier(plus_fourier, minus_fourier, 1024);
        for (int k = 0; k < 10; ++k) {
            const Complex z = rng::disk_point(gen, 0.9);
            consistency.record(
                norm(poisson_extend(trace, std::abs(z), std::arg(z)) - f.eval(z)));
        }
    }
    s.add(consistency);

    return s.report;
}

} // namespace

// ============== Entry points ==============

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"algebra", "toperator", "vekua", "decomp",
                                                "hardy"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    if (name == "algebra") {
        report = run_algebra(options);
    } else if (name == "toperator") {
        report = run_toperator(options);
    } else if (name == "vekua") {
        report = run_vekua(options);
    } else if (name == "decomp") {
        report = run_decomp(options);
    } else if (name == "hardy") {
        report = run_hardy(options);
    } else if (name == "all") {
        report.suite = "all";
        report.seed = options.seed;
        for (const std::string& sub : suite_names()) {
            SuiteReport part = run_suite(sub, options);
            report.cases_run += part.cases_run;
            report.passed += part.passed;
            report.failed += part.failed;
            for (auto& inv : part.invariants) report.invariants.push_back(std::move(inv));
        }
    } else {
        throw SchemaError("run_suite: unknown suite \"" + name +
                          "\" (expected algebra, toperator, vekua, decomp, hardy or all)");
    }
    if (options.timing) {
        const auto stop = std::chrono::steady_clock::now();
        report.wall_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
                .count();
    }
    return report;
}

} // namespace bivek
