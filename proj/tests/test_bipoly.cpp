#include "bivek/bipoly.hpp"
#include "bivek/errors.hpp"
#include "bivek/rng.hpp"

#include "doctest.h"

#include <cmath>

using namespace bivek;

TEST_CASE("complex poly term bookkeeping") {
    ComplexPoly f = ComplexPoly::term(2, 1, Complex(1.0, -2.0));
    CHECK(f.coeff(2, 1) == Complex(1.0, -2.0));
    CHECK(f.coeff(0, 0) == Complex{});
    CHECK(f.degree_z() == 2);
    CHECK(f.degree_zstar() == 1);

    // Adding the negation removes the term entirely.
    f.add_term(2, 1, Complex(-1.0, 2.0));
    CHECK(f.is_zero());
    CHECK(f.degree_z() == -1);
    CHECK(f.degree_zstar() == -1);

    // Duplicate insertions accumulate.
    f.add_term(0, 3, Complex(1.0, 0.0));
    f.add_term(0, 3, Complex(0.5, 0.5));
    CHECK(f.coeff(0, 3) == Complex(1.5, 0.5));
}

TEST_CASE("complex poly evaluation") {
    // f(z) = 2 + z·z* + i·z^2
    ComplexPoly f;
    f.add_term(0, 0, Complex(2.0, 0.0));
    f.add_term(1, 1, Complex(1.0, 0.0));
    f.add_term(2, 0, Complex(0.0, 1.0));

    const Complex z(0.3, -0.4);
    const Complex want = 2.0 + z * std::conj(z) + Complex(0.0, 1.0) * z * z;
    CHECK(std::abs(f.eval(z) - want) < 1e-15);
}

TEST_CASE("complex poly products") {
    // (z + z*)^2 = z^2 + 2 z z* + z*^2
    const ComplexPoly s =
        ComplexPoly::term(1, 0, Complex(1.0, 0.0)) + ComplexPoly::term(0, 1, Complex(1.0, 0.0));
    const ComplexPoly sq = s * s;
    CHECK(sq.coeff(2, 0) == Complex(1.0, 0.0));
    CHECK(sq.coeff(1, 1) == Complex(2.0, 0.0));
    CHECK(sq.coeff(0, 2) == Complex(1.0, 0.0));

    // Scalar multiples and unary minus.
    const ComplexPoly t = Complex(0.0, 2.0) * s;
    CHECK(t.coeff(1, 0) == Complex(0.0, 2.0));
    CHECK((-t).coeff(0, 1) == Complex(0.0, -2.0));

    // Degree cap is enforced, not silently truncated.
    const ComplexPoly high = ComplexPoly::term(3, 0, Complex(1.0, 0.0));
    CHECK_THROWS_AS(ComplexPoly::mul(high, high, 5), DegreeOverflow);
    CHECK(ComplexPoly::mul(high, high, 6).coeff(6, 0) == Complex(1.0, 0.0));
}

TEST_CASE("complex poly formal derivatives") {
    // f = 3 z^2 z* + (1+i) z*^2
    ComplexPoly f;
    f.add_term(2, 1, Complex(3.0, 0.0));
    f.add_term(0, 2, Complex(1.0, 1.0));

    const ComplexPoly fz = f.dz();
    CHECK(fz.coeff(1, 1) == Complex(6.0, 0.0));
    CHECK(fz.degree_zstar() == 1);
    CHECK(fz.coeff(0, 1) == Complex{}); // z*^2 term has no z to differentiate

    const ComplexPoly fzs = f.dzstar();
    CHECK(fzs.coeff(2, 0) == Complex(3.0, 0.0));
    CHECK(fzs.coeff(0, 1) == Complex(2.0, 2.0));
}

TEST_CASE("conj_fn conjugates coefficients and swaps exponents") {
    const ComplexPoly f = ComplexPoly::term(2, 1, Complex(2.0, 1.0));
    const ComplexPoly g = f.conj_fn();
    CHECK(g.coeff(1, 2) == Complex(2.0, -1.0));
    CHECK(g.conj_fn() == f);

    auto gen = rng::make_stream(3, "test.conjfn");
    for (int i = 0; i < 50; ++i) {
        ComplexPoly p;
        for (int t = 0; t < 6; ++t)
            p.add_term(rng::uniform_int(gen, 0, 3), rng::uniform_int(gen, 0, 3),
                       rng::complex_in(gen));
        const Complex z = rng::disk_point(gen);
        CHECK(std::abs(p.conj_fn().eval(z) - std::conj(p.eval(z))) < 1e-13);
    }
}

TEST_CASE("zhat basis dictionary") {
    // zhat has parts (z*, z); zhat* has parts (z, z*).
    const BiPoly zh = BiPoly::zhat();
    CHECK(zh.plus == ComplexPoly::term(0, 1, Complex(1.0, 0.0)));
    CHECK(zh.minus == ComplexPoly::term(1, 0, Complex(1.0, 0.0)));

    const BiPoly zhs = BiPoly::zhat_star();
    CHECK(zhs.plus == ComplexPoly::term(1, 0, Complex(1.0, 0.0)));
    CHECK(zhs.minus == ComplexPoly::term(0, 1, Complex(1.0, 0.0)));

    // zhat evaluates to the bicomplexification x + j·y of z = x + i·y.
    const Complex z(0.3, -0.7);
    CHECK(norm(zh.eval(z) - Bicomplex{0.3, 0.0, -0.7, 0.0}) < 1e-15);
    // zhat* evaluates to x - j·y.
    CHECK(norm(zhs.eval(z) - Bicomplex{0.3, 0.0, 0.7, 0.0}) < 1e-15);

    // zhat_monomial(2, 1, c): plus = c+·z^1·z*^2, minus = c-·z^2·z*^1.
    const Bicomplex c{1.0, 2.0, 3.0, 4.0};
    const BiPoly m = BiPoly::zhat_monomial(2, 1, c);
    CHECK(m.plus == ComplexPoly::term(1, 2, c.plus()));
    CHECK(m.minus == ComplexPoly::term(2, 1, c.minus()));

    // Consistency with explicit powers: zhat^2·zhat* == zhat_monomial(2,1,1).
    const BiPoly prod = mul(mul(zh, zh), zhs);
    CHECK(prod == BiPoly::zhat_monomial(2, 1, kOne));
}

TEST_CASE("embedding complex functions") {
    const ComplexPoly p = ComplexPoly::term(1, 0, Complex(1.0, 0.0));
    const BiPoly f = BiPoly::embed(p);
    CHECK(f.plus == f.minus);
    // Values land in the complex plane C ⊂ B: join(v, v) = v embedded.
    const Complex z(0.2, 0.5);
    CHECK(norm(f.eval(z) - Bicomplex{0.2, 0.5, 0.0, 0.0}) < 1e-15);
}

TEST_CASE("bicomplex scaling acts componentwise") {
    const BiPoly f = BiPoly::zhat_star();
    // Scaling by p+ kills the minus part.
    const BiPoly g = scale(kPPlus, f);
    CHECK(g.minus.is_zero());
    CHECK(g.plus == f.plus);

    auto gen = rng::make_stream(5, "test.scale");
    for (int i = 0; i < 30; ++i) {
        const Bicomplex lam = rng::bicomplex_in(gen, 2.0);
        const BiPoly h = rng::bipoly_in(gen, 2, 2);
        const Complex z = rng::disk_point(gen);
        CHECK(norm(scale(lam, h).eval(z) - mul(lam, h.eval(z))) < 1e-13);
    }
}

TEST_CASE("bipoly conjugations") {
    const Bicomplex c{1.0, 2.0, 3.0, 4.0};
    const BiPoly f = BiPoly::zhat_monomial(2, 1, c) + BiPoly::constant(kJ);

    auto gen = rng::make_stream(9, "test.bipolyconj");
    for (ConjKind k : {ConjKind::bar_j, ConjKind::bar_i, ConjKind::bar_ij}) {
        const BiPoly g = conj(f, k);
        CHECK(conj(g, k) == f); // involution, exact
        for (int i = 0; i < 20; ++i) {
            const Complex z = rng::disk_point(gen);
            // Pointwise law: conj(f)(z) == conj(f(z)).
            CHECK(norm(g.eval(z) - conj(f.eval(z), k)) < 1e-13);
        }
    }

    // bar_j swaps the parts; bar_ij conjugates within each part.
    CHECK(conj(f, ConjKind::bar_j).plus == f.minus);
    CHECK(conj(f, ConjKind::bar_ij).plus == f.plus.conj_fn());
}

TEST_CASE("holomorphy predicate") {
    CHECK(holomorphy_check(BiPoly::zhat()));
    CHECK(holomorphy_check(BiPoly::zhat_monomial(3, 0, kJ)));
    CHECK(holomorphy_check(BiPoly::constant(kIJ)));
    CHECK(!holomorphy_check(BiPoly::zhat_star()));
    CHECK(!holomorphy_check(BiPoly::zhat_monomial(1, 1, kOne)));
    // The plane embedding of z is NOT holomorphic in this calculus:
    // its plus part is z itself, which dbar (= d/dz on plus) does not kill.
    CHECK(!holomorphy_check(BiPoly::embed(ComplexPoly::term(1, 0, Complex(1.0, 0.0)))));
}

TEST_CASE("truncate reports dropped mass") {
    BiPoly f = BiPoly::zhat_monomial(0, 1, Bicomplex{1.0}) +
               BiPoly::zhat_monomial(5, 0, Bicomplex{0.5}) +
               BiPoly::zhat_monomial(0, 6, Bicomplex{0.25});
    // Terms of bidegree > 2 in either variable are dropped; both the (5,0)
    // and (0,6) coefficients embed to both parts, so the mass counts twice.
    const double dropped = truncate(f, 2);
    CHECK(dropped == doctest::Approx(2.0 * 0.5 + 2.0 * 0.25));
    CHECK(f == BiPoly::zhat_monomial(0, 1, Bicomplex{1.0}));
    CHECK(truncate(f, 2) == 0.0); // idempotent once within cap
}

TEST_CASE("coefficient distance") {
    const BiPoly f = BiPoly::zhat_star();
    BiPoly g = f + BiPoly::zhat_monomial(2, 0, Bicomplex{0.0, 0.0, 0.0, 1e-3});
    CHECK(coeff_distance(f, f) == 0.0);
    CHECK(coeff_distance(f, g) == doctest::Approx(1e-3));

    const ComplexPoly p = ComplexPoly::term(1, 1, Complex(2.0, 0.0));
    const ComplexPoly q = ComplexPoly::term(1, 1, Complex(2.0, 0.5));
    CHECK(coeff_distance(p, q) == doctest::Approx(0.5));
}

TEST_CASE("eval is a ring homomorphism") {
    auto gen = rng::make_stream(13, "test.evalhom");
    for (int i = 0; i < 50; ++i) {
        const BiPoly f = rng::bipoly_in(gen, 3, 3);
        const BiPoly g = rng::bipoly_in(gen, 3, 3);
        const Complex z = rng::disk_point(gen);
        CHECK(norm((f + g).eval(z) - (f.eval(z) + g.eval(z))) < 1e-12);
        CHECK(norm(mul(f, g).eval(z) - mul(f.eval(z), g.eval(z))) < 1e-11);
    }
}
