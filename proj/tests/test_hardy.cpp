#include "bivek/hardy.hpp"

#include "bivek/bipoly.hpp"
#include "bivek/errors.hpp"
#include "bivek/rng.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace bivek;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("circle integrals of exactly integrable profiles") {
    const Func fz = BiPoly::embed(ComplexPoly::term(1, 0, Complex(1.0, 0.0)));
    for (double r : {0.3, 0.7, 0.95})
        for (double p : {0.5, 1.0, 2.0})
            CHECK(circle_lp(fz, r, p) ==
                  doctest::Approx(2.0 * kPi * std::pow(r, p)).epsilon(1e-12));

    const Bicomplex c{1.0, -1.0, 0.5, 2.0};
    CHECK(circle_lp(BiPoly::constant(c), 0.5, 2.0) ==
          doctest::Approx(2.0 * kPi * norm(c) * norm(c)).epsilon(1e-12));

    // Separated components: f+ = z^2, f- = z^3 gives the mixed-power value.
    const BiPoly sep{ComplexPoly::term(2, 0, Complex(1.0, 0.0)),
                     ComplexPoly::term(3, 0, Complex(1.0, 0.0))};
    const double r = 0.8;
    CHECK(circle_lp(sep, r, 2.0) ==
          doctest::Approx(kPi * (std::pow(r, 4) + std::pow(r, 6))).epsilon(1e-12));
}

TEST_CASE("circle integral validation") {
    const Func f = BiPoly::zhat();
    CHECK_THROWS_AS(circle_lp(f, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(circle_lp(f, 0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(circle_lp(f, -0.5, 2.0), std::domain_error);
    CHECK_THROWS_AS(circle_lp(f, 0.5, 0.0), SchemaError);
    CHECK_THROWS_AS(circle_lp(f, 0.5, 2.0, 32), SchemaError);
}

TEST_CASE("componentwise circle integrals obey the sandwich") {
    auto gen = rng::make_stream(91, "test.components");
    for (int i = 0; i < 10; ++i) {
        const BiPoly f = rng::bipoly_in(gen, 3, 3);
        const double r = 0.3 + 0.6 * rng::uniform(gen);
        for (double p : {0.5, 1.0, 2.0}) {
            const ComponentLp comp = circle_lp_components(f, r, p, 512);
            const double full = circle_lp(f, r, p, 512);
            const double lo = std::pow(2.0, -p / 2.0) * std::max(comp.plus, comp.minus);
            const double hi = std::pow(2.0, -p / 2.0) * comp.sum;
            const double slack = 1e-12 * (1.0 + hi);
            // Pointwise norm sandwich, integrated over one shared grid.
            CHECK(full >= lo - slack);
            CHECK(full <= hi + slack);
        }
    }
}

TEST_CASE("radius schedule") {
    const auto radii = default_radii();
    REQUIRE(radii.size() == 12);
    CHECK(radii.front() == doctest::Approx(0.5));
    CHECK(radii.back() == doctest::Approx(1.0 - std::pow(2.0, -12)));
    for (std::size_t k = 1; k < radii.size(); ++k) CHECK(radii[k] > radii[k - 1]);
    CHECK_THROWS_AS(default_radii(0), SchemaError);
}

TEST_CASE("hardy profiles separate bounded from unbounded") {
    // Any polynomial has uniformly bounded circle integrals.
    const HardyProfile poly = hardy_profile(BiPoly::zhat_monomial(2, 1, kOne), 2.0);
    CHECK(poly.bounded_flag);
    CHECK(poly.sup_estimate > 0.0);

    // 1/(1−z) lies outside H²: the profile grows like 1/(1−r²), and the
    // first five schedule radii match that law before trapezoid aliasing
    // (≈ 2r^N relative) could matter at the default grid.
    const Func pole = make_pow_one_minus_z(1.0);
    const HardyProfile grow = hardy_profile(pole, 2.0);
    CHECK(!grow.bounded_flag);
    for (std::size_t k = 0; k < 5; ++k) {
        const double r = grow.radii[k];
        CHECK(grow.circle_values[k] ==
              doctest::Approx(2.0 * kPi / (1.0 - r * r)).epsilon(1e-9));
    }

    const HardyProfile zero = hardy_profile(BiPoly::zero(), 2.0);
    CHECK(zero.sup_estimate == 0.0);
    CHECK(zero.bounded_flag);
}

TEST_CASE("boundary gap of the plane coordinate is exact") {
    const Func fz = BiPoly::embed(ComplexPoly::term(1, 0, Complex(1.0, 0.0)));
    for (double r : {0.9, 0.95, 0.99})
        for (double p : {0.5, 1.0, 2.0})
            CHECK(boundary_gap(fz, p, r) ==
                  doctest::Approx(2.0 * kPi * std::pow(1.0 - r, p)).epsilon(1e-10));

    CHECK(boundary_gap(BiPoly::constant(kJ), 2.0, 0.9) == doctest::Approx(0.0));

    // The gap shrinks monotonically along the schedule for polynomials.
    auto gen = rng::make_stream(93, "test.gap");
    for (int i = 0; i < 5; ++i) {
        const BiPoly f = rng::bipoly_in(gen, 2, 2);
        double prev = boundary_gap(f, 2.0, 0.9);
        for (double r : {0.95, 0.975, 0.99}) {
            const double g = boundary_gap(f, 2.0, r);
            CHECK(g <= prev * (1.0 + 1e-9));
            prev = g;
        }
    }
}

TEST_CASE("stolz paths validate their geometry") {
    const StolzPath path = make_stolz_path(0.3, 0.5, 8);
    REQUIRE(path.points.size() == 8);
    path.validate();
    CHECK(path.theta0 == 0.3);

    CHECK_THROWS_AS(make_stolz_path(0.0, 2.0, 8), PathInvalid); // aperture >= pi/2
    CHECK_THROWS_AS(make_stolz_path(0.0, 0.3, 8, 0.4), PathInvalid); // tilt > aperture
    CHECK_THROWS_AS(make_stolz_path(0.0, 0.5, 3), PathInvalid); // too short
    CHECK_THROWS_AS(make_stolz_path(0.0, 0.5, 8, 0.0, -0.1), PathInvalid); // bad s0
    CHECK_THROWS_AS(make_stolz_path(0.0, 0.5, 8, 0.0, 3.0), PathInvalid);

    StolzPath outside = make_stolz_path(0.0, 0.5, 8);
    outside.points[0] = Complex(1.01, 0.0);
    CHECK_THROWS_AS(outside.validate(), PathInvalid);

    StolzPath off_cone = make_stolz_path(0.0, 0.5, 8);
    off_cone.points[3] = Complex(0.0, 0.99); // far outside the cone at 1
    CHECK_THROWS_AS(off_cone.validate(), PathInvalid);

    StolzPath stuck = make_stolz_path(0.0, 0.5, 8);
    stuck.points[4] = stuck.points[3]; // no longer strictly approaching
    CHECK_THROWS_AS(stuck.validate(), PathInvalid);
}

TEST_CASE("stolz probes recover boundary values") {
    // The plane coordinate z: every step of the dyadic path is exact in
    // binary, the extrapolants are identically 1.
    const Func fz = BiPoly::embed(ComplexPoly::term(1, 0, Complex(1.0, 0.0)));
    const StolzProbe probe = stolz_probe(fz, make_stolz_path(0.0, 0.5, 12));
    CHECK(norm(probe.limit - Bicomplex{1.0}) < 1e-14);
    CHECK(probe.oscillation < 1e-14);

    // zhat* tends to join(e^{i theta0}, e^{-i theta0}).
    const double theta0 = 0.7;
    const StolzProbe ps = stolz_probe(BiPoly::zhat_star(), make_stolz_path(theta0, 0.5, 12));
    const Bicomplex want = join(std::polar(1.0, theta0), std::polar(1.0, -theta0));
    CHECK(norm(ps.limit - want) < 1e-9);

    // Nontangential independence: two different approach angles meet at the
    // same limit for polynomial data.
    auto gen = rng::make_stream(95, "test.stolz");
    for (int i = 0; i < 5; ++i) {
        const BiPoly f = rng::bipoly_in(gen, 3, 3);
        const double t0 = rng::uniform(gen, 0.0, 2.0 * kPi);
        const StolzProbe a = stolz_probe(f, make_stolz_path(t0, kPi / 6.0, 12, kPi / 12.0));
        const StolzProbe b = stolz_probe(f, make_stolz_path(t0, kPi / 3.0, 12, -kPi / 4.0));
        CHECK(norm(a.limit - b.limit) < 1e-8);
        // The oscillation spans all extrapolants, including the early ones
        // whose cubic remainder has not yet decayed; ~1e-7 for this family.
        CHECK(a.oscillation < 1e-5);
    }
}

TEST_CASE("trigonometric test functions") {
    CHECK(TrigPoly::one().eval(1.3) == 1.0);
    CHECK(TrigPoly::cosine(2).eval(0.4) == doctest::Approx(std::cos(0.8)));
    CHECK(TrigPoly::sine(3).eval(0.4) == doctest::Approx(std::sin(1.2)));
    CHECK(TrigPoly::cosine(2).degree() == 2);
    CHECK(TrigPoly::one().degree() == 0);
    CHECK_THROWS_AS(TrigPoly::cosine(0), SchemaError);
    CHECK_THROWS_AS(TrigPoly::sine(-1), SchemaError);
}

TEST_CASE("single-radius pairings") {
    const Func fz = BiPoly::embed(ComplexPoly::term(1, 0, Complex(1.0, 0.0)));
    for (double r : {0.5, 0.9})
        CHECK(norm(pair_value(fz, TrigPoly::cosine(1), r) - Bicomplex{kPi * r}) < 1e-12);
    // Orthogonality: z against the constant test integrates to zero.
    CHECK(norm(pair_value(fz, TrigPoly::one(), 0.9)) < 1e-12);
}

TEST_CASE("distributional pairings extrapolate to the boundary") {
    const Func fz = BiPoly::embed(ComplexPoly::term(1, 0, Complex(1.0, 0.0)));
    CHECK(norm(dist_pair(fz, TrigPoly::cosine(1)) - Bicomplex{kPi}) < 1e-8);
    CHECK(norm(dist_pair(fz, TrigPoly::one())) < 1e-8);

    const Bicomplex c{0.3, -0.2, 1.0, 0.5};
    CHECK(norm(dist_pair(BiPoly::constant(c), TrigPoly::one()) - 2.0 * kPi * c) < 1e-8);

    CHECK_THROWS_AS(dist_pair(fz, TrigPoly::one(), {0.5, 0.6, 0.7}), SchemaError);
}

TEST_CASE("complex-test pairings") {
    // zhat*^2 against e^{2i theta}: both components pair to 2 pi.
    const BiPoly f = BiPoly::zhat_monomial(0, 2, kOne);
    const ComplexTrigPoly test{{{2, Complex(1.0, 0.0)}}};
    CHECK(norm(dist_pair_complex(f, test) - Bicomplex{2.0 * kPi}) < 1e-8);

    // For real tests the complex path must agree with the real one.
    auto gen = rng::make_stream(97, "test.pairc");
    const BiPoly g = rng::bipoly_in(gen, 2, 2);
    const ComplexTrigPoly cos2{{{2, Complex(0.5, 0.0)}, {-2, Complex(0.5, 0.0)}}};
    CHECK(norm(dist_pair_complex(g, cos2) - dist_pair(g, TrigPoly::cosine(2))) < 1e-8);
}

TEST_CASE("pairing instability is reported, not averaged away") {
    // Magnitude exp(1/(1−|z|)) overflows along the schedule, so the
    // extrapolants go non-finite and the guard must fire.
    ClosureFn wild;
    wild.eval = [](Complex z) {
        const double t = 1.0 / (1.0 - std::abs(z));
        const double mag = std::exp(t);
        return Bicomplex::from_planes(Complex(mag * std::cos(t), mag * std::sin(t)));
    };
    wild.descriptor = "essential-growth";
    CHECK_THROWS_AS(dist_pair(Func{wild}, TrigPoly::one()), ExtrapolationUnstable);
}

TEST_CASE("growth exponents are recovered") {
    for (double beta : {0.5, 1.0, 2.0}) {
        const GrowthFit fit = growth_fit(make_pow_one_minus_z(beta));
        CHECK(fit.alpha == doctest::Approx(beta).epsilon(0.05));
        CHECK(fit.C > 0.0);
        REQUIRE(fit.radii.size() == fit.sup_values.size());
    }

    // Polynomials have no growth: alpha clamps to (near) zero.
    auto gen = rng::make_stream(99, "test.growth");
    const GrowthFit flat = growth_fit(rng::bipoly_in(gen, 2, 2));
    CHECK(flat.alpha <= 0.05);
}
