#include "bivek/funcspec.hpp"

#include "bivek/closure.hpp"
#include "bivek/errors.hpp"
#include "bivek/rng.hpp"
#include "bivek/vekua.hpp"

#include "doctest.h"

#include <cmath>
#include <variant>

using namespace bivek;

TEST_CASE("bipoly documents parse to the expected polynomial") {
    const std::string doc = R"({"kind":"bipoly","terms":[
        {"mz":1,"mzs":0,"coeff":[1,0,0,0]}]})";
    const Func f = parse_function_spec(doc);
    REQUIRE(std::holds_alternative<BiPoly>(f));
    CHECK(std::get<BiPoly>(f) == BiPoly::zhat());

    // Duplicate exponent pairs accumulate.
    const std::string dup = R"({"kind":"bipoly","terms":[
        {"mz":0,"mzs":0,"coeff":[1,0,0,0]},
        {"mz":0,"mzs":0,"coeff":[2,0,0.5,0]}]})";
    CHECK(std::get<BiPoly>(parse_function_spec(dup)) ==
          BiPoly::constant(Bicomplex{3.0, 0.0, 0.5, 0.0}));

    // Empty term list (or no list at all) is the zero function.
    CHECK(std::get<BiPoly>(parse_function_spec(R"({"kind":"bipoly","terms":[]})")).is_zero());
    CHECK(std::get<BiPoly>(parse_function_spec(R"({"kind":"bipoly"})")).is_zero());
}

TEST_CASE("bipoly documents round-trip exactly") {
    auto gen = rng::make_stream(21, "test.spec-roundtrip");
    for (int i = 0; i < 25; ++i) {
        const BiPoly f = rng::bipoly_in(gen, 4, 4);
        const Func back = parse_function_spec(bipoly_spec_json(f));
        REQUIRE(std::holds_alternative<BiPoly>(back));
        // JSON serialization of doubles is shortest-round-trip, so equality
        // is exact, not approximate.
        CHECK(std::get<BiPoly>(back) == f);
    }
}

TEST_CASE("malformed documents raise schema errors") {
    CHECK_THROWS_AS(parse_function_spec("{"), SchemaError);
    CHECK_THROWS_AS(parse_function_spec("[1,2,3]"), SchemaError);
    CHECK_THROWS_AS(parse_function_spec(R"({"kind":"spline"})"), SchemaError);
    CHECK_THROWS_AS(parse_function_spec(R"({"terms":[]})"), SchemaError);
    // Negative degrees.
    CHECK_THROWS_AS(parse_function_spec(
                        R"({"kind":"bipoly","terms":[{"mz":-1,"mzs":0,"coeff":[1,0,0,0]}]})"),
                    SchemaError);
    // Non-integer degree.
    CHECK_THROWS_AS(parse_function_spec(
                        R"({"kind":"bipoly","terms":[{"mz":1.5,"mzs":0,"coeff":[1,0,0,0]}]})"),
                    SchemaError);
    // Wrong coefficient arity.
    CHECK_THROWS_AS(parse_function_spec(
                        R"({"kind":"bipoly","terms":[{"mz":0,"mzs":0,"coeff":[1,0,0]}]})"),
                    SchemaError);
    // Missing term fields.
    CHECK_THROWS_AS(parse_function_spec(R"({"kind":"bipoly","terms":[{"mz":0}]})"),
                    SchemaError);
    // Unknown closure name / missing closure params.
    CHECK_THROWS_AS(parse_function_spec(R"({"kind":"closure","name":"airy"})"), SchemaError);
    CHECK_THROWS_AS(parse_function_spec(R"({"kind":"closure","name":"pow_one_minus_z"})"),
                    SchemaError);
    CHECK_THROWS_AS(parse_function_spec(R"({"kind":"closure","name":"exp_of_bipoly"})"),
                    SchemaError);
    // Term degree over the hard cap.
    CHECK_THROWS_AS(parse_function_spec(
                        R"({"kind":"bipoly","terms":[{"mz":65,"mzs":0,"coeff":[1,0,0,0]}]})"),
                    DegreeOverflow);
}

TEST_CASE("builtin closures round-trip through their documents") {
    auto gen = rng::make_stream(23, "test.closure-roundtrip");
    const auto agree = [&](const Func& a, const Func& b) {
        for (int i = 0; i < 20; ++i) {
            const Complex z = rng::disk_point(gen);
            CHECK(norm(evaluate(a, z) - evaluate(b, z)) < 1e-12);
        }
    };

    const Func pow = make_pow_one_minus_z(0.75);
    agree(pow, parse_function_spec(function_spec_json(pow)));

    const BiPoly g = rng::bipoly_in(gen, 2, 2, 0.5);
    const Func exp_g = make_exp_of_bipoly(g);
    agree(exp_g, parse_function_spec(function_spec_json(exp_g)));

    // The similarity solver emits the serializable product form, so its
    // output survives a save/load cycle and can be re-checked offline.
    const BiPoly A = rng::bipoly_in(gen, 1, 1, 0.3);
    const BiPoly phi = rng::holomorphic_in(gen, 2);
    const ClosureFn w = solve_similarity(A, phi);
    CHECK(!w.spec_json.empty());
    agree(w, parse_function_spec(function_spec_json(w)));
}

TEST_CASE("ad-hoc closures have no document form") {
    ClosureFn adhoc;
    adhoc.eval = [](Complex z) { return Bicomplex{std::abs(z)}; };
    adhoc.descriptor = "adhoc-modulus";
    CHECK_THROWS_AS(function_spec_json(Func{adhoc}), SchemaError);
    // But they still evaluate through the uniform interface.
    CHECK(norm(evaluate(Func{adhoc}, Complex(0.6, 0.0)) - Bicomplex{0.6}) < 1e-15);
}

TEST_CASE("descriptor names both representations") {
    CHECK(descriptor(Func{BiPoly::zhat()}) == "bipoly");
    CHECK(descriptor(Func{make_pow_one_minus_z(0.5)}).find("pow_one_minus_z") !=
          std::string::npos);
}

TEST_CASE("conjugation names") {
    CHECK(conj_name(ConjKind::bar_ij) == "bar_ij");
    CHECK(conj_name(ConjKind::bar_j) == "bar_j");
    CHECK(conj_name(ConjKind::bar_i) == "bar_i");
    for (ConjKind k : {ConjKind::bar_j, ConjKind::bar_i, ConjKind::bar_ij})
        CHECK(conj_from_name(conj_name(k)) == k);
    CHECK_THROWS_AS(conj_from_name("bar_k"), SchemaError);
}

TEST_CASE("problem documents") {
    const std::string doc = R"({
        "A": {"kind":"bipoly","terms":[{"mz":0,"mzs":1,"coeff":[0.5,0,0,0]}]},
        "B": {"kind":"bipoly","terms":[]},
        "conj": "bar_j",
        "degree_cap": 12})";
    const VekuaProblem p = parse_problem(doc);
    CHECK(p.A == BiPoly::zhat_monomial(0, 1, Bicomplex{0.5}));
    CHECK(p.B.is_zero());
    CHECK(p.conj_kind == ConjKind::bar_j);
    CHECK(p.degree_cap == 12);

    // Defaults: A = B = 0, bar_ij, cap 24.
    const VekuaProblem q = parse_problem("{}");
    CHECK(q.A.is_zero());
    CHECK(q.B.is_zero());
    CHECK(q.conj_kind == ConjKind::bar_ij);
    CHECK(q.degree_cap == 24);

    // Round-trip through problem_json.
    const VekuaProblem r = parse_problem(problem_json(p));
    CHECK(r.A == p.A);
    CHECK(r.B == p.B);
    CHECK(r.conj_kind == p.conj_kind);
    CHECK(r.degree_cap == p.degree_cap);
}

TEST_CASE("problem documents reject invalid fields") {
    // bar_i never decouples the conjugate term; it is not a valid convention here.
    CHECK_THROWS_AS(parse_problem(R"({"conj":"bar_i"})"), SchemaError);
    CHECK_THROWS_AS(parse_problem(R"({"conj":"bar_q"})"), SchemaError);
    CHECK_THROWS_AS(parse_problem(R"({"degree_cap":0})"), SchemaError);
    CHECK_THROWS_AS(parse_problem(R"({"degree_cap":2.5})"), SchemaError);
    // Closure coefficients are rejected.
    CHECK_THROWS_AS(
        parse_problem(R"({"A":{"kind":"closure","name":"pow_one_minus_z","params":{"beta":1}}})"),
        SchemaError);
    // Cap below the coefficient bidegree fails validation.
    CHECK_THROWS_AS(parse_problem(R"({
        "A": {"kind":"bipoly","terms":[{"mz":3,"mzs":0,"coeff":[1,0,0,0]}]},
        "degree_cap": 2})"),
                    DegreeOverflow);
}
