#include "bivek/suite.hpp"

#include "bivek/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <string>

using namespace bivek;

namespace {

const InvariantResult* find_invariant(const SuiteReport& report, const std::string& id) {
    for (const auto& inv : report.invariants)
        if (inv.id == id) return &inv;
    return nullptr;
}

bool reports_equal(const SuiteReport& a, const SuiteReport& b) {
    if (a.suite != b.suite || a.seed != b.seed || a.cases_run != b.cases_run ||
        a.passed != b.passed || a.failed != b.failed ||
        a.invariants.size() != b.invariants.size())
        return false;
    for (std::size_t k = 0; k < a.invariants.size(); ++k) {
        const auto& x = a.invariants[k];
        const auto& y = b.invariants[k];
        if (x.id != y.id || x.cases != y.cases || x.failed != y.failed ||
            x.worst != y.worst || x.bound != y.bound)
            return false;
    }
    return true;
}

SuiteOptions small_grid_options() {
    SuiteOptions opts;
    opts.grid = QuadratureGrid{64, 128};
    return opts;
}

} // namespace

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    REQUIRE(names.size() == 5);
    CHECK(names[0] == "algebra");
    CHECK(names[4] == "hardy");
    CHECK_THROWS_AS(run_suite("calculus"), SchemaError);
    CHECK_THROWS_AS(run_suite(""), SchemaError);
}

TEST_CASE("algebra suite is green and deterministic") {
    const SuiteReport a = run_suite("algebra");
    CHECK(a.failed == 0);
    CHECK(a.passed == a.cases_run);
    CHECK(a.cases_run > 100000); // the reconstruction loop alone draws 1e5 pairs
    CHECK(a.wall_ms == -1.0);    // timing off by default

    const SuiteReport b = run_suite("algebra");
    CHECK(reports_equal(a, b));

    // Every invariant carries a non-empty id and detail.
    for (const auto& inv : a.invariants) {
        CHECK(!inv.id.empty());
        CHECK(!inv.detail.empty());
        CHECK(inv.cases > 0);
    }
}

TEST_CASE("operator suite is green on a reduced oracle grid") {
    const SuiteReport r = run_suite("toperator", small_grid_options());
    CHECK(r.failed == 0);
    const InvariantResult* oracle = find_invariant(r, "toperator.oracle-agreement");
    REQUIRE(oracle != nullptr);
    CHECK(oracle->worst <= 1e-6);
    // The literal-transform invariant only appears when requested.
    CHECK(find_invariant(r, "toperator.literal-right-inverse") == nullptr);
}

TEST_CASE("literal transform mode records its documented failure") {
    SuiteOptions opts = small_grid_options();
    opts.tb_literal = true;
    const SuiteReport r = run_suite("toperator", opts);
    const InvariantResult* lit = find_invariant(r, "toperator.literal-right-inverse");
    REQUIRE(lit != nullptr);
    CHECK(lit->cases == 1);
    CHECK(lit->failed == 1);
    CHECK(lit->worst == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.failed >= 1);
}

TEST_CASE("vekua, decomp and hardy suites are green") {
    for (const char* name : {"vekua", "decomp", "hardy"}) {
        const SuiteReport r = run_suite(name);
        INFO("suite ", name);
        CHECK(r.failed == 0);
        CHECK(r.cases_run > 0);
    }
}

TEST_CASE("the combined suite concatenates in canonical order") {
    const SuiteOptions opts = small_grid_options();
    const SuiteReport all = run_suite("all", opts);
    CHECK(all.suite == "all");
    CHECK(all.failed == 0);

    // Counts aggregate over the concatenated invariants.
    int cases = 0, failed = 0;
    for (const auto& inv : all.invariants) {
        cases += inv.cases;
        failed += inv.failed;
    }
    CHECK(all.cases_run == cases);
    CHECK(all.failed == failed);
    CHECK(all.passed == cases - failed);

    CHECK(all.invariants.front().id.rfind("algebra.", 0) == 0);
    CHECK(all.invariants.back().id.rfind("hardy.", 0) == 0);
    // Section order follows the registry: consume prefixes in registry order
    // and expect to land exactly at the end.
    std::size_t pos = 0;
    for (const auto& name : suite_names()) {
        const std::string prefix = name + ".";
        while (pos < all.invariants.size() &&
               all.invariants[pos].id.rfind(prefix, 0) == 0)
            ++pos;
    }
    CHECK(pos == all.invariants.size());

    // Per-case streams are keyed by (seed, label, index), so a section inside
    // "all" is identical to the standalone suite run.
    const SuiteReport algebra = run_suite("algebra", opts);
    REQUIRE(algebra.invariants.size() <= all.invariants.size());
    for (std::size_t k = 0; k < algebra.invariants.size(); ++k) {
        CHECK(all.invariants[k].id == algebra.invariants[k].id);
        CHECK(all.invariants[k].worst == algebra.invariants[k].worst);
        CHECK(all.invariants[k].failed == algebra.invariants[k].failed);
    }
}

TEST_CASE("tolerance override tightens only tolerance-type bounds") {
    SuiteOptions strangle;
    strangle.tol = 1e-30; // far below double rounding: tolerance checks must fail
    const SuiteReport r = run_suite("algebra", strangle);
    CHECK(r.failed > 0);

    // Exact identities keep bound 0 and still pass.
    const InvariantResult* exact = find_invariant(r, "algebra.mul-commutativity");
    REQUIRE(exact != nullptr);
    CHECK(exact->bound == 0.0);
    CHECK(exact->failed == 0);

    const InvariantResult* loose = find_invariant(r, "algebra.idempotent-reconstruction");
    REQUIRE(loose != nullptr);
    CHECK(loose->bound == 1e-30);
}

TEST_CASE("different seeds draw different cases") {
    SuiteOptions other;
    other.seed = 9;
    const SuiteReport a = run_suite("decomp");
    const SuiteReport b = run_suite("decomp", other);
    CHECK(a.seed != b.seed);
    // Same structure, different randomness: at least one tolerance-type
    // invariant must observe a different worst metric.
    REQUIRE(a.invariants.size() == b.invariants.size());
    bool any_difference = false;
    for (std::size_t k = 0; k < a.invariants.size(); ++k)
        if (a.invariants[k].worst != b.invariants[k].worst) any_difference = true;
    CHECK(any_difference);
}
