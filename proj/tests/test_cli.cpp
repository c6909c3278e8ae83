#include "bivek/bipoly.hpp"
#include "bivek/funcspec.hpp"
#include "bivek/theodorescu.hpp"
#include "bivek/vekua.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// End-to-end tests of the installed command-line tool.  The binary path
// arrives through the BIVEK_CLI environment variable (set by the ctest
// wrapper); without it every case reports itself as skipped.

using njson = nlohmann::json;
using namespace bivek;

namespace {

std::string cli_path() {
    const char* p = std::getenv("BIVEK_CLI");
    return p ? std::string(p) : std::string();
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
    njson json() const { return njson::parse(out); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd =
        "\"" + cli_path() + "\" " + args + " > clitmp_stdout.json 2> clitmp_stderr.txt";
    RunResult r;
    const int rc = std::system(cmd.c_str());
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp("clitmp_stdout.json");
    r.err = slurp("clitmp_stderr.txt");
    return r;
}

#define REQUIRE_CLI()                                          \
    do {                                                       \
        if (cli_path().empty()) {                              \
            MESSAGE("BIVEK_CLI not set; skipping CLI case");   \
            return;                                            \
        }                                                      \
    } while (0)

} // namespace

TEST_SUITE("cli") {

TEST_CASE("tb transforms a document and evaluates on request") {
    REQUIRE_CLI();
    write_file("clitmp_one.json", bipoly_spec_json(BiPoly::constant(kOne)));

    RunResult at = run_cli("tb --input clitmp_one.json --at 0.3,0.2");
    REQUIRE(at.code == 0);
    njson doc = at.json();
    CHECK(doc["command"] == "tb");
    REQUIRE(doc.contains("value"));
    CHECK(doc["value"][0].get<double>() == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(doc["value"][1].get<double>() == doctest::Approx(0.0));
    CHECK(doc["value"][2].get<double>() == doctest::Approx(-0.2).epsilon(1e-14));
    CHECK(doc["value"][3].get<double>() == doctest::Approx(0.0));

    // Without --at the whole transformed polynomial comes back.
    RunResult whole = run_cli("tb --input clitmp_one.json");
    REQUIRE(whole.code == 0);
    const Func result = parse_function_spec(whole.json()["result"].dump());
    CHECK(std::get<BiPoly>(result) == BiPoly::zhat_star());
}

TEST_CASE("tb literal mode applies both kernels") {
    REQUIRE_CLI();
    const BiPoly zbar = BiPoly::embed(ComplexPoly::term(0, 1, Complex(1.0, 0.0)));
    write_file("clitmp_zbar.json", bipoly_spec_json(zbar));
    RunResult r = run_cli("tb --input clitmp_zbar.json --tb-literal");
    REQUIRE(r.code == 0);
    const Func result = parse_function_spec(r.json()["result"].dump());
    CHECK(std::get<BiPoly>(result) == t_bicomplex_poly(zbar, TbKind::literal));
}

TEST_CASE("decompose recovers basis coefficients") {
    REQUIRE_CLI();
    write_file("clitmp_zstar.json", bipoly_spec_json(BiPoly::zhat_star()));
    RunResult r = run_cli("decompose --mode poly --order 2 --input clitmp_zstar.json");
    REQUIRE(r.code == 0);
    njson doc = r.json();
    CHECK(doc["mode"] == "poly");
    CHECK(doc["order"] == 2);
    CHECK(doc["reconstruction_error"].get<double>() < 1e-12);
    REQUIRE(doc["coefficients"].size() == 2);
    const Func phi0 = parse_function_spec(doc["coefficients"][0].dump());
    const Func phi1 = parse_function_spec(doc["coefficients"][1].dump());
    CHECK(std::get<BiPoly>(phi0).is_zero());
    CHECK(coeff_distance(std::get<BiPoly>(phi1), BiPoly::constant(kOne)) < 1e-12);
}

TEST_CASE("residual measures the trivial equation exactly") {
    REQUIRE_CLI();
    write_file("clitmp_trivial.json", "{}");
    write_file("clitmp_zstar.json", bipoly_spec_json(BiPoly::zhat_star()));
    RunResult r = run_cli(
        "residual --problem clitmp_trivial.json --w clitmp_zstar.json");
    REQUIRE(r.code == 0);
    njson doc = r.json();
    CHECK(doc["residual_sup"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(doc["fd_order"] == 6);
    CHECK(doc["probes"] == 49);
}

TEST_CASE("solve similarity round-trips through the residual command") {
    REQUIRE_CLI();
    VekuaProblem problem;
    problem.A = BiPoly::zhat_monomial(0, 1, Bicomplex{0.2});
    write_file("clitmp_problem.json", problem_json(problem));
    write_file("clitmp_phi.json",
               bipoly_spec_json(BiPoly::zhat() + BiPoly::constant(kOne)));

    RunResult solved = run_cli(
        "solve --problem clitmp_problem.json --phi clitmp_phi.json");
    REQUIRE(solved.code == 0);
    njson doc = solved.json();
    CHECK(doc["residual_sup"].get<double>() < 1e-7);
    REQUIRE(doc.contains("solution"));

    // The emitted solution document must satisfy the equation on re-check.
    write_file("clitmp_solution.json", doc["solution"].dump());
    RunResult again = run_cli(
        "residual --problem clitmp_problem.json --w clitmp_solution.json");
    REQUIRE(again.code == 0);
    CHECK(again.json()["residual_sup"].get<double>() < 1e-6);
}

TEST_CASE("solve fixed point reports its iteration") {
    REQUIRE_CLI();
    write_file("clitmp_trivial.json", "{}");
    write_file("clitmp_phi.json",
               bipoly_spec_json(BiPoly::zhat() + BiPoly::constant(kOne)));
    RunResult r = run_cli(
        "solve --problem clitmp_trivial.json --phi clitmp_phi.json --method fixed-point");
    REQUIRE(r.code == 0);
    njson doc = r.json();
    CHECK(doc["converged"] == true);
    CHECK(doc["iterations"] == 1);
    CHECK(doc["residual_sup"].get<double>() == 0.0);
    CHECK(doc["truncated_mass"].get<double>() == 0.0);
}

TEST_CASE("hardy and boundary emit the shared profile schema") {
    REQUIRE_CLI();
    write_file("clitmp_zembed.json",
               bipoly_spec_json(BiPoly::embed(ComplexPoly::term(1, 0, Complex(1.0, 0.0)))));

    RunResult hardy = run_cli("hardy --input clitmp_zembed.json");
    REQUIRE(hardy.code == 0);
    njson hdoc = hardy.json();
    CHECK(hdoc["p"] == 2.0);
    CHECK(hdoc["bounded"] == true);
    REQUIRE(hdoc["radii"].size() == 12);
    CHECK(hdoc["circle_values"].size() == 12);
    CHECK(hdoc["sup"].get<double>() > 0.0);

    RunResult boundary = run_cli("boundary --input clitmp_zembed.json --p 1");
    REQUIRE(boundary.code == 0);
    njson bdoc = boundary.json();
    REQUIRE(bdoc["circle_values"].size() == bdoc["radii"].size());
    // Gap integrals of the plane coordinate: 2 pi (1 - r), strictly falling.
    for (std::size_t k = 0; k < bdoc["radii"].size(); ++k) {
        const double r = bdoc["radii"][k].get<double>();
        CHECK(bdoc["circle_values"][k].get<double>() ==
              doctest::Approx(2.0 * 3.14159265358979324 * (1.0 - r)).epsilon(1e-9));
    }
}

TEST_CASE("pair computes distributional pairings") {
    REQUIRE_CLI();
    write_file("clitmp_zembed.json",
               bipoly_spec_json(BiPoly::embed(ComplexPoly::term(1, 0, Complex(1.0, 0.0)))));
    RunResult r = run_cli("pair --input clitmp_zembed.json --test cos:1");
    REQUIRE(r.code == 0);
    njson doc = r.json();
    CHECK(doc["limit"][0].get<double>() ==
          doctest::Approx(3.14159265358979324).epsilon(1e-8));
    CHECK(std::abs(doc["limit"][2].get<double>()) < 1e-8);
    REQUIRE(doc.contains("pairings"));
    CHECK(doc["pairings"].size() == doc["radii"].size());

    // Complex tests skip the per-radius pairings and just report the limit.
    write_file("clitmp_zs2.json", bipoly_spec_json(BiPoly::zhat_monomial(0, 2, kOne)));
    RunResult c = run_cli("pair --input clitmp_zs2.json --test exp:2");
    REQUIRE(c.code == 0);
    njson cdoc = c.json();
    CHECK(cdoc["limit"][0].get<double>() ==
          doctest::Approx(2.0 * 3.14159265358979324).epsilon(1e-8));
    CHECK(!cdoc.contains("pairings"));
}

TEST_CASE("growth fits the singularity exponent") {
    REQUIRE_CLI();
    write_file("clitmp_zembed.json",
               bipoly_spec_json(BiPoly::embed(ComplexPoly::term(1, 0, Complex(1.0, 0.0)))));
    RunResult r = run_cli("growth --input clitmp_zembed.json");
    REQUIRE(r.code == 0);
    njson doc = r.json();
    CHECK(doc["alpha"].get<double>() <= 0.05);
    CHECK(doc["C"].get<double>() > 0.0);
    CHECK(doc["sup_values"].size() == doc["radii"].size());
}

TEST_CASE("check runs a suite and reflects failures in the exit code") {
    REQUIRE_CLI();
    RunResult green = run_cli("check --suite algebra --seed 7");
    REQUIRE(green.code == 0);
    njson gdoc = green.json();
    CHECK(gdoc["suite"] == "algebra");
    CHECK(gdoc["seed"] == 7);
    CHECK(gdoc["failed"] == 0);
    REQUIRE(gdoc["suites"].size() == 1);
    CHECK(gdoc["suites"][0]["invariants"].size() > 5);

    // The literal-transform run records exactly its one documented failure.
    RunResult red = run_cli("check --suite toperator --tb-literal --grid 32x64");
    CHECK(red.code == 1);
    njson rdoc = red.json();
    CHECK(rdoc["failed"] == 1);
    bool found = false;
    for (const auto& inv : rdoc["suites"][0]["invariants"])
        if (inv["id"] == "toperator.literal-right-inverse") {
            found = true;
            CHECK(inv["failed"] == 1);
            CHECK(inv["cases"] == 1);
        }
    CHECK(found);
}

TEST_CASE("check reports are byte-identical across runs") {
    REQUIRE_CLI();
    RunResult a = run_cli("check --suite decomp --seed 9 --out clitmp_r1.json");
    RunResult b = run_cli("check --suite decomp --seed 9 --out clitmp_r2.json");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out.empty()); // --out redirects the document away from stdout
    const std::string r1 = slurp("clitmp_r1.json");
    const std::string r2 = slurp("clitmp_r2.json");
    CHECK(!r1.empty());
    CHECK(r1 == r2);
}

TEST_CASE("error handling and exit codes") {
    REQUIRE_CLI();
    // Computation/schema failures exit 1 and describe themselves on stderr.
    write_file("clitmp_bad.json", "{{{");
    RunResult broken = run_cli("tb --input clitmp_bad.json");
    CHECK(broken.code == 1);
    CHECK(broken.err.find("error") != std::string::npos);

    RunResult missing_file = run_cli("tb --input clitmp_missing.json");
    CHECK(missing_file.code == 1);

    // Usage errors exit 2.
    CHECK(run_cli("tb").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("check --grid banana").code == 2);
    CHECK(run_cli("solve --problem x.json").code == 2); // --phi is required
    CHECK(run_cli("decompose --mode wavelet --order 1 --input x.json").code == 2);
}

} // TEST_SUITE("cli")
