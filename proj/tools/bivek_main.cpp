// bivek — command-line front end for the bicomplex Vekua–Hardy toolkit.
//
// Every command reads function-spec / problem JSON documents, dispatches into
// the core library, and emits one JSON report to stdout (or --out FILE).
// Exit codes: 0 success, 1 computation error (including failed check suites),
// 2 usage error.  Output assembly is single-threaded and the suites use
// per-case seeded streams, so identical invocations produce identical bytes.

#include "bivek/calculus.hpp"
#include "bivek/decomp.hpp"
#include "bivek/errors.hpp"
#include "bivek/funcspec.hpp"
#include "bivek/hardy.hpp"
#include "bivek/suite.hpp"
#include "bivek/theodorescu.hpp"
#include "bivek/vekua.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bivek::Bicomplex;
using bivek::BiPoly;
using bivek::Complex;
using bivek::Func;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bivek::SchemaError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Func load_func(const std::string& path) {
    return bivek::parse_function_spec(read_file(path));
}

const BiPoly& require_bipoly(const Func& f, const char* command) {
    if (const BiPoly* p = std::get_if<BiPoly>(&f)) return *p;
    throw bivek::SchemaError(std::string(command) +
                             ": input must be a bipoly function spec, not a closure");
}

json bc_json(const Bicomplex& w) { return json::array({w.a, w.b, w.c, w.d}); }

json spec_json(const Func& f) { return json::parse(bivek::function_spec_json(f)); }

json header(const char* command) {
    json doc;
    doc["tool"] = "bivek";
    doc["version"] = kVersion;
    doc["command"] = command;
    return doc;
}

void emit(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw bivek::SchemaError("cannot write file: " + out_path);
        out << text;
    }
}

json suite_report_json(const bivek::SuiteReport& report) {
    json doc;
    doc["suite"] = report.suite;
    doc["seed"] = report.seed;
    doc["cases"] = report.cases_run;
    doc["passed"] = report.passed;
    doc["failed"] = report.failed;
    doc["invariants"] = json::array();
    for (const bivek::InvariantResult& inv : report.invariants) {
        json entry;
        entry["id"] = inv.id;
        entry["detail"] = inv.detail;
        entry["cases"] = inv.cases;
        entry["failed"] = inv.failed;
        entry["worst"] = inv.worst;
        entry["bound"] = inv.bound;
        doc["invariants"].push_back(std::move(entry));
    }
    if (report.wall_ms >= 0.0) doc["wall_ms"] = report.wall_ms;
    return doc;
}

/// Validator for --grid NRxNT.
std::string check_grid_format(const std::string& value) {
    const auto x = value.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= value.size())
        return "expected NRxNT, e.g. 256x512";
    for (std::size_t i = 0; i < value.size(); ++i)
        if (i != x && !std::isdigit(static_cast<unsigned char>(value[i])))
            return "expected NRxNT, e.g. 256x512";
    return {};
}

bivek::QuadratureGrid parse_grid(const std::string& value) {
    const auto x = value.find('x');
    bivek::QuadratureGrid grid;
    grid.n_r = std::stoi(value.substr(0, x));
    grid.n_theta = std::stoi(value.substr(x + 1));
    grid.validate();
    return grid;
}

/// Validator for --test: "1", "cos:M", "sin:M" (M ≥ 1), or "exp:M" (any
/// integer M) for the complex-test pairing.
std::string check_test_format(const std::string& value) {
    if (value == "1") return {};
    const auto colon = value.find(':');
    if (colon == std::string::npos) return "expected 1, cos:M, sin:M or exp:M";
    const std::string head = value.substr(0, colon);
    const std::string tail = value.substr(colon + 1);
    if (head != "cos" && head != "sin" && head != "exp")
        return "expected 1, cos:M, sin:M or exp:M";
    try {
        const int m = std::stoi(tail);
        if (head != "exp" && m < 1) return "cos/sin mode must be >= 1";
    } catch (const std::exception&) {
        return "expected an integer mode after the colon";
    }
    return {};
}

std::vector<double> radii_schedule(int K) { return bivek::default_radii(K); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bivek — computable bicomplex Vekua–Hardy theory on the unit disk"};
    app.require_subcommand(1);
    // Lets --out / --json appear after the subcommand name as well as before.
    app.fallthrough();

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report to FILE instead of stdout");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit JSON (the default and only output format)");

    // ---- tb ----
    auto* tb = app.add_subcommand("tb", "apply the bicomplex Theodorescu transform");
    std::string tb_input;
    tb->add_option("--input", tb_input, "function-spec JSON file")->required();
    std::vector<double> tb_at;
    tb->add_option("--at", tb_at, "evaluation point x,y (omit to emit the transformed spec)")
        ->delimiter(',')
        ->expected(2);
    bool tb_literal = false;
    tb->add_flag("--tb-literal", tb_literal,
                 "use the literal both-kernels transform instead of the component-matched one");

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "solve the Vekua equation dbar(w) = A·w + B·conj(w)");
    std::string solve_problem, solve_phi, solve_method = "similarity", solve_conj;
    solve->add_option("--problem", solve_problem, "problem JSON file")->required();
    solve->add_option("--phi", solve_phi, "holomorphic part, function-spec JSON file")->required();
    solve->add_option("--method", solve_method, "similarity (B = 0 only) or fixed-point")
        ->check(CLI::IsMember({"similarity", "fixed-point"}));
    int solve_max_iter = 50;
    solve->add_option("--max-iter", solve_max_iter, "fixed-point iteration cap")
        ->check(CLI::PositiveNumber);
    double solve_tol = 1e-8;
    solve->add_option("--tol", solve_tol, "fixed-point residual tolerance")
        ->check(CLI::PositiveNumber);
    int solve_cap = 0;
    solve->add_option("--degree-cap", solve_cap, "override the problem's degree cap")
        ->check(CLI::PositiveNumber);
    solve->add_option("--conj", solve_conj, "override the problem's conjugation kind")
        ->check(CLI::IsMember({"bar_ij", "bar_j"}));

    // ---- residual ----
    auto* resid = app.add_subcommand("residual", "measure sup‖dbar(w) − A·w − B·conj(w)‖ at probes");
    std::string resid_problem, resid_w, resid_conj;
    resid->add_option("--problem", resid_problem, "problem JSON file")->required();
    resid->add_option("--w", resid_w, "candidate solution, function-spec JSON file")->required();
    int resid_fd_order = 6;
    resid->add_option("--fd-order", resid_fd_order, "finite-difference order for closures")
        ->check(CLI::IsMember({2, 4, 6}));
    resid->add_option("--conj", resid_conj, "override the problem's conjugation kind")
        ->check(CLI::IsMember({"bar_ij", "bar_j"}));

    // ---- decompose ----
    auto* decomp = app.add_subcommand("decompose", "higher-order decomposition of a polynomial");
    std::string decomp_mode, decomp_input, decomp_problem;
    decomp->add_option("--mode", decomp_mode, "poly, meta or hoiv")
        ->required()
        ->check(CLI::IsMember({"poly", "meta", "hoiv"}));
    int decomp_order = 1;
    decomp->add_option("--order", decomp_order, "decomposition order n")
        ->required()
        ->check(CLI::PositiveNumber);
    decomp->add_option("--input", decomp_input, "function-spec JSON file")->required();
    decomp->add_option("--problem", decomp_problem,
                       "problem JSON file supplying A and B (default: A = B = 0)");
    double decomp_tol = 1e-8;
    decomp->add_option("--tol", decomp_tol, "class-membership tolerance")
        ->check(CLI::PositiveNumber);

    // ---- hardy ----
    auto* hardy = app.add_subcommand("hardy", "circle-integral profile over the radii schedule");
    std::string hardy_input;
    hardy->add_option("--input", hardy_input, "function-spec JSON file")->required();
    double hardy_p = 2.0;
    hardy->add_option("--p", hardy_p, "integral exponent p > 0")->check(CLI::PositiveNumber);
    int hardy_radii = 12;
    hardy->add_option("--radii", hardy_radii, "schedule length K (radii 1 − 2^{−k})")
        ->check(CLI::PositiveNumber);
    int hardy_ntheta = 1024;
    hardy->add_option("--ntheta", hardy_ntheta, "angular sample count")
        ->check(CLI::PositiveNumber);

    // ---- boundary ----
    auto* boundary = app.add_subcommand("boundary", "boundary-gap integrals over the radii schedule");
    std::string boundary_input;
    boundary->add_option("--input", boundary_input, "function-spec JSON file")->required();
    double boundary_p = 2.0;
    boundary->add_option("--p", boundary_p, "integral exponent p > 0")->check(CLI::PositiveNumber);
    int boundary_radii = 12;
    boundary->add_option("--radii", boundary_radii, "schedule length K")
        ->check(CLI::PositiveNumber);
    int boundary_ntheta = 1024;
    boundary->add_option("--ntheta", boundary_ntheta, "angular sample count")
        ->check(CLI::PositiveNumber);

    // ---- pair ----
    auto* pair = app.add_subcommand("pair", "distributional boundary pairing against a trig test");
    std::string pair_input, pair_test;
    pair->add_option("--input", pair_input, "function-spec JSON file")->required();
    pair->add_option("--test", pair_test, "test function: 1, cos:M, sin:M or exp:M")
        ->required()
        ->check(CLI::Validator(check_test_format, "TESTSPEC"));
    int pair_radii = 12;
    pair->add_option("--radii", pair_radii, "schedule length K")->check(CLI::PositiveNumber);
    int pair_ntheta = 1024;
    pair->add_option("--ntheta", pair_ntheta, "angular sample count")->check(CLI::PositiveNumber);

    // ---- growth ----
    auto* growth = app.add_subcommand("growth", "fit sup‖f‖ ≲ C/(1−r)^alpha on the schedule");
    std::string growth_input;
    growth->add_option("--input", growth_input, "function-spec JSON file")->required();

    // ---- check ----
    auto* check = app.add_subcommand("check", "run the theorem-verification suites");
    std::string check_suite = "all";
    check->add_option("--suite", check_suite, "algebra, toperator, vekua, decomp, hardy or all")
        ->check(CLI::IsMember({"algebra", "toperator", "vekua", "decomp", "hardy", "all"}));
    std::uint64_t check_seed = 42;
    check->add_option("--seed", check_seed, "base seed for the per-case random streams");
    double check_tol = 0.0;
    check->add_option("--tol", check_tol,
                      "override the default tolerance of tolerance-type invariants")
        ->check(CLI::PositiveNumber);
    bool check_literal = false;
    check->add_flag("--tb-literal", check_literal,
                    "include the literal-transform right-inverse check (records its "
                    "documented failure)");
    std::string check_grid;
    check->add_option("--grid", check_grid, "oracle quadrature grid NRxNT (default 256x512)")
        ->check(CLI::Validator(check_grid_format, "NRxNT"));
    int check_fd_order = 6;
    check->add_option("--fd-order", check_fd_order, "finite-difference order for residuals")
        ->check(CLI::IsMember({2, 4, 6}));
    int check_cap = 24;
    check->add_option("--degree-cap", check_cap, "fixed-point truncation cap")
        ->check(CLI::PositiveNumber);
    bool check_timing = false;
    check->add_flag("--timing", check_timing, "record wall-clock time per suite (breaks "
                                              "byte-for-byte reproducibility)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tb->parsed()) {
            const Func f = load_func(tb_input);
            const BiPoly& poly = require_bipoly(f, "tb");
            const bivek::TbKind kind =
                tb_literal ? bivek::TbKind::literal : bivek::TbKind::component_matched;
            json doc = header("tb");
            doc["kind"] = tb_literal ? "literal" : "component_matched";
            if (!tb_at.empty()) {
                const Complex z0(tb_at[0], tb_at[1]);
                doc["at"] = json::array({tb_at[0], tb_at[1]});
                doc["value"] = bc_json(bivek::t_bicomplex(poly, z0, kind));
            } else {
                doc["result"] = spec_json(Func{bivek::t_bicomplex_poly(poly, kind)});
            }
            emit(doc, out_path);
            return 0;
        }

        if (solve->parsed()) {
            bivek::VekuaProblem problem = bivek::parse_problem(read_file(solve_problem));
            if (solve->count("--degree-cap")) problem.degree_cap = solve_cap;
            if (!solve_conj.empty()) problem.conj_kind = bivek::conj_from_name(solve_conj);
            problem.validate();
            const Func phi_func = load_func(solve_phi);
            const BiPoly& phi = require_bipoly(phi_func, "solve --phi");
            json doc = header("solve");
            doc["method"] = solve_method;
            const std::vector<Complex> probes = bivek::default_probes();
            if (solve_method == "similarity") {
                if (!problem.B.is_zero())
                    throw bivek::SchemaError(
                        "solve: the similarity method requires B = 0 (use --method fixed-point)");
                const bivek::ClosureFn w = bivek::solve_similarity(problem.A, phi);
                doc["residual_sup"] = bivek::residual(problem, Func{w}, probes);
                doc["probes"] = probes.size();
                doc["solution"] = spec_json(Func{w});
            } else {
                const bivek::SolveReport report =
                    bivek::solve_fixed_point(problem, phi, solve_max_iter, 1e-14, solve_tol);
                doc["residual_sup"] = report.residual_sup;
                doc["probes"] = report.probes.size();
                doc["iterations"] = report.iterations;
                doc["converged"] = report.converged;
                doc["truncated_mass"] = report.truncated_mass;
                doc["solution"] = spec_json(Func{report.solution});
            }
            emit(doc, out_path);
            return 0;
        }

        if (resid->parsed()) {
            bivek::VekuaProblem problem = bivek::parse_problem(read_file(resid_problem));
            if (!resid_conj.empty()) problem.conj_kind = bivek::conj_from_name(resid_conj);
            const Func w = load_func(resid_w);
            const std::vector<Complex> probes = bivek::default_probes();
            json doc = header("residual");
            doc["fd_order"] = resid_fd_order;
            doc["probes"] = probes.size();
            doc["residual_sup"] =
                bivek::residual(problem, w, probes, bivek::FDStencil{resid_fd_order, 1e-3});
            emit(doc, out_path);
            return 0;
        }

        if (decomp->parsed()) {
            const bivek::DecompMode mode = bivek::mode_from_name(decomp_mode);
            const Func input_func = load_func(decomp_input);
            const BiPoly& f = require_bipoly(input_func, "decompose");
            BiPoly A, B;
            if (!decomp_problem.empty()) {
                const bivek::VekuaProblem problem = bivek::parse_problem(read_file(decomp_problem));
                A = problem.A;
                B = problem.B;
            }
            const bivek::DecompResult result =
                bivek::extract(mode, f, decomp_order, A, B, decomp_tol);
            json doc = header("decompose");
            doc["mode"] = decomp_mode;
            doc["order"] = result.order;
            doc["reconstruction_error"] = result.reconstruction_error;
            doc["coefficients"] = json::array();
            for (const BiPoly& phi : result.coefficients)
                doc["coefficients"].push_back(json::parse(bivek::bipoly_spec_json(phi)));
            emit(doc, out_path);
            return 0;
        }

        if (hardy->parsed()) {
            const Func f = load_func(hardy_input);
            const bivek::HardyProfile profile =
                bivek::hardy_profile(f, hardy_p, radii_schedule(hardy_radii), hardy_ntheta);
            json doc = header("hardy");
            doc["p"] = profile.p;
            doc["radii"] = profile.radii;
            doc["circle_values"] = profile.circle_values;
            doc["sup"] = profile.sup_estimate;
            doc["bounded"] = profile.bounded_flag;
            emit(doc, out_path);
            return 0;
        }

        if (boundary->parsed()) {
            const Func f = load_func(boundary_input);
            const std::vector<double> radii = radii_schedule(boundary_radii);
            json doc = header("boundary");
            doc["p"] = boundary_p;
            doc["radii"] = radii;
            json gaps = json::array();
            for (double r : radii)
                gaps.push_back(bivek::boundary_gap(f, boundary_p, r, boundary_ntheta));
            doc["circle_values"] = std::move(gaps);
            emit(doc, out_path);
            return 0;
        }

        if (pair->parsed()) {
            const Func f = load_func(pair_input);
            const std::vector<double> radii = radii_schedule(pair_radii);
            json doc = header("pair");
            doc["test"] = pair_test;
            doc["radii"] = radii;
            if (pair_test.rfind("exp:", 0) == 0) {
                bivek::ComplexTrigPoly test;
                test.modes = {{std::stoi(pair_test.substr(4)), Complex(1.0, 0.0)}};
                doc["limit"] = bc_json(bivek::dist_pair_complex(f, test, radii, pair_ntheta));
            } else {
                bivek::TrigPoly test;
                if (pair_test == "1") {
                    test = bivek::TrigPoly::one();
                } else if (pair_test.rfind("cos:", 0) == 0) {
                    test = bivek::TrigPoly::cosine(std::stoi(pair_test.substr(4)));
                } else {
                    test = bivek::TrigPoly::sine(std::stoi(pair_test.substr(4)));
                }
                json pairings = json::array();
                for (double r : radii)
                    pairings.push_back(bc_json(bivek::pair_value(f, test, r, pair_ntheta)));
                doc["pairings"] = std::move(pairings);
                doc["limit"] = bc_json(bivek::dist_pair(f, test, radii, pair_ntheta));
            }
            emit(doc, out_path);
            return 0;
        }

        if (growth->parsed()) {
            const bivek::GrowthFit fit = bivek::growth_fit(load_func(growth_input));
            json doc = header("growth");
            doc["alpha"] = fit.alpha;
            doc["C"] = fit.C;
            doc["radii"] = fit.radii;
            doc["sup_values"] = fit.sup_values;
            emit(doc, out_path);
            return 0;
        }

        if (check->parsed()) {
            bivek::SuiteOptions options;
            options.seed = check_seed;
            options.tol = check_tol;
            options.tb_literal = check_literal;
            options.timing = check_timing;
            options.fd_order = check_fd_order;
            options.degree_cap = check_cap;
            if (!check_grid.empty()) options.grid = parse_grid(check_grid);

            std::vector<std::string> names;
            if (check_suite == "all")
                names = bivek::suite_names();
            else
                names = {check_suite};

            json doc = header("check");
            doc["suite"] = check_suite;
            doc["seed"] = check_seed;
            int cases = 0, passed = 0, failed = 0;
            json suites = json::array();
            for (const std::string& name : names) {
                const bivek::SuiteReport report = bivek::run_suite(name, options);
                cases += report.cases_run;
                passed += report.passed;
                failed += report.failed;
                suites.push_back(suite_report_json(report));
            }
            doc["cases"] = cases;
            doc["passed"] = passed;
            doc["failed"] = failed;
            doc["suites"] = std::move(suites);
            emit(doc, out_path);
            return failed > 0 ? 1 : 0;
        }
    } catch (const std::exception& e) {
        json doc;
        doc["tool"] = "bivek";
        doc["version"] = kVersion;
        doc["error"] = e.what();
        std::cerr << doc.dump(2) << "\n";
        return 1;
    }

    return 2; // unreachable: require_subcommand guarantees one branch ran
}
