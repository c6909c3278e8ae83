#ifndef BIVEK_SUITE_HPP
#define BIVEK_SUITE_HPP

#include "bivek/theodorescu.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bivek {

/**
 * @brief One verified invariant: how many cases ran, the worst observed
 * metric, and the bound it was judged against.
 *
 * id is a stable dotted name ("algebra.norm-sandwich"); detail states the
 * property in plain text so reports are self-describing.  For exact
 * identities bound is 0 and the metric is an exact coefficient distance.
 */
struct InvariantResult {
    std::string id;
    std::string detail;
    int cases = 0;
    int failed = 0;
    double worst = 0.0;
    double bound = 0.0;
};

/// Aggregate outcome of one suite run (deterministic for a given seed).
struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 42;
    int cases_run = 0;
    int passed = 0;
    int failed = 0;
    std::vector<InvariantResult> invariants;
    double wall_ms = -1.0; ///< recorded only when SuiteOptions.timing is set
};

/// Knobs shared by all suites.  tol > 0 replaces the documented default
/// tolerance of every tolerance-type invariant (exact bound-0 identities are
/// never loosened).  tb_literal switches the Theodorescu right-inverse check
/// to the literal both-kernels transform, which records its documented
/// failure case.
struct SuiteOptions {
    std::uint64_t seed = 42;
    double tol = 0.0;
    bool tb_literal = false;
    bool timing = false;
    QuadratureGrid grid{};
    int fd_order = 6;
    int degree_cap = 24;
};

/// Names accepted by run_suite, in canonical order (excluding "all").
const std::vector<std::string>& suite_names();

/// Run one suite ("algebra", "toperator", "vekua", "decomp", "hardy") or
/// "all" (the five concatenated into one report).  SchemaError on unknown
/// names.  Deterministic: same options ⇒ identical report contents.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

} // namespace bivek

#endif // BIVEK_SUITE_HPP
