#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tracelab/catalog.hpp"
#include "tracelab/value_ideal.hpp"

namespace tracelab {

struct SuiteFailure {
    std::string instance;
    std::string expected;
    std::string got;
};

/// Result of one property suite.  `notes` holds recorded observations that
/// the suite deliberately does not assert.  Wall time is kept out of the
/// canonical serialization so reports are byte-identical across runs.
struct SuiteReport {
    std::string id;
    std::string claim;
    std::size_t instances = 0;
    std::vector<SuiteFailure> failures;
    std::vector<std::string> notes;
    bool skipped = false;
    std::string skip_reason;
    double wall_ms = 0.0;

    bool passed() const { return !skipped && failures.empty(); }
};

SuiteReport suite_pir(i64 p, int n_max, int steps);
SuiteReport suite_syzygy_full_trace(const std::vector<CatalogEntry>& catalog, int steps);
SuiteReport suite_matrix_lemma(const std::vector<CatalogEntry>& catalog, int trials,
                               std::uint64_t seed);
SuiteReport suite_koszul(int n_max);
SuiteReport suite_min_mult_equiv(i64 frobenius_bound);
SuiteReport suite_dvr();
SuiteReport suite_ulrich_reduction(i64 frobenius_bound);
SuiteReport suite_endo(i64 frobenius_bound);
SuiteReport suite_decomposition(i64 frobenius_bound, int rank_cap, int trials,
                                std::uint64_t seed);
SuiteReport suite_gorenstein(i64 frobenius_bound);
SuiteReport suite_oracle_cross(int trials, std::uint64_t seed);
SuiteReport suite_trace_calculus(i64 frobenius_bound, int trials, std::uint64_t seed);

/// The full battery at its standard bounds.
std::vector<SuiteReport> run_all_suites(std::uint64_t seed);

nlohmann::json report_to_json(const SuiteReport& r);
nlohmann::json run_to_json(const std::vector<SuiteReport>& reports, std::uint64_t seed);

}  // namespace tracelab
