#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cardinal/analysis.hpp"

namespace cardinal {

enum class CaseMode { exact_symbolic, numeric_series, padic_convergence };
const char* case_mode_name(CaseMode m);

enum class CaseStatus { pass, fail, skipped_domain };
const char* case_status_name(CaseStatus s);

// One verification outcome. Symbolic grid cases emit a single report covering
// their whole range (witnesses pin the first failing point); numeric cases
// emit one report per parameter tuple so domain skips stay visible.
struct Report {
    std::string id;
    std::string params;
    CaseStatus status = CaseStatus::pass;
    std::string lhs, rhs;            // canonical witnesses; always set on failure
    std::optional<double> abs_error; // numeric checks only
    long elapsed_ms = 0;
};

struct IdentityCase {
    std::string id;
    std::string description;
    std::string parameter_ranges; // rendered record, e.g. "n=1..max_n"
    CaseMode mode = CaseMode::exact_symbolic;
    std::function<std::vector<Report>(long)> run; // max_n -> reports
};

// The deterministic list of every verified statement. Ids are stable API:
// tools, docs and the test suite cross-reference them by name.
const std::vector<IdentityCase>& registry();

// Runs every case whose id matches the glob (shell-style), ranges capped by
// max_n. Report order is registry order. A filter matching nothing is a
// usage error, not an empty success.
std::vector<Report> run_suite(const std::string& filter, long max_n);

// 1 iff any report failed; skips are not failures.
int exit_code_for(const std::vector<Report>& reports);

} // namespace cardinal
