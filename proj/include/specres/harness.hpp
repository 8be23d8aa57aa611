#pragma once

#include <optional>
#include <vector>

#include "specres/resolutions.hpp"

namespace specres {

struct ConvergenceRow {
    std::size_t n = 0;
    double max_error = 0.0;
    double order = 0.0;  ///< log2(err(previous n) / err(n)); 0 on the first row
};

struct ConvergenceTable {
    std::string case_id;
    std::vector<ConvergenceRow> rows;
    bool monotone = true;        ///< errors non-increasing; a violation is flagged, not fatal
    double overall_order = 0.0;  ///< average order between the first and last rows
};

/// Re-evaluates a case with the native grid size taken from n_list (ascending powers of two).
ConvergenceTable convergence_study(CaseName name, const CaseParams& params, const std::vector<std::size_t>& n_list,
                                   const GridConfig& base = {});

std::string to_csv(const ConvergenceTable& table);

struct RunConfig {
    /// Cases to run; empty selects all of them.
    std::vector<CaseName> cases;
    /// If set, every selected case runs once with these parameters; otherwise each case runs over
    /// its standard parameter list (e.g. Hankel orders 0, 1/2, 1, 5/2).
    std::optional<CaseParams> params;
    GridConfig grid;
    std::optional<double> tolerance;
    bool probes = true;
};

/// Parameter sets a case is exercised with by default.
std::vector<CaseParams> standard_params(CaseName name);

/// Runs the selected cases and, if requested, the probes. Failures are collected, not short-circuited.
AggregateReport run_all(const RunConfig& config);

}  // namespace specres
