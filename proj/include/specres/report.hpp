#pragma once

#include <string>
#include <utility>
#include <vector>

namespace specres {

using NamedValues = std::vector<std::pair<std::string, double>>;

/// One identity checked on every corpus member.
struct CheckResult {
    std::string name;
    std::vector<double> errors;
    double max_error = 0.0;
};

struct VerificationReport {
    std::string case_id;
    NamedValues params;
    NamedValues grid;
    std::vector<std::string> corpus;
    /// Per corpus member, the largest error over all checks.
    std::vector<double> errors;
    std::vector<CheckResult> checks;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_time = 0.0;
};

/// A table produced by a probe, with its own verdict.
struct ProbeReport {
    std::string name;
    NamedValues params;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    bool pass = false;
    std::string criterion;
    double wall_time = 0.0;
};

struct AggregateReport {
    std::vector<VerificationReport> cases;
    std::vector<ProbeReport> probes;
    std::vector<std::string> failures;  ///< cases that raised instead of producing a report
    bool pass = false;
};

inline constexpr const char* kReportSchema = "specres-report/1";

/// JSON text; wall times are included only when requested, so reports stay byte-reproducible.
std::string to_json(const VerificationReport& r, bool timings = false);
std::string to_json(const ProbeReport& r, bool timings = false);
std::string to_json(const AggregateReport& r, bool timings = false);

/// CSV with a header row: one row per corpus member and check.
std::string to_csv(const VerificationReport& r);
std::string to_csv(const ProbeReport& r);

/// Shortest round-trip decimal representation, locale independent.
std::string format_number(double v);

/// Writes via a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace specres
