#include "specres/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "specres/error.hpp"

namespace specres {

namespace {

using nlohmann::ordered_json;

ordered_json named(const NamedValues& v) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, x] : v) j[k] = x;
    return j;
}

ordered_json case_json(const VerificationReport& r, bool timings) {
    ordered_json j;
    j["case"] = r.case_id;
    j["params"] = named(r.params);
    j["grid"] = named(r.grid);
    j["corpus"] = r.corpus;
    j["errors"] = r.errors;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"errors", c.errors}, {"max_error", c.max_error}});
    }
    j["checks"] = std::move(checks);
    j["max_error"] = r.max_error;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    if (timings) j["wall_time"] = r.wall_time;
    return j;
}

ordered_json probe_json(const ProbeReport& r, bool timings) {
    ordered_json j;
    j["probe"] = r.name;
    j["params"] = named(r.params);
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    j["criterion"] = r.criterion;
    j["pass"] = r.pass;
    if (timings) j["wall_time"] = r.wall_time;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string to_json(const VerificationReport& r, bool timings) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j.update(case_json(r, timings));
    return j.dump(2) + "\n";
}

std::string to_json(const ProbeReport& r, bool timings) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j.update(probe_json(r, timings));
    return j.dump(2) + "\n";
}

std::string to_json(const AggregateReport& r, bool timings) {
    ordered_json j;
    j["schema"] = kReportSchema;
    ordered_json cases = ordered_json::array();
    for (const auto& c : r.cases) cases.push_back(case_json(c, timings));
    ordered_json probes = ordered_json::array();
    for (const auto& p : r.probes) probes.push_back(probe_json(p, timings));
    j["cases"] = std::move(cases);
    j["probes"] = std::move(probes);
    j["failures"] = r.failures;
    j["pass"] = r.pass;
    return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& r) {
    std::string out = "case,check,member,error,tolerance,pass\n";
    for (const auto& c : r.checks) {
        for (std::size_t k = 0; k < c.errors.size(); ++k) {
            const std::string member = k < r.corpus.size() ? r.corpus[k] : std::to_string(k);
            out += csv_field(r.case_id) + "," + csv_field(c.name) + "," + csv_field(member) + "," +
                   format_number(c.errors[k]) + "," + format_number(r.tolerance) + "," +
                   (c.errors[k] <= r.tolerance ? "true" : "false") + "\n";
        }
    }
    return out;
}

std::string to_csv(const ProbeReport& r) {
    std::string out;
    for (std::size_t k = 0; k < r.columns.size(); ++k) out += (k ? "," : "") + csv_field(r.columns[k]);
    out += "\n";
    for (const auto& row : r.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + format_number(row[k]);
        out += "\n";
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw Error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
    }
}

}  // namespace specres
