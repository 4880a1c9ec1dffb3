#pragma once

// Machine-readable experiment reports: named metrics with optional standard
// errors, named checks carrying their residual and tolerance, JSON and CSV
// serialization.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace swlab {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kSwlabVersion = "0.1.0";

struct MetricValue {
    double value = 0.0;
    double stderr_ = 0.0;
    bool stochastic = false; // stderr_ is meaningful only when set
};

struct CheckResult {
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

struct ExperimentReport {
    std::string experiment;
    std::map<std::string, std::string> params; // stringified parameter values
    std::uint64_t seed = 0;
    int jobs = 1;
    std::map<std::string, MetricValue> metrics;
    std::map<std::string, CheckResult> checks;
    double wall_seconds = 0.0;

    void add_param(const std::string& name, long long value);
    void add_param(const std::string& name, double value);
    void add_param(const std::string& name, const std::string& value);
    void add_metric(const std::string& name, double value);
    void add_metric(const std::string& name, double value, double stderr_value);
    // pass = residual <= tolerance
    void add_check(const std::string& name, double residual, double tolerance);
    // exact integer agreement, recorded as residual |actual - expected|
    void add_check_equal(const std::string& name, long long actual, long long expected);
    // lower bound: pass when value >= threshold, residual is the shortfall
    void add_check_at_least(const std::string& name, double value, double threshold);
    bool overall_pass() const;
};

// serialize (schema_version pinned above); keys are sorted so identical
// runs produce identical documents apart from wall_seconds
std::string report_to_json(const ExperimentReport& report);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// header plus rows, comma separated, LF line endings
std::string csv_to_string(const CsvTable& table);

// format a double the way the CSV and JSON emitters do (shortest
// round-trippable form)
std::string format_double(double value);

void write_text_file(const std::string& path, const std::string& content);

} // namespace swlab
