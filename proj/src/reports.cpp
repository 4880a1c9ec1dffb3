#include "swlab/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace swlab {

void ExperimentReport::add_param(const std::string& name, long long value) {
    params[name] = std::to_string(value);
}

void ExperimentReport::add_param(const std::string& name, double value) {
    params[name] = format_double(value);
}

void ExperimentReport::add_param(const std::string& name, const std::string& value) {
    params[name] = value;
}

void ExperimentReport::add_metric(const std::string& name, double value) {
    metrics[name] = MetricValue{value, 0.0, false};
}

void ExperimentReport::add_metric(const std::string& name, double value, double stderr_value) {
    metrics[name] = MetricValue{value, stderr_value, true};
}

void ExperimentReport::add_check(const std::string& name, double residual, double tolerance) {
    checks[name] = CheckResult{residual <= tolerance, residual, tolerance};
}

void ExperimentReport::add_check_equal(const std::string& name, long long actual,
                                       long long expected) {
    double residual = std::abs(static_cast<double>(actual - expected));
    checks[name] = CheckResult{actual == expected, residual, 0.0};
}

void ExperimentReport::add_check_at_least(const std::string& name, double value,
                                          double threshold) {
    double shortfall = std::max(0.0, threshold - value);
    checks[name] = CheckResult{value >= threshold, shortfall, 0.0};
}

bool ExperimentReport::overall_pass() const {
    for (const auto& [name, check] : checks)
        if (!check.pass) return false;
    return true;
}

std::string format_double(double value) {
    // %.17g always round-trips; shorten when fewer digits already do
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    if (std::strtod(buf, nullptr) != value) std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string report_to_json(const ExperimentReport& report) {
    nlohmann::json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["version"] = kSwlabVersion;
    doc["experiment"] = report.experiment;
    doc["seed"] = report.seed;
    doc["jobs"] = report.jobs;
    doc["params"] = nlohmann::json::object();
    for (const auto& [name, value] : report.params) doc["params"][name] = value;
    doc["metrics"] = nlohmann::json::object();
    for (const auto& [name, metric] : report.metrics) {
        nlohmann::json m;
        m["value"] = metric.value;
        if (metric.stochastic) m["stderr"] = metric.stderr_;
        doc["metrics"][name] = m;
    }
    doc["checks"] = nlohmann::json::object();
    for (const auto& [name, check] : report.checks) {
        nlohmann::json c;
        c["pass"] = check.pass;
        c["residual"] = check.residual;
        c["tolerance"] = check.tolerance;
        doc["checks"][name] = c;
    }
    doc["overall_pass"] = report.overall_pass();
    doc["wall_seconds"] = report.wall_seconds;
    return doc.dump(2) + "\n";
}

std::string csv_to_string(const CsvTable& table) {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    append_row(table.header);
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::invalid_argument("csv row width does not match the header");
        append_row(row);
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    file << content;
    if (!file) throw std::runtime_error("write failed: " + path);
}

} // namespace swlab
