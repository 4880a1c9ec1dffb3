#pragma once

// The experiment catalog behind the command line: every verification the
// library supports, packaged as named, seeded, reproducible runs emitting
// a report and (for sweeps) a CSV table.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swlab/reports.hpp"

namespace swlab {

struct ExperimentConfig {
    std::string experiment;
    std::uint64_t seed = 0;
    int jobs = 0; // 0 = SWLAB_JOBS, else hardware threads
    std::optional<int> k;
    std::optional<int> d;
    std::optional<int> n;
    std::optional<long long> samples;
    std::optional<int> starts;
    std::optional<int> iters;
    std::optional<std::complex<double>> theta;
    std::optional<double> tol;
    std::string out_path;
    std::string csv_path;
};

struct ExperimentDescriptor {
    std::string name;
    std::string summary;
    std::string params; // accepted parameters with defaults, human readable
};

const std::vector<ExperimentDescriptor>& experiment_catalog();

struct ExperimentResult {
    ExperimentReport report;
    CsvTable csv;
    bool has_csv() const { return !csv.header.empty(); }
};

// run one catalog entry; unknown names throw std::out_of_range
ExperimentResult run_experiment(const ExperimentConfig& config);

// resolve the parallelism degree: the request if positive, else SWLAB_JOBS,
// else the hardware concurrency
int default_jobs(int requested);

} // namespace swlab
