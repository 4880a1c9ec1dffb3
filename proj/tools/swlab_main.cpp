// swlab: command line front end for the experiment registry.  One subcommand
// per experiment plus `catalog`; every run prints a JSON report to stdout and
// exits 0 when all checks pass, 1 when any fails, 2 on usage errors.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "swlab/experiments.hpp"
#include "swlab/reports.hpp"

namespace {

struct CliValues {
    int k = 0, d = 0, n = 0, starts = 0, iters = 0, jobs = 0;
    long long samples = 0;
    unsigned long long seed = 0;
    double tol = 0.0, theta_angle = 0.0;
    std::string theta_text, out_path, csv_path, config_path;
};

void add_shared_options(CLI::App* sub, CliValues& v) {
    sub->add_option("--k", v.k, "tensor power / combinatorial size");
    sub->add_option("--d", v.d, "factor dimension");
    sub->add_option("--n", v.n, "matrix size / slot count");
    auto* theta = sub->add_option("--theta", v.theta_text, "unit-modulus parameter as RE,IM");
    sub->add_option("--theta-angle", v.theta_angle, "unit-modulus parameter as exp(i*RADIANS)")
        ->excludes(theta);
    sub->add_option("--samples", v.samples, "sample or generator count");
    sub->add_option("--starts", v.starts, "number of optimizer starts");
    sub->add_option("--iters", v.iters, "iterations per optimizer start");
    sub->add_option("--seed", v.seed, "base seed, 64-bit");
    sub->add_option("--tol", v.tol, "override the primary tolerance");
    sub->add_option("--out", v.out_path, "also write the JSON report here");
    sub->add_option("--csv", v.csv_path, "write the tabular output here");
    sub->add_option("--jobs", v.jobs, "worker threads (default: SWLAB_JOBS or hardware)");
    sub->add_option("--config", v.config_path, "JSON file with defaults; flags win");
}

std::complex<double> parse_theta_text(const std::string& text) {
    double re = 0.0, im = 0.0;
    if (std::sscanf(text.c_str(), "%lf,%lf", &re, &im) != 2)
        throw std::invalid_argument("--theta expects RE,IM");
    return {re, im};
}

// config-file defaults for every flag the subcommand did not see
void apply_config_file(const CLI::App* sub, const CliValues& v,
                       swlab::ExperimentConfig& config) {
    std::ifstream in(v.config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + v.config_path);
    nlohmann::json doc = nlohmann::json::parse(in);

    auto unset = [&](const char* flag) { return sub->count(flag) == 0; };
    if (doc.contains("k") && unset("--k")) config.k = doc["k"].get<int>();
    if (doc.contains("d") && unset("--d")) config.d = doc["d"].get<int>();
    if (doc.contains("n") && unset("--n")) config.n = doc["n"].get<int>();
    if (doc.contains("samples") && unset("--samples"))
        config.samples = doc["samples"].get<long long>();
    if (doc.contains("starts") && unset("--starts")) config.starts = doc["starts"].get<int>();
    if (doc.contains("iters") && unset("--iters")) config.iters = doc["iters"].get<int>();
    if (doc.contains("seed") && unset("--seed")) config.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("tol") && unset("--tol")) config.tol = doc["tol"].get<double>();
    if (doc.contains("jobs") && unset("--jobs")) config.jobs = doc["jobs"].get<int>();
    if (doc.contains("out") && unset("--out")) config.out_path = doc["out"].get<std::string>();
    if (doc.contains("csv") && unset("--csv")) config.csv_path = doc["csv"].get<std::string>();
    if (unset("--theta") && unset("--theta-angle")) {
        if (doc.contains("theta")) {
            auto arr = doc["theta"];
            if (!arr.is_array() || arr.size() != 2)
                throw std::invalid_argument("config theta must be [re, im]");
            config.theta = std::complex<double>(arr[0].get<double>(), arr[1].get<double>());
        } else if (doc.contains("theta_angle")) {
            config.theta = std::polar(1.0, doc["theta_angle"].get<double>());
        }
    }
}

int run_catalog() {
    for (const auto& entry : swlab::experiment_catalog()) {
        std::printf("%-32s %s\n", entry.name.c_str(), entry.summary.c_str());
        std::printf("%-32s   params: %s\n", "", entry.params.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-dimensional laboratory for tensor factor symmetries"};
    app.require_subcommand(1);
    CliValues values;

    app.add_subcommand("catalog", "list the available experiments");
    for (const auto& entry : swlab::experiment_catalog()) {
        CLI::App* sub = app.add_subcommand(entry.name, entry.summary);
        add_shared_options(sub, values);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const CLI::App* sub = app.get_subcommands().front();
    if (sub->get_name() == "catalog") return run_catalog();

    swlab::ExperimentConfig config;
    config.experiment = sub->get_name();
    try {
        if (sub->count("--k")) config.k = values.k;
        if (sub->count("--d")) config.d = values.d;
        if (sub->count("--n")) config.n = values.n;
        if (sub->count("--samples")) config.samples = values.samples;
        if (sub->count("--starts")) config.starts = values.starts;
        if (sub->count("--iters")) config.iters = values.iters;
        if (sub->count("--seed")) config.seed = values.seed;
        if (sub->count("--tol")) config.tol = values.tol;
        if (sub->count("--jobs")) config.jobs = values.jobs;
        if (sub->count("--out")) config.out_path = values.out_path;
        if (sub->count("--csv")) config.csv_path = values.csv_path;
        if (sub->count("--theta")) config.theta = parse_theta_text(values.theta_text);
        if (sub->count("--theta-angle")) config.theta = std::polar(1.0, values.theta_angle);
        if (sub->count("--config")) apply_config_file(sub, values, config);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "swlab: %s\n", e.what());
        return 2;
    }

    try {
        swlab::ExperimentResult result = swlab::run_experiment(config);
        std::string json_text = swlab::report_to_json(result.report);
        std::fputs(json_text.c_str(), stdout);
        if (!config.out_path.empty()) swlab::write_text_file(config.out_path, json_text);
        if (!config.csv_path.empty()) {
            if (result.has_csv()) {
                swlab::write_text_file(config.csv_path, swlab::csv_to_string(result.csv));
            } else {
                std::fprintf(stderr, "swlab: %s produces no table, --csv ignored\n",
                             config.experiment.c_str());
            }
        }
        return result.report.overall_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        // bad parameter values (range, domain, unknown name) and IO failures
        std::fprintf(stderr, "swlab: %s\n", e.what());
        return 2;
    }
}
