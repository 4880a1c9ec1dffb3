// End-to-end checks of the command line binary: exit codes, JSON shape,
// CSV output, determinism, config file precedence.  The binary path comes
// from the SWLAB_BIN environment variable set by the test harness.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "swlab/experiments.hpp"

using nlohmann::json;

namespace {

std::string binary_path() {
    const char* env = std::getenv("SWLAB_BIN");
    REQUIRE_MESSAGE(env != nullptr, "SWLAB_BIN must point at the swlab binary");
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult result;
    std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parsed_without_timing(const std::string& text) {
    json doc = json::parse(text);
    doc.erase("wall_seconds");
    return doc;
}

} // namespace

TEST_CASE("catalog lists every registered experiment") {
    RunResult r = run("catalog");
    CHECK(r.exit_code == 0);
    for (const auto& entry : swlab::experiment_catalog())
        CHECK(r.out.find(entry.name) != std::string::npos);
    CHECK(swlab::experiment_catalog().size() == 25);
}

TEST_CASE("a passing run emits a schema-one report and exits zero") {
    RunResult r = run("characters --k 5 --seed 7");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["experiment"] == "characters");
    CHECK(doc["seed"] == 7);
    CHECK(doc["overall_pass"] == true);
    CHECK(doc["checks"].is_object());
    CHECK(!doc["checks"].empty());
    for (const auto& [name, check] : doc["checks"].items()) {
        CHECK(check.contains("pass"));
        CHECK(check.contains("residual"));
        CHECK(check.contains("tolerance"));
    }
    CHECK(doc["wall_seconds"].is_number());
}

TEST_CASE("same seed gives identical reports apart from timing") {
    const std::string args = "cd_unitarity --n 4 --samples 6 --seed 12345";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(parsed_without_timing(a.out) == parsed_without_timing(b.out));
}

TEST_CASE("json and csv files are written on request") {
    const std::string out_json = "swlab_test_report.json";
    const std::string out_csv = "swlab_test_table.csv";
    std::remove(out_json.c_str());
    std::remove(out_csv.c_str());
    RunResult r =
        run("kernel_sweep --n 4 --out " + out_json + " --csv " + out_csv + " --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(slurp(out_json) == r.out);
    std::string csv = slurp(out_csv);
    CHECK(csv.rfind("n,theta_re,theta_im,kernel_dim,rank,gap\n", 0) == 0);
    // two sizes, six angles each, plus the header
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 13);
    CHECK(csv.find('\r') == std::string::npos);
    std::remove(out_json.c_str());
    std::remove(out_csv.c_str());
}

TEST_CASE("usage problems exit with code two") {
    CHECK(run("no_such_experiment").exit_code == 2);
    CHECK(run("characters --bogus-flag 3").exit_code == 2);
    CHECK(run("characters --k 99").exit_code == 2);
    CHECK(run("cd_unitarity --theta 1,0").exit_code == 2);
    CHECK(run("cd_unitarity --theta nonsense").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("capacity refusal surfaces as a failing check, not a crash") {
    RunResult r = run("commutant_gap --d 3 --k 2");
    CHECK(r.exit_code == 1);
    json doc = json::parse(r.out);
    CHECK(doc["overall_pass"] == false);
    CHECK(doc["checks"]["within_capacity"]["pass"] == false);
    CHECK(doc["params"].contains("capacity_error"));
}

TEST_CASE("config file fills defaults and flags win") {
    const std::string config_path = "swlab_test_config.json";
    {
        std::ofstream out(config_path);
        out << "{\"n\": 4, \"seed\": 11}\n";
    }
    RunResult from_config = run("kernel_sweep --config " + config_path);
    CHECK(from_config.exit_code == 0);
    json doc = json::parse(from_config.out);
    CHECK(doc["params"]["n_max"] == "4");
    CHECK(doc["seed"] == 11);

    RunResult overridden = run("kernel_sweep --config " + config_path + " --n 3 --seed 2");
    json doc2 = json::parse(overridden.out);
    CHECK(doc2["params"]["n_max"] == "3");
    CHECK(doc2["seed"] == 2);
    std::remove(config_path.c_str());
}
