#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace conerc::report {

struct CheckRecord {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    double runtime_ms = 0.0;
};

// every knob the suites read; zero tol means "use the per-check default"
struct SuiteConfig {
    std::uint64_t seed = 7;
    int trials = 200;  // jordan axiom draws
    int points = 50;   // bergman determinant sample points
    int order = 50;    // q-expansion order
    int draws = 10;    // product / group covariance draws
    int modes = 16;    // intertwining window
    int grid = 257;    // sharp grid, bumped up to odd when even
    int nmax = 8;      // mode range of the c(mu) report
    int refine = 3;    // isometry refinement ladder depth
    double nu = 4.0;
    double mu = -0.5;
    double tol = 0.0;
    bool timings = false;
    std::string algebra; // optional restriction such as "sym:3"
};

// parses a flat json object of overrides; unknown keys are rejected
SuiteConfig config_from_json(const std::string& text);
std::uint64_t seed_from_env(std::uint64_t fallback);

struct RunReport {
    std::string suite;
    std::uint64_t seed = 7;
    std::string generator = "mt19937-64";
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckRecord> records;

    bool all_pass() const;
};

// name in {jordan, gamma, rcb, bergman, sharp, cmu, all}
RunReport run_suite(const std::string& name, const SuiteConfig& cfg);

std::string emit_json(const RunReport& r);
std::string emit_table(const RunReport& r, bool color = false);

} // namespace conerc::report
