#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitlab/algorithms.hpp"
#include "splitlab/cone.hpp"
#include "splitlab/diagnostics.hpp"

namespace CLI {
class App;
}

namespace splitlab {

// Process exit statuses of the command-line front end.
enum ExitStatus : int {
    kExitPass = 0,
    kExitCheckFailure = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
};

// Malformed or inconsistent settings, unreadable config file, unwritable output.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string algorithm = "compare-all";    // dr | spingarn | altproj | compare-all
    std::size_t dim = 64;
    std::optional<double> xi_max;             // defaults to dim - 3
    double grid_step = 1.0 / 32.0;
    std::size_t iterations = 200;             // recorded rows per algorithm
    std::vector<std::size_t> probes = {0, 1, 2, 3, 4, 5};
    std::uint64_t seed = 42;
    std::size_t audit_samples = 100;          // pairs for the firm-nonexpansiveness check
    std::string init = "e2";                  // e<k> or zero
    std::string output_path;                  // empty: standard output
    std::string format = "csv";               // csv | json

    double effective_xi_max() const { return xi_max.value_or(static_cast<double>(dim) - 3.0); }
};

// Registers every flag of the experiment front end on `app`, bound to `config`.
void add_experiment_options(CLI::App& app, ExperimentConfig& config);

// Throws ConfigError when the settings cannot build a cone or run.
void validate(const ExperimentConfig& config);

// Flags override config-file values, which override defaults. `args` excludes
// the program name. Throws ConfigError on any problem.
ExperimentConfig parse_config(const std::vector<std::string>& args);

HilbertVector resolve_init(const ExperimentConfig& config);

struct CheckResult {
    std::string name;
    bool passed = true;
    double value = 0.0;
    double tolerance = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<Trace> traces;           // in output order
    std::vector<CheckResult> checks;
    std::vector<WeakStrongReport> observations; // one per trace
    bool passed() const;
};

// Runs the configured algorithm(s) and every applicable check. No I/O.
ExperimentResult execute(const ExperimentConfig& config);

// CSV: header row, one row per iterate (17 significant digits), then a
// "#"-prefixed summary block.
std::string render_csv(const ExperimentResult& result);
std::string render_json(const ExperimentResult& result);

// Writes the whole artifact or nothing. Throws ConfigError if the file cannot be written.
void write_artifact(const std::string& path, const std::string& content);

// execute + render + write; returns an ExitStatus and reports errors on `log`.
int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& log);

struct RefineReport {
    std::vector<double> steps;
    std::vector<double> deltas;   // deltas[i]: max_n |norm_iterate(step i) - norm_iterate(step i+1)|
    bool monotone_nonincreasing = true;
};

// Reruns the experiment once per grid step (in parallel). compare-all is
// studied through its altproj sequence. Throws ConfigError for fewer than two steps.
RefineReport refine_study(const ExperimentConfig& config, const std::vector<double>& steps);
std::string render_refine_csv(const RefineReport& report);
int run_refine(const ExperimentConfig& config, const std::vector<double>& steps, std::ostream& out, std::ostream& log);

} // namespace splitlab
