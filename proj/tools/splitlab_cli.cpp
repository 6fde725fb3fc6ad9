// Command-line front end: runs Douglas-Rachford, partial inverses and
// alternating projections on the spiral-cone example and exports the traces.
//
//   splitlab [--algorithm compare-all] [--dim 64] [--output trace.csv] ...
//   splitlab refine --steps 0.125,0.0625,0.03125 [same flags]

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitlab/experiment.hpp"

int main(int argc, char** argv) {
    using namespace splitlab;

    CLI::App app{"Operator-splitting laboratory on a spiral cone"};
    ExperimentConfig config;
    add_experiment_options(app, config);

    std::vector<double> steps;
    CLI::App* refine = app.add_subcommand("refine", "Compare traces across grid refinements");
    refine->add_option("--steps", steps, "Grid steps, comma separated")->delimiter(',')->required();
    refine->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        validate(config);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (refine->parsed()) return run_refine(config, steps, std::cout, std::cerr);
    return run_experiment(config, std::cout, std::cerr);
}
