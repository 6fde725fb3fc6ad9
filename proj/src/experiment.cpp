#include "splitlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitlab/errors.hpp"
#include "splitlab/kernels.hpp"

namespace splitlab {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::optional<std::size_t> parse_basis_init(const std::string& s) {
    if (s.size() < 2 || s[0] != 'e') return std::nullopt;
    std::size_t k = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        k = k * 10 + static_cast<std::size_t>(s[i] - '0');
    }
    return k;
}

} // namespace

void add_experiment_options(CLI::App& app, ExperimentConfig& config) {
    app.add_option("--algorithm", config.algorithm, "dr, spingarn, altproj or compare-all")
        ->check(CLI::IsMember({"dr", "spingarn", "altproj", "compare-all"}))
        ->capture_default_str();
    app.add_option("--dim", config.dim, "Truncation level of the Hilbert space")->capture_default_str();
    app.add_option_function<double>(
        "--xi-max", [&config](double v) { config.xi_max = v; }, "Largest curve parameter (default: dim - 3)");
    app.add_option("--grid-step", config.grid_step, "Spacing of the curve-parameter grid")->capture_default_str();
    app.add_option("--iterations", config.iterations, "Recorded iterates per algorithm")->capture_default_str();
    app.add_option("--probes", config.probes, "Coordinates to track, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed of the randomized audit")->capture_default_str();
    app.add_option("--audit-samples", config.audit_samples, "Random pairs for the firm-nonexpansiveness audit")
        ->capture_default_str();
    app.add_option("--init", config.init, "Starting point: e<k> or zero")->capture_default_str();
    app.add_option("--output", config.output_path, "Output file (default: standard output)");
    app.add_option("--format", config.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.set_config("--config", "", "Flat key = value file mirroring the flag names");
    app.allow_config_extras(CLI::config_extras_mode::error);
}

void validate(const ExperimentConfig& config) {
    static const std::vector<std::string> algorithms = {"dr", "spingarn", "altproj", "compare-all"};
    if (std::find(algorithms.begin(), algorithms.end(), config.algorithm) == algorithms.end()) {
        throw ConfigError("unknown algorithm '" + config.algorithm + "'");
    }
    if (config.format != "csv" && config.format != "json") throw ConfigError("unknown format '" + config.format + "'");
    if (config.dim < 3) throw ConfigError("dim must be at least 3");
    if (config.iterations < 1) throw ConfigError("iterations must be at least 1");
    if (config.audit_samples < 1) throw ConfigError("audit-samples must be at least 1");
    const double xi_max = config.effective_xi_max();
    if (!std::isfinite(xi_max) || !(xi_max > 0.0)) throw ConfigError("xi-max must be positive");
    if (!std::isfinite(config.grid_step) || !(config.grid_step > 0.0) || config.grid_step > xi_max) {
        throw ConfigError("grid-step must lie in (0, xi-max]");
    }
    if (min_dim_for(xi_max) > config.dim) {
        throw ConfigError("xi-max = " + fmt17(xi_max) + " needs dim >= " + std::to_string(min_dim_for(xi_max)) +
                          ", got dim = " + std::to_string(config.dim));
    }
    for (std::size_t k : config.probes) {
        if (k >= config.dim) throw ConfigError("probe index " + std::to_string(k) + " out of range");
    }
    if (config.init != "zero") {
        const auto k = parse_basis_init(config.init);
        if (!k) throw ConfigError("init must be 'zero' or 'e<k>', got '" + config.init + "'");
        if (*k >= config.dim) throw ConfigError("init " + config.init + " out of range for dim");
    }
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"splitlab"};
    ExperimentConfig config;
    add_experiment_options(app, config);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    validate(config);
    return config;
}

HilbertVector resolve_init(const ExperimentConfig& config) {
    if (config.init == "zero") return HilbertVector::zeros(config.dim);
    const auto k = parse_basis_init(config.init);
    if (!k) throw ConfigError("init must be 'zero' or 'e<k>'");
    return basis_vector(*k, config.dim);
}

bool ExperimentResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

double column_max(const Trace& t, double TraceRow::*field) {
    double m = 0.0;
    for (const TraceRow& r : t.rows) m = std::max(m, r.*field);
    return m;
}

void add_sequence_checks(const Trace& t, const HilbertVector& init, std::vector<CheckResult>& checks) {
    const std::string name(to_string(t.algorithm));
    const FejerReport fejer = fejer_check(t.rows);
    checks.push_back({name + ".fejer", fejer.passed, fejer.max_violation, tolerance::fejer});
    const SummabilityReport sum = summability_check(t.rows, norm(init));
    checks.push_back({name + ".summability", sum.passed, sum.sum_squares, sum.bound});
    if (t.algorithm == Algorithm::dr) {
        const double c = column_max(t, &TraceRow::coupling_residual);
        checks.push_back({"dr.coupling_residual", c <= tolerance::coupling, c, tolerance::coupling});
    }
    if (t.algorithm == Algorithm::spingarn) {
        const double u = column_max(t, &TraceRow::u_norm);
        checks.push_back({"spingarn.u_norm", u <= tolerance::u_norm, u, tolerance::u_norm});
        const double c = column_max(t, &TraceRow::coupling_residual);
        checks.push_back({"spingarn.coupling_residual", c <= tolerance::coupling, c, tolerance::coupling});
    }
}

Trace truncated(Trace t, std::size_t rows) {
    t.rows.resize(std::min(rows, t.rows.size()));
    if (t.iterates.size() > rows) t.iterates.erase(t.iterates.begin() + static_cast<std::ptrdiff_t>(rows), t.iterates.end());
    return t;
}

} // namespace

ExperimentResult execute(const ExperimentConfig& config) {
    validate(config);
    const ConeApprox cone = build_cone(config.effective_xi_max(), config.grid_step, config.dim);
    const HilbertVector init = resolve_init(config);
    const std::size_t rows = config.iterations;

    ExperimentResult result;
    result.config = config;

    if (config.algorithm == "compare-all") {
        // One shared cone; the altproj trace carries an extra row for the dr identity.
        Trace dr = run(cone, Algorithm::dr, init, rows, config.probes);
        Trace sp = run(cone, Algorithm::spingarn, init, rows, config.probes);
        const Trace alt_long = run(cone, Algorithm::altproj, init, rows + 1, config.probes);

        const CouplingReport coupling = coupling_check(dr, alt_long);
        const SpingarnReport reduction = spingarn_check(sp, alt_long);
        result.traces = {std::move(dr), std::move(sp), truncated(alt_long, rows)};
        for (const Trace& t : result.traces) add_sequence_checks(t, init, result.checks);
        result.checks.push_back({"compare.dr_altproj_coupling", coupling.passed, coupling.max_residual,
                                 tolerance::coupling});
        result.checks.push_back({"compare.spingarn_u_norm", reduction.max_u_norm <= tolerance::u_norm,
                                 reduction.max_u_norm, tolerance::u_norm});
        result.checks.push_back({"compare.spingarn_altproj_reduction", reduction.max_residual <= tolerance::coupling,
                                 reduction.max_residual, tolerance::coupling});
    } else {
        const Algorithm a = *parse_algorithm(config.algorithm);
        result.traces.push_back(run(cone, a, init, rows, config.probes));
        add_sequence_checks(result.traces.back(), init, result.checks);
    }

    const FirmAuditReport audit = firm_nonexpansiveness_audit(cone, config.audit_samples, config.seed);
    result.checks.push_back({"firm_nonexpansiveness", audit.passed, audit.min_margin, tolerance::firm_nonexpansive});

    for (const Trace& t : result.traces) result.observations.push_back(weak_strong_report(t));
    return result;
}

std::string render_csv(const ExperimentResult& result) {
    std::ostringstream os;
    os << "algorithm,n,norm_iterate,norm_y,u_norm,v_residual,fejer_delta,coupling_residual";
    for (std::size_t k : result.config.probes) os << ",coord_" << k;
    os << '\n';
    for (const Trace& t : result.traces) {
        const std::string_view name = to_string(t.algorithm);
        for (const TraceRow& r : t.rows) {
            os << name << ',' << r.n << ',' << fmt17(r.norm_iterate) << ',' << fmt17(r.norm_y) << ','
               << fmt17(r.u_norm) << ',' << fmt17(r.v_residual) << ',' << fmt17(r.fejer_delta) << ','
               << fmt17(r.coupling_residual);
            for (double c : r.coord_proxies) os << ',' << fmt17(c);
            os << '\n';
        }
    }

    os << "# summary\n";
    for (const CheckResult& c : result.checks) {
        os << "# check," << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << fmt17(c.value) << ','
           << fmt17(c.tolerance) << '\n';
    }
    for (std::size_t i = 0; i < result.traces.size(); ++i) {
        const std::string_view name = to_string(result.traces[i].algorithm);
        const WeakStrongReport& obs = result.observations[i];
        os << "# norm_floor," << name << ',' << fmt17(obs.norm_floor) << ",n=" << obs.floor_index << '\n';
        for (const CoordinateDecay& cd : obs.coordinates) {
            os << "# final_coord," << name << ",coord_" << cd.probe << ',' << fmt17(cd.final_value)
               << ",early_max=" << fmt17(cd.early_max) << ',' << (cd.decayed ? "decayed" : "not_decayed") << '\n';
        }
    }
    os << "# status," << (result.passed() ? kExitPass : kExitCheckFailure) << '\n';
    return os.str();
}

std::string render_json(const ExperimentResult& result) {
    using nlohmann::json;
    const ExperimentConfig& c = result.config;
    json doc;
    doc["config"] = {{"algorithm", c.algorithm},     {"dim", c.dim},     {"xi_max", c.effective_xi_max()},
                     {"grid_step", c.grid_step},     {"iterations", c.iterations}, {"probes", c.probes},
                     {"seed", c.seed},               {"audit_samples", c.audit_samples}, {"init", c.init}};
    json traces = json::array();
    for (std::size_t i = 0; i < result.traces.size(); ++i) {
        const Trace& t = result.traces[i];
        json rows = json::array();
        for (const TraceRow& r : t.rows) {
            rows.push_back({{"n", r.n},
                            {"norm_iterate", r.norm_iterate},
                            {"norm_y", r.norm_y},
                            {"u_norm", r.u_norm},
                            {"v_residual", r.v_residual},
                            {"fejer_delta", r.fejer_delta},
                            {"coupling_residual", r.coupling_residual},
                            {"coord_proxies", r.coord_proxies}});
        }
        const WeakStrongReport& obs = result.observations[i];
        json coords = json::array();
        for (const CoordinateDecay& cd : obs.coordinates) {
            coords.push_back({{"probe", cd.probe},
                              {"final", cd.final_value},
                              {"early_max", cd.early_max},
                              {"decayed", cd.decayed}});
        }
        traces.push_back({{"algorithm", std::string(to_string(t.algorithm))},
                          {"rows", std::move(rows)},
                          {"norm_floor", obs.norm_floor},
                          {"norm_floor_n", obs.floor_index},
                          {"coordinates", std::move(coords)}});
    }
    doc["traces"] = std::move(traces);
    json checks = json::array();
    for (const CheckResult& ch : result.checks) {
        checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"value", ch.value}, {"tolerance", ch.tolerance}});
    }
    doc["checks"] = std::move(checks);
    doc["status"] = result.passed() ? kExitPass : kExitCheckFailure;
    return doc.dump(2) + "\n";
}

void write_artifact(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot open '" + path + "' for writing");
    f << content;
    f.flush();
    if (!f) {
        f.close();
        std::error_code ec;
        std::filesystem::remove(path, ec);
        throw ConfigError("failed while writing '" + path + "'");
    }
}

int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
    ExperimentResult result;
    try {
        result = execute(config);
    } catch (const ConfigError& e) {
        log << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        log << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        log << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }

    const std::string content = config.format == "json" ? render_json(result) : render_csv(result);
    if (config.output_path.empty()) {
        out << content;
    } else {
        try {
            write_artifact(config.output_path, content);
        } catch (const ConfigError& e) {
            log << "output error: " << e.what() << '\n';
            return kExitUsage;
        }
    }
    for (const CheckResult& c : result.checks) {
        if (!c.passed) log << "check failed: " << c.name << " = " << fmt17(c.value) << '\n';
    }
    return result.passed() ? kExitPass : kExitCheckFailure;
}

RefineReport refine_study(const ExperimentConfig& config, const std::vector<double>& steps) {
    if (steps.size() < 2) throw ConfigError("refine study needs at least two grid steps");
    std::vector<ExperimentConfig> configs;
    for (double s : steps) {
        ExperimentConfig c = config;
        c.grid_step = s;
        validate(c);
        configs.push_back(std::move(c));
    }
    const Algorithm algorithm =
        config.algorithm == "compare-all" ? Algorithm::altproj : *parse_algorithm(config.algorithm);

    std::vector<std::vector<double>> norms(steps.size());
    kernels::for_each_index(Backend::parallel, steps.size(), [&](std::size_t i) {
        const ExperimentConfig& c = configs[i];
        const ConeApprox cone = build_cone(c.effective_xi_max(), c.grid_step, c.dim);
        const Trace t = run(cone, algorithm, resolve_init(c), c.iterations, {});
        for (const TraceRow& r : t.rows) norms[i].push_back(r.norm_iterate);
    });

    RefineReport report;
    report.steps = steps;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        double d = 0.0;
        for (std::size_t n = 0; n < norms[i].size(); ++n) d = std::max(d, std::abs(norms[i][n] - norms[i + 1][n]));
        report.deltas.push_back(d);
    }
    for (std::size_t i = 0; i + 1 < report.deltas.size(); ++i) {
        if (report.deltas[i + 1] > report.deltas[i]) report.monotone_nonincreasing = false;
    }
    return report;
}

std::string render_refine_csv(const RefineReport& report) {
    std::ostringstream os;
    os << "step_coarse,step_fine,max_norm_diff\n";
    for (std::size_t i = 0; i < report.deltas.size(); ++i) {
        os << fmt17(report.steps[i]) << ',' << fmt17(report.steps[i + 1]) << ',' << fmt17(report.deltas[i]) << '\n';
    }
    os << "# monotone_nonincreasing," << (report.monotone_nonincreasing ? "true" : "false") << '\n';
    return os.str();
}

int run_refine(const ExperimentConfig& config, const std::vector<double>& steps, std::ostream& out,
               std::ostream& log) {
    RefineReport report;
    try {
        report = refine_study(config, steps);
    } catch (const ConfigError& e) {
        log << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        log << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        log << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    const std::string content = render_refine_csv(report);
    if (config.output_path.empty()) {
        out << content;
        return kExitPass;
    }
    try {
        write_artifact(config.output_path, content);
    } catch (const ConfigError& e) {
        log << "output error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitPass;
}

} // namespace splitlab
