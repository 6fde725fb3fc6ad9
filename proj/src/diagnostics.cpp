#include "splitlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "splitlab/errors.hpp"
#include "splitlab/operators.hpp"

namespace splitlab {

std::vector<double> weak_proxy(const HilbertVector& x, std::span<const std::size_t> probes) {
    std::vector<double> out;
    out.reserve(probes.size());
    for (std::size_t k : probes) {
        if (k >= x.dim()) throw DomainError("weak_proxy: probe " + std::to_string(k) + " out of range");
        out.push_back(x[k]);
    }
    return out;
}

FejerReport fejer_check(std::span<const TraceRow> rows, double tol) {
    FejerReport report;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        double increase = -rows[n].fejer_delta;
        if (n + 1 < rows.size()) increase = std::max(increase, rows[n + 1].norm_iterate - rows[n].norm_iterate);
        report.max_violation = std::max(report.max_violation, increase);
        if (increase > tol && !report.index) report.index = n;
    }
    report.passed = !report.index.has_value();
    return report;
}

SummabilityReport summability_check(std::span<const TraceRow> rows, std::optional<double> initial_norm, double tol) {
    SummabilityReport report;
    const double z0 = initial_norm.value_or(rows.empty() ? 0.0 : rows.front().norm_iterate);
    for (const TraceRow& row : rows) report.sum_squares += row.v_residual * row.v_residual;
    report.bound = z0 * z0 + tol;
    report.last_residual = rows.empty() ? 0.0 : rows.back().v_residual;
    report.passed = report.sum_squares <= report.bound;
    return report;
}

namespace {

void require_comparable(const Trace& a, const Trace& altproj, Algorithm expected, std::size_t rows_needed) {
    if (a.algorithm != expected || altproj.algorithm != Algorithm::altproj) {
        throw ConfigurationMismatch("expected a " + std::string(to_string(expected)) + " trace and an altproj trace");
    }
    if (a.dim != altproj.dim || a.xi_max != altproj.xi_max || a.grid_step != altproj.grid_step) {
        throw ConfigurationMismatch("traces were produced on different cone approximations");
    }
    if (!(a.init == altproj.init)) throw ConfigurationMismatch("traces start from different points");
    if (altproj.iterates.size() < rows_needed) {
        throw ConfigurationMismatch("altproj trace has " + std::to_string(altproj.iterates.size()) + " rows, needs " +
                                    std::to_string(rows_needed));
    }
}

} // namespace

CouplingReport coupling_check(const Trace& dr, const Trace& altproj, double tol) {
    require_comparable(dr, altproj, Algorithm::dr, dr.iterates.size() + 1);
    CouplingReport report;
    for (std::size_t n = 0; n < dr.iterates.size(); ++n) {
        report.max_residual = std::max(report.max_residual, distance(dr.iterates[n], proj_V(altproj.iterates[n + 1])));
    }
    report.rows_compared = dr.iterates.size();
    report.passed = report.max_residual <= tol;
    return report;
}

SpingarnReport spingarn_check(const Trace& spingarn, const Trace& altproj, double u_tol, double tol) {
    require_comparable(spingarn, altproj, Algorithm::spingarn, spingarn.iterates.size());
    SpingarnReport report;
    for (std::size_t n = 0; n < spingarn.iterates.size(); ++n) {
        report.max_u_norm = std::max(report.max_u_norm, norm(spingarn.governing[n]));
        report.max_residual =
            std::max(report.max_residual, distance(spingarn.iterates[n], proj_V(altproj.iterates[n])));
    }
    report.passed = report.max_u_norm <= u_tol && report.max_residual <= tol;
    return report;
}

double firm_margin(const ConeApprox& cone, const HilbertVector& x, const HilbertVector& y, const NnlsOptions& options) {
    const HilbertVector tx = resolvent_B(cone, x, options);
    const HilbertVector ty = resolvent_B(cone, y, options);
    const HilbertVector dt = tx - ty;
    return inner(x - y, dt) - inner(dt, dt);
}

FirmAuditReport firm_nonexpansiveness_audit(const ConeApprox& cone, std::size_t samples, std::uint64_t seed,
                                            Backend backend, double tol) {
    if (samples == 0) throw DomainError("firm_nonexpansiveness_audit: samples must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    auto draw = [&] {
        std::vector<double> c(cone.dim());
        for (double& v : c) v = coord(rng);
        return HilbertVector(std::move(c));
    };
    std::vector<HilbertVector> xs, ys;
    xs.reserve(samples);
    ys.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        xs.push_back(draw());
        ys.push_back(draw());
    }

    NnlsOptions options;
    options.backend = backend;
    FirmAuditReport report;
    report.samples = samples;
    report.min_margin =
        kernels::min_over(backend, samples, [&](std::size_t i) { return firm_margin(cone, xs[i], ys[i], options); });
    report.passed = report.min_margin >= -tol;
    return report;
}

WeakStrongReport weak_strong_report(const Trace& trace, std::size_t early_window) {
    WeakStrongReport report;
    if (trace.rows.empty()) return report;

    report.norm_floor = std::numeric_limits<double>::infinity();
    for (const TraceRow& row : trace.rows) {
        if (row.norm_iterate < report.norm_floor) {
            report.norm_floor = row.norm_iterate;
            report.floor_index = row.n;
        }
    }
    report.floor_positive = report.norm_floor > 0.0;

    report.all_decayed = true;
    const std::size_t early = std::min(early_window + 1, trace.rows.size());
    for (std::size_t p = 0; p < trace.probes.size(); ++p) {
        CoordinateDecay cd;
        cd.probe = trace.probes[p];
        for (std::size_t n = 0; n < early; ++n) {
            cd.early_max = std::max(cd.early_max, std::abs(trace.rows[n].coord_proxies[p]));
        }
        cd.final_value = std::abs(trace.rows.back().coord_proxies[p]);
        cd.decayed = cd.final_value < cd.early_max;
        report.all_decayed = report.all_decayed && cd.decayed;
        report.coordinates.push_back(cd);
    }
    return report;
}

} // namespace splitlab
