// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "splitlab/algorithms.hpp"
#include "splitlab/cone.hpp"
#include "splitlab/diagnostics.hpp"
#include "splitlab/experiment.hpp"
#include "splitlab/operators.hpp"

using namespace splitlab;

namespace {

constexpr std::size_t kDim = 64;
constexpr double kStep = 1.0 / 32.0;
constexpr std::size_t kRows = 201; // n = 0, ..., 200
const std::vector<std::size_t> kProbes = {0, 1, 2, 3, 4, 5};

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& measured) {
    std::printf("criterion %d: %s  %s  [%s]\n", id, ok ? "PASS" : "FAIL", what.c_str(), measured.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct OracleCone {
    double xi_max;
    double step;
    std::size_t dim;
};

// Curve cones with at most 12 generators.
const std::vector<OracleCone> kOracleFamily = {
    {2.0, 0.25, 8},   {5.5, 0.5, 9},     {1.375, 0.125, 5}, {11.0, 1.0, 14}, {3.0, 0.5, 6},
    {0.5, 0.0625, 4}, {0.6875, 0.0625, 4}, {4.0, 0.4, 7}, {1.1, 0.1, 5}, {9.0, 0.9, 12},
};

} // namespace

int main() {
    const auto setup_start = std::chrono::steady_clock::now();
    const ConeApprox cone = build_cone(static_cast<double>(kDim) - 3.0, kStep, kDim);
    const HilbertVector e2 = basis_vector(2, kDim);
    const double setup_s = seconds_since(setup_start);

    // 1. DR shadow equals proj_V of the alternating-projection sequence one step ahead.
    const auto c1_start = std::chrono::steady_clock::now();
    const Trace dr = run(cone, Algorithm::dr, e2, kRows, kProbes);
    const Trace alt = run(cone, Algorithm::altproj, e2, kRows + 1, kProbes);
    const CouplingReport coupling = coupling_check(dr, alt, 1e-8);
    const double c1_s = setup_s + seconds_since(c1_start);
    report(1, coupling.passed && c1_s < 5.0, "DR-altproj coupling, n <= 200, tol 1e-8, runtime < 5 s",
           fmt("max residual %.3g, runtime %.3f s", coupling.max_residual, c1_s));

    // 2. Spingarn keeps u_n = 0 and reproduces proj_V z_n.
    const Trace sp = run(cone, Algorithm::spingarn, e2, kRows, kProbes);
    const SpingarnReport spr = spingarn_check(sp, alt, 1e-12, 1e-8);
    report(2, spr.passed, "Spingarn reduction, n <= 200, |u_n| <= 1e-12, residual <= 1e-8",
           fmt("max |u_n| %.3g, max residual %.3g", spr.max_u_norm, spr.max_residual));

    // 3. Fejer monotonicity and summability of the alternating-projection sequence.
    const FejerReport fejer = fejer_check(alt.rows, 1e-12);
    const std::vector<TraceRow> upto200(alt.rows.begin(), alt.rows.begin() + kRows);
    const SummabilityReport sum = summability_check(upto200, 1.0, 1e-9);
    report(3, fejer.passed && sum.passed, "Fejer tol 1e-12 and sum_{n<=200} |P_V z_n - z_n|^2 <= 1 + 1e-9",
           fmt("max increase %.3g, sum %.17g", fejer.max_violation, sum.sum_squares));

    // 4. NNLS agrees with subset enumeration and certifies KKT.
    double worst_gap = 0.0;
    double worst_kkt = 0.0;
    std::size_t cones_checked = 0;
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (const OracleCone& oc : kOracleFamily) {
        const ConeApprox small = build_cone(oc.xi_max, oc.step, oc.dim);
        if (small.size() > kBruteForceMaxGenerators) continue;
        ++cones_checked;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> c(oc.dim);
            for (double& v : c) v = coord(rng);
            const HilbertVector x(std::move(c));
            const NnlsResult sol = cone_coefficients(small, x);
            worst_kkt = std::max(worst_kkt, kkt_violation(small.generators(), x, sol.coefficients));
            worst_gap = std::max(worst_gap, distance(project_cone(small, x), project_cone_bruteforce(small, x)));
        }
    }
    report(4, worst_gap <= 1e-9 && worst_kkt <= 1e-12 && cones_checked == kOracleFamily.size(),
           "NNLS vs brute force on " + std::to_string(cones_checked) + " cones x 100 inputs, gap <= 1e-9, KKT <= 1e-12",
           fmt("max gap %.3g, max KKT violation %.3g", worst_gap, worst_kkt));

    // 5. Firm nonexpansiveness of T at dim 16.
    const ConeApprox cone16 = build_cone(13.0, kStep, 16);
    const FirmAuditReport audit = firm_nonexpansiveness_audit(cone16, 1000, 42, Backend::parallel, 1e-9);
    report(5, audit.passed && audit.samples == 1000, "firm nonexpansiveness, 1000 pairs at dim 16, margin >= -1e-9",
           fmt("min margin %.3g", audit.min_margin));

    // 6. The origin is a fixed point of DR and a zero of both resolvents.
    const HilbertVector zero = HilbertVector::zeros(kDim);
    const Trace dr0 = run(cone, Algorithm::dr, zero, kRows, kProbes);
    double worst0 = 0.0;
    for (std::size_t n = 0; n < kRows; ++n) {
        worst0 = std::max({worst0, norm(dr0.iterates[n]), norm(dr0.governing[n])});
    }
    const double ja0 = norm(resolvent_A(zero));
    const double jb0 = norm(resolvent_B(cone, zero));
    report(6, worst0 <= 1e-12 && ja0 <= 1e-12 && jb0 <= 1e-12, "DR from y0 = 0 stays at 0, J_A 0 = J_B 0 = 0, tol 1e-12",
           fmt("max |x_n|,|y_n| %.3g, |J_A 0| + |J_B 0| %.3g", worst0, ja0 + jb0));

    // 7. Positive shadow floor and decaying probe coordinates of z_n.
    const WeakStrongReport dr_obs = weak_strong_report(dr);
    const std::vector<HilbertVector> z(alt.iterates.begin(), alt.iterates.begin() + kRows);
    bool all_decayed = true;
    std::string coords;
    for (std::size_t k : kProbes) {
        double early = 0.0;
        for (std::size_t n = 0; n <= 10; ++n) early = std::max(early, std::abs(z[n][k]));
        const double last = std::abs(z[kRows - 1][k]);
        const bool ok = last < early;
        all_decayed = all_decayed && ok;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%sk=%zu %.3g/%.3g%s", coords.empty() ? "" : ", ", k, last, early,
                      ok ? "" : "!");
        coords += buf;
    }
    report(7, dr_obs.floor_positive && all_decayed,
           "min_{n<=200} |x_n| > 0 and |<z_200,e_k>| < max_{n<=10} |<z_n,e_k>| for k <= 5",
           fmt("floor %.17g at n = %.0f", dr_obs.norm_floor, static_cast<double>(dr_obs.floor_index)) + "; " +
               coords);

    // 8. Byte-identical CSV from identical configs.
    ExperimentConfig cfg;
    const std::string first = render_csv(execute(cfg));
    const std::string second = render_csv(execute(cfg));
    report(8, first == second && !first.empty(), "two default runs give byte-identical CSV",
           fmt("%.0f bytes each", static_cast<double>(first.size())));

    std::printf("acceptance: %d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
