#include <doctest.h>

#include <vector>

#include "splitlab/algorithms.hpp"
#include "splitlab/diagnostics.hpp"
#include "splitlab/errors.hpp"

using namespace splitlab;

namespace {

const ConeApprox& fine_cone() {
    static const ConeApprox cone = build_cone(13.0, 1.0 / 32.0, 16);
    return cone;
}

const ConeApprox& reference_cone() {
    static const ConeApprox cone = build_cone(61.0, 1.0 / 32.0, 64);
    return cone;
}

const std::vector<std::size_t> kProbes = {0, 1, 2, 3, 4, 5};

std::vector<TraceRow> rows_with_norms(const std::vector<double>& norms) {
    std::vector<TraceRow> rows;
    for (std::size_t n = 0; n < norms.size(); ++n) {
        TraceRow row;
        row.n = n;
        row.norm_iterate = norms[n];
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("weak_proxy") {
    const auto x = HilbertVector::from({0.5, -1.0, 2.0, 0.0});
    const std::vector<std::size_t> probes = {0, 2, 3};
    CHECK(weak_proxy(x, probes) == std::vector<double>{0.5, 2.0, 0.0});
    CHECK(weak_proxy(x, {}).empty());
    const std::vector<std::size_t> bad = {4};
    CHECK_THROWS_AS(weak_proxy(x, bad), DomainError);
}

TEST_CASE("fejer_check") {
    SUBCASE("zero trace") {
        const Trace t = run(fine_cone(), Algorithm::altproj, HilbertVector::zeros(16), 20, kProbes);
        const FejerReport r = fejer_check(t.rows);
        CHECK(r.passed);
        CHECK(r.max_violation == 0.0);
        CHECK_FALSE(r.index.has_value());
    }
    SUBCASE("moving trace") {
        const Trace t = run(fine_cone(), Algorithm::altproj, basis_vector(1, 16), 60, kProbes);
        CHECK(fejer_check(t.rows).passed);
    }
    SUBCASE("increase is flagged at its first row") {
        const auto rows = rows_with_norms({1.0, 0.9, 0.9, 0.95, 0.5});
        const FejerReport r = fejer_check(rows);
        CHECK_FALSE(r.passed);
        REQUIRE(r.index.has_value());
        CHECK(*r.index == 2);
        CHECK(r.max_violation == doctest::Approx(0.05));
    }
    SUBCASE("increase within tolerance passes") {
        const auto rows = rows_with_norms({1.0, 1.0 + 5e-13});
        CHECK(fejer_check(rows).passed);
        CHECK_FALSE(fejer_check(rows, 1e-13).passed);
    }
    SUBCASE("reference column is checked too") {
        auto rows = rows_with_norms({1.0, 1.0});
        rows[1].fejer_delta = -1e-6;
        CHECK_FALSE(fejer_check(rows).passed);
    }
}

TEST_CASE("summability_check") {
    SUBCASE("zero trace") {
        const Trace t = run(fine_cone(), Algorithm::altproj, HilbertVector::zeros(16), 10, kProbes);
        const SummabilityReport r = summability_check(t.rows);
        CHECK(r.passed);
        CHECK(r.sum_squares == 0.0);
        CHECK(r.bound == doctest::Approx(tolerance::summability));
    }
    SUBCASE("moving trace stays under the initial energy") {
        const Trace t = run(fine_cone(), Algorithm::altproj, basis_vector(1, 16), 80, kProbes);
        const SummabilityReport r = summability_check(t.rows);
        CHECK(r.passed);
        CHECK(r.sum_squares > 0.0);
        CHECK(r.sum_squares <= 1.0 + tolerance::summability);
    }
    SUBCASE("explicit initial norm") {
        auto rows = rows_with_norms({1.0, 1.0});
        rows[0].v_residual = 0.6;
        rows[1].v_residual = 0.8;
        CHECK(summability_check(rows).passed);
        CHECK(summability_check(rows).sum_squares == doctest::Approx(1.0));
        CHECK_FALSE(summability_check(rows, 0.5).passed);
        CHECK(summability_check(rows).last_residual == 0.8);
    }
}

TEST_CASE("coupling_check and spingarn_check") {
    const ConeApprox& cone = fine_cone();
    for (std::size_t k : {1u, 2u, 4u}) {
        const auto init = basis_vector(k, 16);
        const Trace dr = run(cone, Algorithm::dr, init, 40, kProbes);
        const Trace sp = run(cone, Algorithm::spingarn, init, 40, kProbes);
        const Trace alt = run(cone, Algorithm::altproj, init, 41, kProbes);

        const CouplingReport c = coupling_check(dr, alt);
        CHECK(c.passed);
        CHECK(c.rows_compared == 40);
        CHECK(c.max_residual <= tolerance::coupling);

        const SpingarnReport s = spingarn_check(sp, alt);
        CHECK(s.passed);
        CHECK(s.max_u_norm <= tolerance::u_norm);
        CHECK(s.max_residual <= tolerance::coupling);
    }

    SUBCASE("zero start") {
        const auto zero = HilbertVector::zeros(16);
        const Trace dr = run(cone, Algorithm::dr, zero, 5, kProbes);
        const Trace alt = run(cone, Algorithm::altproj, zero, 6, kProbes);
        CHECK(coupling_check(dr, alt).max_residual == 0.0);
    }
    SUBCASE("mismatches") {
        const auto init = basis_vector(2, 16);
        const Trace dr = run(cone, Algorithm::dr, init, 5, kProbes);
        const Trace alt = run(cone, Algorithm::altproj, init, 6, kProbes);
        const Trace short_alt = run(cone, Algorithm::altproj, init, 5, kProbes);
        const Trace other_init = run(cone, Algorithm::altproj, basis_vector(1, 16), 6, kProbes);
        const ConeApprox coarse = build_cone(13.0, 0.25, 16);
        const Trace other_cone = run(coarse, Algorithm::altproj, init, 6, kProbes);

        CHECK_THROWS_AS(coupling_check(dr, short_alt), ConfigurationMismatch);
        CHECK_THROWS_AS(coupling_check(dr, other_init), ConfigurationMismatch);
        CHECK_THROWS_AS(coupling_check(dr, other_cone), ConfigurationMismatch);
        CHECK_THROWS_AS(coupling_check(alt, alt), ConfigurationMismatch);
        CHECK_THROWS_AS(spingarn_check(dr, alt), ConfigurationMismatch);
    }
}

TEST_CASE("firm_margin") {
    const ConeApprox& cone = fine_cone();
    const auto x = basis_vector(3, 16);
    CHECK(firm_margin(cone, x, x) == 0.0);
    CHECK(firm_margin(cone, basis_vector(0, 16), HilbertVector::zeros(16)) == 0.0);
}

TEST_CASE("firm_nonexpansiveness_audit") {
    const ConeApprox& cone = fine_cone();
    const FirmAuditReport par = firm_nonexpansiveness_audit(cone, 1000, 7, Backend::parallel);
    CHECK(par.passed);
    CHECK(par.samples == 1000);
    CHECK(par.min_margin >= -tolerance::firm_nonexpansive);

    const FirmAuditReport ser = firm_nonexpansiveness_audit(cone, 1000, 7, Backend::serial);
    CHECK(ser.min_margin == par.min_margin);

    CHECK(firm_nonexpansiveness_audit(cone, 50, 1).min_margin != firm_nonexpansiveness_audit(cone, 50, 2).min_margin);
}

TEST_CASE("weak_strong_report") {
    SUBCASE("zero trace has no floor") {
        const Trace t = run(fine_cone(), Algorithm::altproj, HilbertVector::zeros(16), 20, kProbes);
        const WeakStrongReport r = weak_strong_report(t);
        CHECK(r.norm_floor == 0.0);
        CHECK_FALSE(r.floor_positive);
        CHECK_FALSE(r.all_decayed);
        CHECK(r.coordinates.size() == kProbes.size());
    }
    SUBCASE("synthetic decay") {
        Trace t;
        t.probes = {0, 1};
        for (std::size_t n = 0; n < 30; ++n) {
            TraceRow row;
            row.n = n;
            row.norm_iterate = 1.0 + 1.0 / static_cast<double>(n + 1);
            row.coord_proxies = {1.0 / static_cast<double>(n + 1), n < 5 ? 0.5 : -0.25};
            t.rows.push_back(row);
        }
        const WeakStrongReport r = weak_strong_report(t);
        CHECK(r.floor_positive);
        CHECK(r.floor_index == 29);
        CHECK(r.coordinates[0].decayed);
        CHECK(r.coordinates[0].early_max == 1.0);
        CHECK(r.coordinates[1].decayed);
        CHECK(r.coordinates[1].final_value == 0.25);
        CHECK(r.all_decayed);
    }
}

// Baselines recorded from the reference run at dim 64, step 1/32, start e2.
TEST_CASE("reference run baselines") {
    const ConeApprox& cone = reference_cone();
    REQUIRE(cone.size() == 1953);
    const Trace alt = run(cone, Algorithm::altproj, basis_vector(2, 64), 201, kProbes);
    const Trace dr = run(cone, Algorithm::dr, basis_vector(2, 64), 201, kProbes);

    const WeakStrongReport a = weak_strong_report(alt);
    CHECK(a.norm_floor == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a.floor_positive);

    CHECK(alt.rows[1].coord_proxies[0] == doctest::Approx(3.7200759760208361e-44).epsilon(1e-12));
    CHECK(alt.rows[200].coord_proxies[0] == alt.rows[1].coord_proxies[0]);
    CHECK(alt.rows[200].coord_proxies[2] == 1.0);

    const WeakStrongReport d = weak_strong_report(dr);
    CHECK(d.norm_floor == 1.0);
    CHECK(dr.rows[200].coord_proxies[2] == 1.0);
    CHECK_FALSE(d.all_decayed);
}
