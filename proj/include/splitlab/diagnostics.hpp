#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "splitlab/algorithms.hpp"
#include "splitlab/cone.hpp"
#include "splitlab/hilbert.hpp"
#include "splitlab/kernels.hpp"

namespace splitlab {

namespace tolerance {
inline constexpr double fejer = 1e-12;
inline constexpr double summability = 1e-9;
inline constexpr double coupling = 1e-8;
inline constexpr double u_norm = 1e-12;
inline constexpr double firm_nonexpansive = 1e-9;
inline constexpr double fixed_point = 1e-12;
} // namespace tolerance

// <x, e_k> for each probe k; DomainError if a probe is out of range.
std::vector<double> weak_proxy(const HilbertVector& x, std::span<const std::size_t> probes);

struct FejerReport {
    double max_violation = 0.0;         // max(0, largest norm increase)
    std::optional<std::size_t> index;   // first row whose successor exceeds the tolerance
    bool passed = true;
};

// Looks at consecutive norm_iterate values and at each row's fejer_delta.
FejerReport fejer_check(std::span<const TraceRow> rows, double tol = tolerance::fejer);

struct SummabilityReport {
    double sum_squares = 0.0;    // sum of v_residual^2
    double bound = 0.0;          // ||z_0||^2 + tol
    double last_residual = 0.0;
    bool passed = true;
};

// ||z_0|| defaults to the first row's norm_iterate, which is right for altproj traces.
SummabilityReport summability_check(std::span<const TraceRow> rows, std::optional<double> initial_norm = std::nullopt,
                                    double tol = tolerance::summability);

struct CouplingReport {
    double max_residual = 0.0;
    std::size_t rows_compared = 0;
    bool passed = true;
};

// max_n ||x_n - proj_V z_{n+1}|| between a dr trace and an altproj trace. Both
// must come from the same cone and start, and the altproj trace needs one more
// row than the dr trace. Throws ConfigurationMismatch otherwise.
CouplingReport coupling_check(const Trace& dr, const Trace& altproj, double tol = tolerance::coupling);

struct SpingarnReport {
    double max_u_norm = 0.0;
    double max_residual = 0.0;   // max_n ||x_n - proj_V z_n||
    bool passed = true;
};

// Same preconditions as coupling_check; the altproj trace needs at least as many rows.
SpingarnReport spingarn_check(const Trace& spingarn, const Trace& altproj, double u_tol = tolerance::u_norm,
                              double tol = tolerance::coupling);

// <x - y, Tx - Ty> - ||Tx - Ty||^2 with T = J_B; nonnegative for firmly nonexpansive T.
double firm_margin(const ConeApprox& cone, const HilbertVector& x, const HilbertVector& y,
                   const NnlsOptions& options = {});

struct FirmAuditReport {
    double min_margin = 0.0;
    std::size_t samples = 0;
    bool passed = true;
};

/// Draws `samples` pairs with coordinates uniform in [-1, 1] from a
/// mt19937_64 seeded with `seed` and reports the smallest firm_margin.
/// Pairs are generated serially, so the report does not depend on the backend.
FirmAuditReport firm_nonexpansiveness_audit(const ConeApprox& cone, std::size_t samples, std::uint64_t seed,
                                            Backend backend = Backend::parallel,
                                            double tol = tolerance::firm_nonexpansive);

struct CoordinateDecay {
    std::size_t probe = 0;
    double early_max = 0.0;   // max_{n <= early_window} |<iterate_n, e_k>|
    double final_value = 0.0; // |<iterate_last, e_k>|
    bool decayed = false;     // final_value < early_max
};

struct WeakStrongReport {
    double norm_floor = 0.0;          // min_n norm_iterate
    std::size_t floor_index = 0;
    std::vector<CoordinateDecay> coordinates;
    bool floor_positive = false;
    bool all_decayed = false;
};

// Finite-horizon proxies for "weakly but not strongly": a positive norm floor
// together with decaying probe coordinates.
WeakStrongReport weak_strong_report(const Trace& trace, std::size_t early_window = 10);

} // namespace splitlab
