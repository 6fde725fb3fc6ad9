#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitlab/cone.hpp"
#include "splitlab/hilbert.hpp"

namespace splitlab {

// Douglas-Rachford state: governing sequence y_n and shadow x_n = J_B y_n.
struct DRState {
    std::size_t n = 0;
    HilbertVector y;
    HilbertVector x;
};

// Partial-inverse state: x_n in V, u_n in V^perp.
struct SpingarnState {
    std::size_t n = 0;
    HilbertVector x;
    HilbertVector u;
};

// Alternating-projection reference sequence z_{n+1} = proj_K(proj_V z_n).
struct AltProjState {
    std::size_t n = 0;
    HilbertVector z;
};

DRState dr_start(const ConeApprox& cone, const HilbertVector& y0, const NnlsOptions& options = {});
// y' = y + J_A(2x - y) - x, then x' = J_B(y'). Unrelaxed, in the (y, x) form.
DRState dr_step(const ConeApprox& cone, const DRState& s, const NnlsOptions& options = {});

// Throws DomainError unless x0 in V and u0 in V^perp.
SpingarnState spingarn_start(const HilbertVector& x0, const HilbertVector& u0);
// x' = proj_V(J_B(x + u)), u' = proj_Vperp(J_{B^{-1}}(x + u)).
SpingarnState spingarn_step(const ConeApprox& cone, const SpingarnState& s, const NnlsOptions& options = {});

AltProjState altproj_start(const HilbertVector& z0);
AltProjState altproj_step(const ConeApprox& cone, const AltProjState& s, const NnlsOptions& options = {});

enum class Algorithm { dr, spingarn, altproj };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// One record per recorded iterate. Quantities that do not apply to an
/// algorithm are 0.
struct TraceRow {
    std::size_t n = 0;
    double norm_iterate = 0.0;       // ||x_n|| (dr, spingarn) or ||z_n|| (altproj)
    double norm_y = 0.0;             // ||y_n||, dr only
    double u_norm = 0.0;             // ||u_n||, spingarn only
    double v_residual = 0.0;         // ||proj_V z_n - z_n|| of the reference sequence
    double fejer_delta = 0.0;        // ||z_n|| - ||z_{n+1}|| of the reference sequence
    double coupling_residual = 0.0;  // dr: ||x_n - proj_V z_{n+1}||, spingarn: ||x_n - proj_V z_n||
    std::vector<double> coord_proxies; // <iterate, e_k> for each probe k
};

/// Output of run(): rows plus everything needed to compare traces.
///
/// `iterates` holds the primary sequence (x_n for dr and spingarn, z_n for
/// altproj); `governing` holds y_n for dr and u_n for spingarn, and is empty
/// for altproj. dr and spingarn runs carry the alternating-projection
/// sequence started from `init` alongside, which fills the reference columns.
struct Trace {
    Algorithm algorithm = Algorithm::altproj;
    double xi_max = 0.0;
    double grid_step = 0.0;
    std::size_t dim = 0;
    HilbertVector init = HilbertVector::zeros(1);
    std::vector<std::size_t> probes;
    std::vector<TraceRow> rows;
    std::vector<HilbertVector> iterates;
    std::vector<HilbertVector> governing;
};

// Default starting point e_2: y_0 for dr, z_0 for altproj, (x_0, u_0) = (e_2, 0) for spingarn.
HilbertVector default_init(std::size_t dim);

/// Runs `rows` iterates n = 0, ..., rows - 1 of the chosen algorithm.
///
/// For spingarn the start is split as x_0 = proj_V(init), u_0 = proj_Vperp(init).
/// The budget is exact: there is no early stop. Throws DomainError for
/// rows == 0 or an out-of-range probe, and propagates solver failures.
Trace run(const ConeApprox& cone, Algorithm algorithm, const HilbertVector& init, std::size_t rows,
          const std::vector<std::size_t>& probes, const NnlsOptions& options = {});

} // namespace splitlab
