#include "splitlab/algorithms.hpp"

#include <string>

#include "splitlab/diagnostics.hpp"
#include "splitlab/errors.hpp"
#include "splitlab/operators.hpp"

namespace splitlab {

DRState dr_start(const ConeApprox& cone, const HilbertVector& y0, const NnlsOptions& options) {
    return DRState{0, y0, resolvent_B(cone, y0, options)};
}

DRState dr_step(const ConeApprox& cone, const DRState& s, const NnlsOptions& options) {
    if (s.x.dim() != s.y.dim()) throw DimensionMismatch(s.y.dim(), s.x.dim());
    const HilbertVector reflected = combine(2.0, s.x, -1.0, s.y);
    const HilbertVector y_next = (s.y + resolvent_A(reflected)) - s.x;
    return DRState{s.n + 1, y_next, resolvent_B(cone, y_next, options)};
}

SpingarnState spingarn_start(const HilbertVector& x0, const HilbertVector& u0) {
    if (x0.dim() != u0.dim()) throw DimensionMismatch(x0.dim(), u0.dim());
    if (!(proj_V(x0) == x0)) throw DomainError("spingarn: x0 must lie in V");
    if (!(proj_Vperp(u0) == u0)) throw DomainError("spingarn: u0 must lie in V^perp");
    return SpingarnState{0, x0, u0};
}

SpingarnState spingarn_step(const ConeApprox& cone, const SpingarnState& s, const NnlsOptions& options) {
    const HilbertVector w = s.x + s.u;
    const HilbertVector t = resolvent_B(cone, w, options);
    return SpingarnState{s.n + 1, proj_V(t), proj_Vperp(w - t)};
}

AltProjState altproj_start(const HilbertVector& z0) {
    return AltProjState{0, z0};
}

AltProjState altproj_step(const ConeApprox& cone, const AltProjState& s, const NnlsOptions& options) {
    return AltProjState{s.n + 1, project_cone(cone, proj_V(s.z), options)};
}

std::string_view to_string(Algorithm a) {
    switch (a) {
    case Algorithm::dr: return "dr";
    case Algorithm::spingarn: return "spingarn";
    case Algorithm::altproj: return "altproj";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    if (name == "dr") return Algorithm::dr;
    if (name == "spingarn") return Algorithm::spingarn;
    if (name == "altproj") return Algorithm::altproj;
    return std::nullopt;
}

HilbertVector default_init(std::size_t dim) {
    return basis_vector(2, dim);
}

namespace {

// z_0, ..., z_count
std::vector<HilbertVector> reference_sequence(const ConeApprox& cone, const HilbertVector& z0, std::size_t count,
                                              const NnlsOptions& options) {
    std::vector<HilbertVector> zs;
    zs.reserve(count + 1);
    AltProjState s = altproj_start(z0);
    zs.push_back(s.z);
    for (std::size_t i = 0; i < count; ++i) {
        s = altproj_step(cone, s, options);
        zs.push_back(s.z);
    }
    return zs;
}

TraceRow reference_row(std::size_t n, const std::vector<HilbertVector>& zs) {
    TraceRow row;
    row.n = n;
    row.v_residual = distance(proj_V(zs[n]), zs[n]);
    row.fejer_delta = norm(zs[n]) - norm(zs[n + 1]);
    return row;
}

} // namespace

Trace run(const ConeApprox& cone, Algorithm algorithm, const HilbertVector& init, std::size_t rows,
          const std::vector<std::size_t>& probes, const NnlsOptions& options) {
    if (rows == 0) throw DomainError("run: at least one iteration is required");
    if (init.dim() != cone.dim()) throw DimensionMismatch(cone.dim(), init.dim());
    for (std::size_t k : probes) {
        if (k >= cone.dim()) throw DomainError("run: probe index " + std::to_string(k) + " out of range");
    }

    Trace trace;
    trace.algorithm = algorithm;
    trace.xi_max = cone.xi_max();
    trace.grid_step = cone.step();
    trace.dim = cone.dim();
    trace.init = init;
    trace.probes = probes;
    trace.rows.reserve(rows);
    trace.iterates.reserve(rows);

    const std::vector<HilbertVector> zs = reference_sequence(cone, init, rows, options);

    switch (algorithm) {
    case Algorithm::altproj:
        for (std::size_t n = 0; n < rows; ++n) {
            TraceRow row = reference_row(n, zs);
            row.norm_iterate = norm(zs[n]);
            row.coord_proxies = weak_proxy(zs[n], probes);
            trace.rows.push_back(std::move(row));
            trace.iterates.push_back(zs[n]);
        }
        break;

    case Algorithm::dr: {
        DRState s = dr_start(cone, init, options);
        for (std::size_t n = 0; n < rows; ++n) {
            if (n > 0) s = dr_step(cone, s, options);
            TraceRow row = reference_row(n, zs);
            row.norm_iterate = norm(s.x);
            row.norm_y = norm(s.y);
            row.coupling_residual = distance(s.x, proj_V(zs[n + 1]));
            row.coord_proxies = weak_proxy(s.x, probes);
            trace.rows.push_back(std::move(row));
            trace.iterates.push_back(s.x);
            trace.governing.push_back(s.y);
        }
        break;
    }

    case Algorithm::spingarn: {
        SpingarnState s = spingarn_start(proj_V(init), proj_Vperp(init));
        for (std::size_t n = 0; n < rows; ++n) {
            if (n > 0) s = spingarn_step(cone, s, options);
            TraceRow row = reference_row(n, zs);
            row.norm_iterate = norm(s.x);
            row.u_norm = norm(s.u);
            row.coupling_residual = distance(s.x, proj_V(zs[n]));
            row.coord_proxies = weak_proxy(s.x, probes);
            trace.rows.push_back(std::move(row));
            trace.iterates.push_back(s.x);
            trace.governing.push_back(s.u);
        }
        break;
    }
    }
    return trace;
}

} // namespace splitlab
