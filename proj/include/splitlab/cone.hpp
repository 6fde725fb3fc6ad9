#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "splitlab/hilbert.hpp"
#include "splitlab/nnls.hpp"

namespace splitlab {

// Parameter xi >= 0 of the spiral curve
//   xi -> exp(-100 xi^3) e_0 + cos(pi t / 2) e_{floor(xi)+1} + sin(pi t / 2) e_{floor(xi)+2},
// with t = xi - floor(xi).
struct CurveParam {
    double xi;
    explicit CurveParam(double value);
};

// Point on the curve; needs floor(xi) + 2 < dim. Factors that underflow are kept as-is.
HilbertVector curve_point(CurveParam p, std::size_t dim);

// Smallest dimension that can hold curve points up to xi_max.
std::size_t min_dim_for(double xi_max);

/// Finitely generated inner approximation of the cone spanned by the curve.
///
/// Generators are unit-normalized curve points on the grid {0, step, 2 step, ..., xi_max}
/// (xi_max is always the last grid point), stored as the columns of a dense matrix.
class ConeApprox {
public:
    ConeApprox(double xi_max, double step, std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return xi_grid_.size(); }
    double xi_max() const { return xi_max_; }
    double step() const { return step_; }
    const std::vector<double>& xi_grid() const { return xi_grid_; }
    const Eigen::MatrixXd& generators() const { return generators_; }
    HilbertVector generator(std::size_t i) const;

    // Same construction parameters, hence the same generators.
    bool same_as(const ConeApprox& other) const {
        return dim_ == other.dim_ && xi_max_ == other.xi_max_ && step_ == other.step_;
    }

private:
    double xi_max_;
    double step_;
    std::size_t dim_;
    std::vector<double> xi_grid_;
    Eigen::MatrixXd generators_;
};

// Throws DomainError on xi_max <= 0, step outside (0, xi_max], or dim < min_dim_for(xi_max).
ConeApprox build_cone(double xi_max, double step, std::size_t dim);

// Euclidean projection onto the cone through NNLS on its generators.
HilbertVector project_cone(const ConeApprox& cone, const HilbertVector& x, const NnlsOptions& options = {});
NnlsResult cone_coefficients(const ConeApprox& cone, const HilbertVector& x, const NnlsOptions& options = {});

// Projection onto the cone generated by the columns of gens, via NNLS.
HilbertVector project_onto_generators(const Eigen::MatrixXd& gens, const HilbertVector& x,
                                      const NnlsOptions& options = {});

inline constexpr std::size_t kBruteForceMaxGenerators = 12;

/// Exhaustive projection oracle for small generator sets.
///
/// Tries every linearly independent subset of generators, solves the
/// unconstrained least-squares problem on it, and keeps candidates whose
/// coefficients are nonnegative and whose residual has nonpositive inner
/// product with every generator. Returns the candidate with the smallest
/// residual. Independent of the active-set path: no pivoting rule, no
/// incremental support. Throws DomainError above kBruteForceMaxGenerators.
HilbertVector project_bruteforce(const Eigen::MatrixXd& gens, const HilbertVector& x);
HilbertVector project_cone_bruteforce(const ConeApprox& cone, const HilbertVector& x);

} // namespace splitlab
