#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "splitlab/hilbert.hpp"
#include "splitlab/kernels.hpp"

namespace splitlab {

struct NnlsOptions {
    // Dual feasibility tolerance: the solver stops once <r, g_i> <= kkt_tol for every generator.
    double kkt_tol = 1e-12;
    // Cap on column additions; 0 means 10 * (number of generators).
    std::size_t max_iterations = 0;
    Backend backend = Backend::parallel;
};

struct NnlsResult {
    std::vector<double> coefficients; // one per generator, all >= 0
    double residual_norm = 0.0;       // ||b - sum_i coefficients[i] g_i||
    std::size_t iterations = 0;
};

/// Lawson-Hanson active-set solver for min ||G lambda - b|| subject to lambda >= 0.
///
/// Columns of `gens` are the generators g_i. The entering column is the one with
/// the largest dual value <r, g_i>; ties go to the lowest index. Least-squares
/// subproblems on the passive set are solved by column-pivoted Householder QR.
/// Iteration continues until no dual value exceeds min(kkt_tol, 16 eps ||b||);
/// an entering column that fails to lower the residual is set aside until the
/// next accepted step.
/// Throws NnlsNotConverged if the iteration cap is reached, DimensionMismatch if
/// b and the generators disagree in length, DomainError if there are no generators.
NnlsResult nnls(const Eigen::MatrixXd& gens, const HilbertVector& b, const NnlsOptions& options = {});
NnlsResult nnls(std::span<const HilbertVector> gens, const HilbertVector& b, const NnlsOptions& options = {});

// Largest violation of the NNLS optimality conditions for (gens, b, lambda):
// negative coefficients, positive dual values <b - G lambda, g_i>, and nonzero
// dual values on the support. Zero for an exact solution.
double kkt_violation(const Eigen::MatrixXd& gens, const HilbertVector& b, std::span<const double> lambda);

// Pack equal-length vectors as the columns of a matrix.
Eigen::MatrixXd as_columns(std::span<const HilbertVector> vectors);

} // namespace splitlab
