#pragma once

#include <cstddef>
#include <functional>

#include <Eigen/Core>

namespace splitlab {

// Which implementation of a data-parallel kernel to run. The serial variants
// are the reference that the parallel ones are tested against.
enum class Backend { serial, parallel };

namespace kernels {

int max_threads();
bool in_parallel();

// w_j = <g_j, r> for every column g_j of gens. Each entry is computed by the
// same instruction sequence on either backend, so results agree bit for bit.
void dual_vector_serial(const Eigen::MatrixXd& gens, const Eigen::VectorXd& r, Eigen::VectorXd& w);
void dual_vector_parallel(const Eigen::MatrixXd& gens, const Eigen::VectorXd& r, Eigen::VectorXd& w);
void dual_vector(Backend backend, const Eigen::MatrixXd& gens, const Eigen::VectorXd& r, Eigen::VectorXd& w);

// out[i] = f(i) for i in [0, n), then min over out. Falls back to a plain loop
// when already inside a parallel region.
double min_over(Backend backend, std::size_t n, const std::function<double(std::size_t)>& f);

// f(i) for i in [0, n), no result.
void for_each_index(Backend backend, std::size_t n, const std::function<void(std::size_t)>& f);

} // namespace kernels
} // namespace splitlab
