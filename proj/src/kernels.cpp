#include "splitlab/kernels.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace splitlab::kernels {

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

bool in_parallel() {
#if defined(_OPENMP)
    return omp_in_parallel();
#else
    return false;
#endif
}

void dual_vector_serial(const Eigen::MatrixXd& gens, const Eigen::VectorXd& r, Eigen::VectorXd& w) {
    const Eigen::Index m = gens.cols();
    w.resize(m);
    for (Eigen::Index j = 0; j < m; ++j) w[j] = gens.col(j).dot(r);
}

void dual_vector_parallel(const Eigen::MatrixXd& gens, const Eigen::VectorXd& r, Eigen::VectorXd& w) {
    const Eigen::Index m = gens.cols();
    w.resize(m);
    if (in_parallel() || max_threads() == 1) {
        for (Eigen::Index j = 0; j < m; ++j) w[j] = gens.col(j).dot(r);
        return;
    }
#pragma omp parallel for schedule(static)
    for (Eigen::Index j = 0; j < m; ++j) w[j] = gens.col(j).dot(r);
}

void dual_vector(Backend backend, const Eigen::MatrixXd& gens, const Eigen::VectorXd& r, Eigen::VectorXd& w) {
    if (backend == Backend::serial) {
        dual_vector_serial(gens, r, w);
    } else {
        dual_vector_parallel(gens, r, w);
    }
}

void for_each_index(Backend backend, std::size_t n, const std::function<void(std::size_t)>& f) {
    const auto count = static_cast<long long>(n);
    if (backend == Backend::serial || in_parallel()) {
        for (long long i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
        return;
    }
    // Exceptions may not cross the parallel region; keep the first and rethrow.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(splitlab_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

double min_over(Backend backend, std::size_t n, const std::function<double(std::size_t)>& f) {
    // Serial reduction: thread-count independent.
    std::vector<double> out(n);
    for_each_index(backend, n, [&](std::size_t i) { out[i] = f(i); });
    double lo = std::numeric_limits<double>::infinity();
    for (double v : out) lo = std::min(lo, v);
    return lo;
}

} // namespace splitlab::kernels
