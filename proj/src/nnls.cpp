#include "splitlab/nnls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/QR>

#include "splitlab/errors.hpp"

namespace splitlab {

namespace {

Eigen::VectorXd solve_on_support(const Eigen::MatrixXd& gens, const std::vector<Eigen::Index>& support,
                                 const Eigen::VectorXd& b) {
    Eigen::MatrixXd sub(gens.rows(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t k = 0; k < support.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = gens.col(support[k]);
    return Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(sub).solve(b);
}

Eigen::VectorXd residual_of(const Eigen::MatrixXd& gens, const Eigen::VectorXd& lambda, const Eigen::VectorXd& b) {
    Eigen::VectorXd r = b;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda[i] != 0.0) r -= lambda[i] * gens.col(i);
    }
    return r;
}

} // namespace

Eigen::MatrixXd as_columns(std::span<const HilbertVector> vectors) {
    if (vectors.empty()) return {};
    const std::size_t dim = vectors.front().dim();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].dim() != dim) throw DimensionMismatch(dim, vectors[i].dim());
        out.col(static_cast<Eigen::Index>(i)) = vectors[i].coords();
    }
    return out;
}

NnlsResult nnls(std::span<const HilbertVector> gens, const HilbertVector& b, const NnlsOptions& options) {
    if (gens.empty()) throw DomainError("nnls: empty generator list");
    return nnls(as_columns(gens), b, options);
}

NnlsResult nnls(const Eigen::MatrixXd& gens, const HilbertVector& b, const NnlsOptions& options) {
    const Eigen::Index m = gens.cols();
    if (m == 0) throw DomainError("nnls: empty generator list");
    if (static_cast<std::size_t>(gens.rows()) != b.dim()) {
        throw DimensionMismatch(static_cast<std::size_t>(gens.rows()), b.dim());
    }
    const std::size_t cap = options.max_iterations > 0 ? options.max_iterations : 10 * static_cast<std::size_t>(m);

    const Eigen::VectorXd& rhs = b.coords();
    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd r = rhs;
    Eigen::VectorXd w;
    std::vector<Eigen::Index> passive;
    std::vector<char> in_passive(static_cast<std::size_t>(m), 0);
    // Entries rejected since lambda last moved.
    std::vector<char> excluded(static_cast<std::size_t>(m), 0);
    std::size_t iterations = 0;

    // Iterate down to the rounding floor, not just to kkt_tol.
    const double noise_floor = 16.0 * std::numeric_limits<double>::epsilon() * rhs.norm();
    const double threshold = std::min(options.kkt_tol, noise_floor);
    double residual = r.norm();

    for (;;) {
        kernels::dual_vector(options.backend, gens, r, w);

        Eigen::Index entering = -1;
        double best = threshold;
        for (Eigen::Index i = 0; i < m; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (in_passive[ui] || excluded[ui]) continue;
            if (w[i] > best) {
                best = w[i];
                entering = i;
            }
        }
        if (entering < 0) break;

        if (++iterations > cap) {
            throw NnlsNotConverged("nnls: no convergence within " + std::to_string(cap) + " iterations");
        }
        const std::vector<Eigen::Index> saved_passive = passive;
        const Eigen::VectorXd saved_lambda = lambda;
        passive.push_back(entering);
        in_passive[static_cast<std::size_t>(entering)] = 1;

        bool first_pass = true;
        bool rejected = false;
        for (;;) {
            const Eigen::VectorXd s = solve_on_support(gens, passive, rhs);
            if (first_pass && !(s[static_cast<Eigen::Index>(passive.size()) - 1] > 0.0)) {
                rejected = true;
                break;
            }
            first_pass = false;

            if ((s.array() > 0.0).all()) {
                for (std::size_t k = 0; k < passive.size(); ++k) lambda[passive[k]] = s[static_cast<Eigen::Index>(k)];
                break;
            }

            // Step from lambda toward s until the first coefficient hits zero.
            double alpha = 2.0;
            std::size_t blocking = 0;
            for (std::size_t k = 0; k < passive.size(); ++k) {
                const double sk = s[static_cast<Eigen::Index>(k)];
                if (sk > 0.0) continue;
                const double lk = lambda[passive[k]];
                const double ratio = lk > 0.0 ? lk / (lk - sk) : 0.0;
                if (ratio < alpha) {
                    alpha = ratio;
                    blocking = k;
                }
            }
            for (std::size_t k = 0; k < passive.size(); ++k) {
                double& lk = lambda[passive[k]];
                lk += alpha * (s[static_cast<Eigen::Index>(k)] - lk);
            }
            lambda[passive[blocking]] = 0.0;

            std::vector<Eigen::Index> kept;
            kept.reserve(passive.size());
            for (Eigen::Index idx : passive) {
                if (lambda[idx] > 0.0) {
                    kept.push_back(idx);
                } else {
                    lambda[idx] = 0.0;
                    in_passive[static_cast<std::size_t>(idx)] = 0;
                }
            }
            passive = std::move(kept);
            if (passive.empty()) break;
        }

        Eigen::VectorXd r_next;
        if (!rejected) {
            r_next = residual_of(gens, lambda, rhs);
            rejected = !(r_next.norm() < residual);
        }
        if (rejected) {
            for (Eigen::Index idx : passive) in_passive[static_cast<std::size_t>(idx)] = 0;
            passive = saved_passive;
            for (Eigen::Index idx : passive) in_passive[static_cast<std::size_t>(idx)] = 1;
            lambda = saved_lambda;
            excluded[static_cast<std::size_t>(entering)] = 1;
            continue;
        }
        std::fill(excluded.begin(), excluded.end(), 0);
        r = std::move(r_next);
        residual = r.norm();
    }

    NnlsResult result;
    result.coefficients.assign(lambda.data(), lambda.data() + lambda.size());
    result.residual_norm = residual_of(gens, lambda, rhs).norm();
    result.iterations = iterations;
    return result;
}

double kkt_violation(const Eigen::MatrixXd& gens, const HilbertVector& b, std::span<const double> lambda) {
    if (static_cast<std::size_t>(gens.cols()) != lambda.size()) {
        throw DimensionMismatch(static_cast<std::size_t>(gens.cols()), lambda.size());
    }
    if (static_cast<std::size_t>(gens.rows()) != b.dim()) {
        throw DimensionMismatch(static_cast<std::size_t>(gens.rows()), b.dim());
    }
    const Eigen::Map<const Eigen::VectorXd> lam(lambda.data(), static_cast<Eigen::Index>(lambda.size()));
    const Eigen::VectorXd r = residual_of(gens, lam, b.coords());
    double worst = 0.0;
    for (Eigen::Index i = 0; i < gens.cols(); ++i) {
        const double wi = gens.col(i).dot(r);
        worst = std::max(worst, wi);
        if (lam[i] > 0.0) worst = std::max(worst, std::abs(wi));
        if (lam[i] < 0.0) worst = std::max(worst, -lam[i]);
    }
    return worst;
}

} // namespace splitlab
