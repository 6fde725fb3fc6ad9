#include "splitlab/cone.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/QR>

#include "splitlab/errors.hpp"

namespace splitlab {

CurveParam::CurveParam(double value) : xi(value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw DomainError("curve parameter must be finite and nonnegative, got " + std::to_string(value));
    }
}

std::size_t min_dim_for(double xi_max) {
    return static_cast<std::size_t>(std::floor(xi_max)) + 3;
}

HilbertVector curve_point(CurveParam p, std::size_t dim) {
    const double whole = std::floor(p.xi);
    const auto k = static_cast<std::size_t>(whole);
    if (k + 2 >= dim) {
        throw DomainError("curve_point: xi = " + std::to_string(p.xi) + " needs dim >= " + std::to_string(k + 3) +
                          ", got " + std::to_string(dim));
    }
    const double angle = std::numbers::pi * (p.xi - whole) / 2.0;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    c[0] = std::exp(-100.0 * p.xi * p.xi * p.xi);
    c[static_cast<Eigen::Index>(k + 1)] = std::cos(angle);
    c[static_cast<Eigen::Index>(k + 2)] = std::sin(angle);
    return HilbertVector(std::move(c));
}

ConeApprox::ConeApprox(double xi_max, double step, std::size_t dim) : xi_max_(xi_max), step_(step), dim_(dim) {
    if (!std::isfinite(xi_max) || !(xi_max > 0.0)) throw DomainError("build_cone: xi_max must be positive");
    if (!std::isfinite(step) || !(step > 0.0) || step > xi_max) {
        throw DomainError("build_cone: step must lie in (0, xi_max]");
    }
    if (dim < min_dim_for(xi_max)) {
        throw DomainError("build_cone: xi_max = " + std::to_string(xi_max) + " needs dim >= " +
                          std::to_string(min_dim_for(xi_max)) + ", got " + std::to_string(dim));
    }

    // i * step, with anything within 1e-9 * step of xi_max snapped onto it.
    const double slack = 1e-9 * step;
    for (std::size_t i = 0;; ++i) {
        const double xi = static_cast<double>(i) * step;
        if (xi >= xi_max - slack) break;
        xi_grid_.push_back(xi);
    }
    xi_grid_.push_back(xi_max);

    generators_.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(xi_grid_.size()));
    for (std::size_t i = 0; i < xi_grid_.size(); ++i) {
        const HilbertVector point = curve_point(CurveParam(xi_grid_[i]), dim);
        generators_.col(static_cast<Eigen::Index>(i)) = point.coords() / norm(point);
    }
}

HilbertVector ConeApprox::generator(std::size_t i) const {
    if (i >= size()) throw DomainError("generator index out of range");
    return HilbertVector(Eigen::VectorXd(generators_.col(static_cast<Eigen::Index>(i))));
}

ConeApprox build_cone(double xi_max, double step, std::size_t dim) {
    return ConeApprox(xi_max, step, dim);
}

HilbertVector project_onto_generators(const Eigen::MatrixXd& gens, const HilbertVector& x, const NnlsOptions& options) {
    const NnlsResult sol = nnls(gens, x, options);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(gens.rows());
    for (Eigen::Index i = 0; i < gens.cols(); ++i) {
        const double li = sol.coefficients[static_cast<std::size_t>(i)];
        if (li != 0.0) p += li * gens.col(i);
    }
    return HilbertVector(std::move(p));
}

NnlsResult cone_coefficients(const ConeApprox& cone, const HilbertVector& x, const NnlsOptions& options) {
    if (x.dim() != cone.dim()) throw DimensionMismatch(cone.dim(), x.dim());
    return nnls(cone.generators(), x, options);
}

HilbertVector project_cone(const ConeApprox& cone, const HilbertVector& x, const NnlsOptions& options) {
    if (x.dim() != cone.dim()) throw DimensionMismatch(cone.dim(), x.dim());
    return project_onto_generators(cone.generators(), x, options);
}

HilbertVector project_bruteforce(const Eigen::MatrixXd& gens, const HilbertVector& x) {
    const auto m = static_cast<std::size_t>(gens.cols());
    if (m > kBruteForceMaxGenerators) {
        throw DomainError("project_bruteforce: " + std::to_string(m) + " generators exceeds the enumeration bound of " +
                          std::to_string(kBruteForceMaxGenerators));
    }
    if (static_cast<std::size_t>(gens.rows()) != x.dim()) {
        throw DimensionMismatch(static_cast<std::size_t>(gens.rows()), x.dim());
    }
    const Eigen::VectorXd& b = x.coords();
    const double tol = 1e-10 * std::max(1.0, b.norm());

    double best_residual = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best;

    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<Eigen::Index> cols;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (1u << i)) cols.push_back(static_cast<Eigen::Index>(i));
        }
        if (cols.size() > static_cast<std::size_t>(gens.rows())) continue;

        Eigen::VectorXd candidate = Eigen::VectorXd::Zero(gens.rows());
        if (!cols.empty()) {
            Eigen::MatrixXd sub(gens.rows(), static_cast<Eigen::Index>(cols.size()));
            for (std::size_t k = 0; k < cols.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = gens.col(cols[k]);
            const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub);
            if (qr.rank() < sub.cols()) continue;
            const Eigen::VectorXd coef = qr.solve(b);
            if ((coef.array() < 0.0).any()) continue;
            candidate = sub * coef;
        }

        const Eigen::VectorXd r = b - candidate;
        if ((gens.transpose() * r).maxCoeff() > tol) continue;
        const double res = r.norm();
        if (res < best_residual) {
            best_residual = res;
            best = std::move(candidate);
        }
    }
    if (best.size() == 0) throw std::runtime_error("project_bruteforce: no subset satisfied the optimality conditions");
    return HilbertVector(std::move(best));
}

HilbertVector project_cone_bruteforce(const ConeApprox& cone, const HilbertVector& x) {
    if (x.dim() != cone.dim()) throw DimensionMismatch(cone.dim(), x.dim());
    return project_bruteforce(cone.generators(), x);
}

} // namespace splitlab
