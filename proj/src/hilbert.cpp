#include "splitlab/hilbert.hpp"

#include <cmath>
#include <string>

#include "splitlab/errors.hpp"

namespace splitlab {

namespace {

void require_same_dim(const HilbertVector& u, const HilbertVector& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
}

} // namespace

HilbertVector::HilbertVector(Eigen::VectorXd coords) : coords_(std::move(coords)) {
    if (coords_.size() == 0) throw DomainError("HilbertVector: dimension must be positive");
    if (!coords_.allFinite()) throw DomainError("HilbertVector: non-finite coordinate");
}

HilbertVector::HilbertVector(std::vector<double> coords)
    : HilbertVector(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(coords.data(), static_cast<Eigen::Index>(coords.size())))) {}

HilbertVector HilbertVector::zeros(std::size_t dim) {
    return HilbertVector(Eigen::VectorXd(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim))));
}

HilbertVector HilbertVector::from(std::initializer_list<double> coords) {
    return HilbertVector(std::vector<double>(coords));
}

HilbertVector basis_vector(std::size_t k, std::size_t dim) {
    if (k >= dim) {
        throw DomainError("basis_vector: index " + std::to_string(k) + " out of range for dim " + std::to_string(dim));
    }
    Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    c[static_cast<Eigen::Index>(k)] = 1.0;
    return HilbertVector(std::move(c));
}

double inner(const HilbertVector& u, const HilbertVector& v) {
    require_same_dim(u, v);
    return u.coords().dot(v.coords());
}

double norm(const HilbertVector& u) {
    return u.coords().norm();
}

HilbertVector combine(double a, const HilbertVector& u, double b, const HilbertVector& v) {
    require_same_dim(u, v);
    return HilbertVector(Eigen::VectorXd(a * u.coords() + b * v.coords()));
}

HilbertVector operator+(const HilbertVector& u, const HilbertVector& v) {
    require_same_dim(u, v);
    return HilbertVector(Eigen::VectorXd(u.coords() + v.coords()));
}

HilbertVector operator-(const HilbertVector& u, const HilbertVector& v) {
    require_same_dim(u, v);
    return HilbertVector(Eigen::VectorXd(u.coords() - v.coords()));
}

HilbertVector operator*(double a, const HilbertVector& u) {
    return HilbertVector(Eigen::VectorXd(a * u.coords()));
}

double distance(const HilbertVector& u, const HilbertVector& v) {
    require_same_dim(u, v);
    return (u.coords() - v.coords()).norm();
}

HilbertVector proj_V(const HilbertVector& u) {
    Eigen::VectorXd c = u.coords();
    c[0] = 0.0;
    return HilbertVector(std::move(c));
}

HilbertVector proj_Vperp(const HilbertVector& u) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(u.coords().size());
    c[0] = u.coords()[0];
    return HilbertVector(std::move(c));
}

} // namespace splitlab
