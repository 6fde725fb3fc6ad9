#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Core>

namespace splitlab {

/// Element of the truncated separable Hilbert space span{e_0, ..., e_{N-1}}.
///
/// Coordinate k is <x, e_k>. Values are immutable once built; every binary
/// operation requires equal truncation levels and throws DimensionMismatch
/// otherwise. Entries must be finite.
class HilbertVector {
public:
    static HilbertVector zeros(std::size_t dim);
    static HilbertVector from(std::initializer_list<double> coords);

    explicit HilbertVector(std::vector<double> coords);
    explicit HilbertVector(Eigen::VectorXd coords);

    std::size_t dim() const { return static_cast<std::size_t>(coords_.size()); }
    double operator[](std::size_t k) const { return coords_[static_cast<Eigen::Index>(k)]; }
    const Eigen::VectorXd& coords() const { return coords_; }

    friend bool operator==(const HilbertVector& a, const HilbertVector& b) {
        return a.coords_ == b.coords_;
    }

private:
    Eigen::VectorXd coords_;
};

// e_k in dimension dim; throws DomainError unless k < dim.
HilbertVector basis_vector(std::size_t k, std::size_t dim);

double inner(const HilbertVector& u, const HilbertVector& v);
double norm(const HilbertVector& u);

// a*u + b*v
HilbertVector combine(double a, const HilbertVector& u, double b, const HilbertVector& v);
HilbertVector operator+(const HilbertVector& u, const HilbertVector& v);
HilbertVector operator-(const HilbertVector& u, const HilbertVector& v);
HilbertVector operator*(double a, const HilbertVector& u);

// ||u - v||
double distance(const HilbertVector& u, const HilbertVector& v);

// Projections onto V = {e_0}^perp and V^perp = span{e_0}. Both are pure
// coordinate selections, so proj_V(u) + proj_Vperp(u) == u bit for bit.
HilbertVector proj_V(const HilbertVector& u);
HilbertVector proj_Vperp(const HilbertVector& u);

} // namespace splitlab
