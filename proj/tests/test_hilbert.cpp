#include <doctest.h>

#include <cmath>
#include <random>

#include "splitlab/errors.hpp"
#include "splitlab/hilbert.hpp"

using namespace splitlab;

namespace {

HilbertVector random_vector(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(dim);
    for (double& v : c) v = u(rng);
    return HilbertVector(std::move(c));
}

} // namespace

TEST_CASE("inner product on basis vectors") {
    const auto e0 = basis_vector(0, 6), e1 = basis_vector(1, 6), e2 = basis_vector(2, 6);
    CHECK(inner(e1, e1) == 1.0);
    CHECK(inner(e0, e1) == 0.0);
    CHECK(inner(combine(2.0, e1, 3.0, e2), e2) == 3.0);
    CHECK_THROWS_AS(inner(e1, basis_vector(1, 5)), DimensionMismatch);
}

TEST_CASE("norm") {
    CHECK(norm(basis_vector(2, 4)) == 1.0);
    CHECK(norm(HilbertVector::zeros(4)) == 0.0);
    CHECK(norm(combine(3.0, basis_vector(1, 4), 4.0, basis_vector(2, 4))) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("projections onto V and its complement") {
    const auto e0 = basis_vector(0, 5), e1 = basis_vector(1, 5), e2 = basis_vector(2, 5), e3 = basis_vector(3, 5);
    CHECK(proj_V(e0) == HilbertVector::zeros(5));
    CHECK(proj_V(e2) == e2);
    CHECK(proj_V(e0 + e1) == e1);
    CHECK(proj_Vperp(e0) == e0);
    CHECK(proj_Vperp(e2) == HilbertVector::zeros(5));
    CHECK(proj_Vperp(combine(2.0, e0, 5.0, e3)) == 2.0 * e0);
}

TEST_CASE("combine") {
    const auto e1 = basis_vector(1, 4), e2 = basis_vector(2, 4);
    CHECK(combine(1.0, e1, 1.0, e2) == HilbertVector::from({0, 1, 1, 0}));
    CHECK(combine(2.0, e1, 0.0, e2) == 2.0 * e1);
    const auto x = HilbertVector::from({0.3, -1.7, 2.2, 1e-300});
    CHECK(combine(1.0, x, -1.0, x) == HilbertVector::zeros(4));
    CHECK_THROWS_AS(combine(1.0, e1, 1.0, basis_vector(1, 3)), DimensionMismatch);
}

TEST_CASE("basis_vector range") {
    CHECK(basis_vector(2, 8)[2] == 1.0);
    CHECK(basis_vector(0, 4)[0] == 1.0);
    CHECK_THROWS_AS(basis_vector(4, 4), DomainError);
}

TEST_CASE("construction rejects empty and non-finite coordinates") {
    CHECK_THROWS_AS(HilbertVector(std::vector<double>{}), DomainError);
    CHECK_THROWS_AS(HilbertVector::from({1.0, NAN}), DomainError);
    CHECK_THROWS_AS(HilbertVector::from({INFINITY}), DomainError);
}

TEST_CASE("projection properties on random vectors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t dim = 1 + trial % 40;
        const auto u = random_vector(rng, dim);
        const auto v = random_vector(rng, dim);
        const auto pu = proj_V(u);

        CHECK(proj_V(pu) == pu);
        CHECK(std::abs(inner(u - pu, pu)) <= 1e-12 * std::max(1.0, norm(u) * norm(u)));
        CHECK(proj_V(u) + proj_Vperp(u) == u);
        CHECK(norm(proj_V(u) - proj_V(v)) <= norm(u - v) + 1e-12);
        CHECK(inner(u, v) == inner(v, u));
        CHECK(std::abs(inner(u, v)) <= norm(u) * norm(v) + 1e-12);
    }
}
