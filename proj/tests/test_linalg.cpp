#include <doctest.h>

#include <cstring>
#include <limits>
#include <random>

#include "ltpss/errors.hpp"
#include "ltpss/linalg.hpp"
#include "test_support.hpp"

using namespace ltpss;
using ltpss::testing::random_matrix;

namespace {

void check_decomposition(const Matrix& a, const SpectralDecomposition& dec) {
    const auto n = a.rows();
    CHECK((dec.u.transpose() * dec.u - Matrix::Identity(n, n)).norm() < 1e-10);
    CHECK((dec.v.transpose() * dec.v - Matrix::Identity(n, n)).norm() < 1e-10);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        CHECK(dec.sigma(i) >= dec.sigma(i + 1));
    }
    CHECK(dec.sigma.minCoeff() >= 0.0);
    const double denom = a.norm() > 0 ? a.norm() : 1.0;
    CHECK((dec.reconstruct() - a).norm() / denom < 1e-10);
    // Sign convention: largest-magnitude entry of each u column non-negative.
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::Index pivot = 0;
        for (Eigen::Index i = 1; i < n; ++i) {
            if (std::abs(dec.u(i, j)) > std::abs(dec.u(pivot, j))) pivot = i;
        }
        CHECK(dec.u(pivot, j) >= 0.0);
    }
}

}  // namespace

TEST_CASE("svd of identity") {
    const Matrix eye = Matrix::Identity(3, 3);
    const auto dec = svd(eye);
    CHECK((dec.u - eye).norm() < 1e-12);
    CHECK((dec.v - eye).norm() < 1e-12);
    CHECK((dec.sigma - Vector::Ones(3)).norm() < 1e-12);
}

TEST_CASE("svd of signed diagonal absorbs signs into the vectors") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = -3.0;
    const auto dec = svd(a);
    CHECK(dec.sigma(0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(dec.sigma(1) == doctest::Approx(2.0).epsilon(1e-12));
    check_decomposition(a, dec);
}

TEST_CASE("svd of the zero matrix") {
    const Matrix z = Matrix::Zero(4, 4);
    const auto dec = svd(z);
    CHECK(dec.sigma.isZero(0.0));
    CHECK((dec.u - Matrix::Identity(4, 4)).norm() < 1e-12);
    CHECK((dec.v - Matrix::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("svd rejects bad input") {
    CHECK_THROWS_AS(svd(Matrix::Zero(2, 3)), ValidationError);
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(svd(bad), NumericalError);
}

TEST_CASE("svd invariants on random matrices") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 25; ++rep) {
        const Matrix a = random_matrix(rng, 2 + rep % 9);
        check_decomposition(a, svd(a));
    }
}

TEST_CASE("svd is byte-deterministic") {
    std::mt19937 rng(11);
    const Matrix a = random_matrix(rng, 8);
    const auto d1 = svd(a);
    const auto d2 = svd(a);
    CHECK(std::memcmp(d1.u.data(), d2.u.data(), sizeof(double) * 64) == 0);
    CHECK(std::memcmp(d1.v.data(), d2.v.data(), sizeof(double) * 64) == 0);
    CHECK(std::memcmp(d1.sigma.data(), d2.sigma.data(), sizeof(double) * 8) == 0);
}

TEST_CASE("trace_inner") {
    CHECK(trace_inner(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) == 2.0);
    CHECK(trace_inner(Matrix::Random(3, 3), Matrix::Zero(3, 3)) == 0.0);
    Matrix a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 5, 6, 7, 8;
    CHECK(trace_inner(a, b) == 70.0);
    CHECK(trace_inner(a, b) == trace_inner(b, a));
    CHECK_THROWS_AS(trace_inner(a, Matrix::Zero(3, 3)), ValidationError);
}

TEST_CASE("norms on fixed matrices") {
    const auto id = norms(Matrix::Identity(3, 3));
    CHECK(id.frobenius == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(id.nuclear == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(id.spectral == doctest::Approx(1.0).epsilon(1e-12));

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = -3.0;
    const auto nd = norms(d);
    CHECK(nd.frobenius == doctest::Approx(std::sqrt(13.0)).epsilon(1e-12));
    CHECK(nd.nuclear == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(nd.spectral == doctest::Approx(3.0).epsilon(1e-12));

    const auto z = norms(Matrix::Zero(3, 3));
    CHECK(z.frobenius == 0.0);
    CHECK(z.nuclear == 0.0);
    CHECK(z.spectral == 0.0);
}

TEST_CASE("norm ordering: nuclear >= frobenius >= spectral") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 30; ++rep) {
        const auto nm = norms(random_matrix(rng, 2 + rep % 7));
        CHECK(nm.nuclear >= nm.frobenius - 1e-12);
        CHECK(nm.frobenius >= nm.spectral - 1e-12);
    }
    // Rank-one: all three coincide.
    const Vector u = Vector::Random(5).normalized();
    const Vector v = Vector::Random(5).normalized();
    const auto nm = norms(2.5 * u * v.transpose());
    CHECK(nm.nuclear == doctest::Approx(nm.spectral).epsilon(1e-10));
    CHECK(nm.frobenius == doctest::Approx(nm.spectral).epsilon(1e-10));
}

TEST_CASE("Hoelder bound tr(L Pi) <= ||L||_2 ||Pi||_*") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        const Eigen::Index n = 2 + rep % 6;
        Matrix l = random_matrix(rng, n);
        const double sn = norms(l).spectral;
        if (sn > 0) l /= sn;  // now ||L||_2 = 1
        const Matrix pi = random_matrix(rng, n);
        const double lhs = trace_inner(l.transpose(), pi);
        CHECK(lhs <= norms(l).spectral * norms(pi).nuclear + 1e-10);
    }
}
