#include "fluxlink/linalg.hpp"

#include "fluxlink/errors.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace fluxlink;
using testutil::make_rng;
using testutil::random_hermitian;
using testutil::random_matrix;
using testutil::random_psd;

namespace {

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m(0, 1) = cxd(0.0, -1.0);
    m(1, 0) = cxd(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

} // namespace

TEST_CASE("kron: identity times identity") {
    ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("kron: sigma_y tensor sigma_y is the anti-diagonal (-1,1,1,-1)") {
    ComplexMatrix yy = kron(pauli_y(), pauli_y());
    ComplexMatrix expected(4, 4);
    expected(0, 3) = -1.0;
    expected(1, 2) = 1.0;
    expected(2, 1) = 1.0;
    expected(3, 0) = -1.0;
    CHECK(max_abs_diff(yy, expected) < 1e-15);
}

TEST_CASE("kron: mixed-product identity on random 2x2 blocks") {
    auto rng = make_rng();
    for (int rep = 0; rep < 20; ++rep) {
        ComplexMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
        ComplexMatrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
        CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-13);
    }
}

TEST_CASE("kron: associativity exact on integer-valued inputs") {
    auto rng = make_rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    ComplexMatrix a(2, 3), b(3, 2), c(2, 2);
    auto fill = [&](ComplexMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = cxd(dist(rng), dist(rng));
    };
    fill(a);
    fill(b);
    fill(c);
    CHECK(max_abs_diff(kron(a, kron(b, c)), kron(kron(a, b), c)) == 0.0);
}

TEST_CASE("herm_eig: identity") {
    EigenDecomposition dec = herm_eig(ComplexMatrix::identity(4));
    for (double lam : dec.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("herm_eig: sigma_y spectrum is (-1, +1)") {
    EigenDecomposition dec = herm_eig(pauli_y());
    REQUIRE(dec.eigenvalues.size() == 2);
    CHECK(dec.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(dec.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("herm_eig: reconstruction and orthonormality on random Hermitian") {
    auto rng = make_rng();
    for (std::size_t n : {2u, 3u, 6u, 12u}) {
        ComplexMatrix a = random_hermitian(rng, n);
        EigenDecomposition dec = herm_eig(a);
        const ComplexMatrix& v = dec.eigenvectors;

        ComplexMatrix rebuilt(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) rebuilt(i, k) = v(i, k) * dec.eigenvalues[k];
        rebuilt = rebuilt * v.dagger();
        CHECK(max_abs_diff(rebuilt, a) < 1e-10 * std::max(1.0, a.max_abs()));
        CHECK(max_abs_diff(v.dagger() * v, ComplexMatrix::identity(n)) < 1e-10);

        // eigenvalues ascending
        for (std::size_t k = 1; k < n; ++k) CHECK(dec.eigenvalues[k] >= dec.eigenvalues[k - 1]);
    }
}

TEST_CASE("herm_eig: rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(herm_eig(m), NonHermitianInput);
}

TEST_CASE("sqrtm_psd: diagonal and identity cases") {
    ComplexMatrix d(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    ComplexMatrix r = sqrtm_psd(d);
    CHECK(r(0, 0).real() == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r(1, 1).real() == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(std::abs(r(0, 1)) < 1e-13);

    CHECK(max_abs_diff(sqrtm_psd(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) < 1e-12);
}

TEST_CASE("sqrtm_psd: squaring oracle on random PSD, output Hermitian PSD") {
    auto rng = make_rng();
    for (int rep = 0; rep < 10; ++rep) {
        ComplexMatrix b = random_psd(rng, 5);
        ComplexMatrix r = sqrtm_psd(b);
        CHECK(max_abs_diff(r * r, b) < 1e-8 * std::max(1.0, b.max_abs()));
        CHECK(r.hermiticity_defect() < 1e-12 * std::max(1.0, r.max_abs()));
        EigenDecomposition dec = herm_eig(r);
        CHECK(dec.eigenvalues.front() >= -1e-10);
    }
}

TEST_CASE("sqrtm_psd: rejects indefinite input") {
    CHECK_THROWS_AS(sqrtm_psd(pauli_z()), NotPositiveSemidefinite);
}

TEST_CASE("expm_herm_scaled: zero scale gives identity") {
    auto rng = make_rng();
    ComplexMatrix h = random_hermitian(rng, 4);
    CHECK(max_abs_diff(expm_herm_scaled(h, 0.0), ComplexMatrix::identity(4)) < 1e-12);
}

TEST_CASE("expm_herm_scaled: exp(-i pi sigma_y / 2) is the rotation [[0,-1],[1,0]]") {
    const double pi = 3.14159265358979323846;
    ComplexMatrix u = expm_herm_scaled(pauli_y(), cxd(0.0, -pi / 2.0));
    ComplexMatrix expected(2, 2);
    expected(0, 1) = -1.0;
    expected(1, 0) = 1.0;
    CHECK(max_abs_diff(u, expected) < 1e-12);
}

TEST_CASE("expm_herm_scaled: unitary for s = -0.01i") {
    auto rng = make_rng();
    for (std::size_t n : {3u, 8u}) {
        ComplexMatrix h = random_hermitian(rng, n);
        ComplexMatrix u = expm_herm_scaled(h, cxd(0.0, -0.01));
        CHECK(max_abs_diff(u.dagger() * u, ComplexMatrix::identity(n)) < 1e-10);
    }
}

TEST_CASE("commutator: [A,A]=0 and [sigma_x, sigma_y] = 2i sigma_z") {
    auto rng = make_rng();
    ComplexMatrix a = random_matrix(rng, 4, 4);
    CHECK(commutator(a, a).max_abs() < 1e-14);

    ComplexMatrix lhs = commutator(pauli_x(), pauli_y());
    ComplexMatrix rhs = cxd(0.0, 2.0) * pauli_z();
    CHECK(max_abs_diff(lhs, rhs) < 1e-15);
}

TEST_CASE("commutator: Leibniz rule on random 3x3") {
    auto rng = make_rng();
    for (int rep = 0; rep < 10; ++rep) {
        ComplexMatrix a = random_matrix(rng, 3, 3);
        ComplexMatrix b = random_matrix(rng, 3, 3);
        ComplexMatrix c = random_matrix(rng, 3, 3);
        ComplexMatrix lhs = commutator(a, b * c);
        ComplexMatrix rhs = commutator(a, b) * c + b * commutator(a, c);
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("commutator: dimension mismatch rejected") {
    CHECK_THROWS_AS(commutator(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                    DimensionMismatch);
}

TEST_CASE("trace cyclicity on random square pairs") {
    auto rng = make_rng();
    for (int rep = 0; rep < 10; ++rep) {
        ComplexMatrix a = random_matrix(rng, 5, 5);
        ComplexMatrix b = random_matrix(rng, 5, 5);
        CHECK(std::abs((a * b).trace() - (b * a).trace()) < 1e-10);
    }
}
