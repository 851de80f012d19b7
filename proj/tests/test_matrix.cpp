#include "doctest.h"

#include <cmath>

#include "qchan/matrix.hpp"
#include "qchan/tomography.hpp"
#include "test_helpers.hpp"

using namespace qchan;
using testutil::random_hermitian;
using testutil::random_matrix;
using testutil::random_psd;

TEST_CASE("kron of identities and Pauli eigenvectors") {
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    CHECK(kron(id2, id2).approx_equal(ComplexMatrix::identity(4), 1e-15));

    // Z (x) Z |11> = +|11>
    const ComplexMatrix zz = kron(gates::z(), gates::z());
    const ComplexMatrix ket11 = gates::basis_ket(2, 3);
    CHECK((zz * ket11).approx_equal(ket11, 1e-15));

    // H (x) H |00> = |++>, all four amplitudes 1/2
    const ComplexMatrix hh = kron(gates::h(), gates::h());
    const ComplexMatrix out = hh * gates::basis_ket(2, 0);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(out(i, 0) - cdouble(0.5)) < 1e-12);
}

TEST_CASE("kron associativity on random 2x2 inputs") {
    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_matrix(rng, 2, 2);
        const ComplexMatrix b = random_matrix(rng, 2, 2);
        const ComplexMatrix c = random_matrix(rng, 2, 2);
        CHECK(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))) < 1e-12);
    }
}

TEST_CASE("eigh reconstructs random Hermitian matrices") {
    Rng rng(12);
    for (std::size_t n : {2, 4, 8, 16}) {
        const ComplexMatrix m = random_hermitian(rng, n);
        const EigenSystem sys = eigh(m);
        ComplexMatrix rebuilt(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    rebuilt(r, c) += sys.values[k] * sys.vectors(r, k) * std::conj(sys.vectors(c, k));
        CHECK(rebuilt.max_abs_diff(m) < 1e-12);
        CHECK(sys.vectors.is_unitary(1e-12));
        for (std::size_t k = 1; k < n; ++k) CHECK(sys.values[k - 1] <= sys.values[k]);
    }
    CHECK_THROWS_AS(eigh(random_matrix(rng, 3, 3)), std::invalid_argument);
}

TEST_CASE("matrix_sqrt on diagonal and structured inputs") {
    CHECK(matrix_sqrt(ComplexMatrix::identity(4)).approx_equal(ComplexMatrix::identity(4), 1e-12));
    CHECK(matrix_sqrt(ComplexMatrix{{4.0, 0.0}, {0.0, 9.0}})
              .approx_equal(ComplexMatrix{{2.0, 0.0}, {0.0, 3.0}}, 1e-12));

    // chi of full phase damping: eigendecomposition gives diag(1/sqrt2, 0, 0, 1/sqrt2)
    const ComplexMatrix chi = kraus_to_chi(phase_damping_channel(1.0)).chi;
    const ComplexMatrix root = matrix_sqrt(chi);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(root.approx_equal(ComplexMatrix{{r, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, r}},
                            1e-12));
    CHECK((root * root).approx_equal(chi, 1e-12));
}

TEST_CASE("matrix_sqrt squares back to random PSD inputs") {
    Rng rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix m = random_psd(rng, 4);
        const ComplexMatrix s = matrix_sqrt(m);
        CHECK(s.is_hermitian(1e-10));
        CHECK((s * s).max_abs_diff(m) < 1e-8);
    }
}

TEST_CASE("matrix_sqrt rejects genuinely negative spectra") {
    CHECK_THROWS_AS(matrix_sqrt(ComplexMatrix{{1.0, 0.0}, {0.0, -0.5}}), std::domain_error);
}

TEST_CASE("solve_linear round trip and singular detection") {
    Rng rng(14);
    const ComplexMatrix a = random_matrix(rng, 6, 6);
    std::vector<cdouble> x_true(6);
    for (auto& v : x_true) v = cdouble(rng.uniform(), rng.uniform());
    std::vector<cdouble> b(6);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) b[r] += a(r, c) * x_true[c];
    const auto x = solve_linear(a, b);
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(x[i] - x_true[i]) < 1e-10);

    ComplexMatrix singular(2, 2);
    singular(0, 0) = 1.0;
    singular(1, 0) = 1.0;  // duplicate column direction
    CHECK_THROWS_AS(solve_linear(singular, {1.0, 0.0}), std::runtime_error);
}

TEST_CASE("approx_equal honors the explicit tolerance") {
    ComplexMatrix a = ComplexMatrix::identity(2);
    ComplexMatrix b = a;
    b(0, 0) += 5e-10;
    CHECK(a.approx_equal(b, 1e-9));
    CHECK_FALSE(a.approx_equal(b, 1e-10));
}
