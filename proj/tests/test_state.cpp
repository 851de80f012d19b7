#include "doctest.h"

#include <cmath>

#include "qchan/state.hpp"
#include "test_helpers.hpp"

using namespace qchan;

namespace {

const ComplexMatrix kHalfIdentity = 0.5 * ComplexMatrix::identity(2);

DensityState bell_phi_plus() {
    ComplexMatrix v(4, 1);
    v(0, 0) = v(3, 0) = 1.0 / std::sqrt(2.0);
    return density_from_ket(v);
}

}  // namespace

TEST_CASE("partial_trace of product and entangled states") {
    const DensityState zz = density_from_ket(gates::basis_ket(2, 0));
    CHECK(partial_trace(zz, {0}).matrix.approx_equal(outer(gates::ket0(), gates::ket0()), 1e-14));

    CHECK(partial_trace(bell_phi_plus(), {0}).matrix.approx_equal(kHalfIdentity, 1e-14));
    CHECK(partial_trace(bell_phi_plus(), {1}).matrix.approx_equal(kHalfIdentity, 1e-14));
}

TEST_CASE("single-qubit marginals of the four-qubit cluster are maximally mixed") {
    // oracle: brute-force reduction of the hand-expanded amplitude table
    const DensityState psi = density_from_ket(testutil::cluster_amplitude_table());
    for (int q = 0; q < 4; ++q)
        CHECK(partial_trace(psi, {q}).matrix.approx_equal(kHalfIdentity, 1e-12));
}

TEST_CASE("partial_trace keeps trace and full keep set is identity") {
    Rng rng(21);
    const DensityState rho = testutil::random_density(rng, 3);
    CHECK(partial_trace(rho, {0, 1, 2}).matrix.approx_equal(rho.matrix, 1e-14));
    for (const auto& keep : std::vector<std::vector<int>>{{0}, {1, 2}, {0, 2}}) {
        const double tr = partial_trace(rho, keep).matrix.trace().real();
        CHECK(std::abs(tr - rho.matrix.trace().real()) < 1e-12);
    }
    CHECK_THROWS_AS(partial_trace(rho, {3}), std::out_of_range);
    CHECK_THROWS_AS(partial_trace(rho, {}), std::out_of_range);
}

TEST_CASE("project on simple states") {
    const DensityState plus = density_from_ket(gates::ket_plus());
    auto [p0, post0] = project(plus, 0, gates::ket0());
    CHECK(p0 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(post0.num_qubits == 0);
    CHECK(std::abs(post0.matrix(0, 0) - cdouble(0.5)) < 1e-12);

    const DensityState zz = density_from_ket(gates::basis_ket(2, 0));
    auto [p1, post1] = project(zz, 0, gates::ket1());
    CHECK(p1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(post1.matrix.max_abs() < 1e-12);
}

TEST_CASE("projecting cluster qubit 1 in B(0) is unbiased") {
    const DensityState psi = density_from_ket(testutil::cluster_amplitude_table());
    const auto [prob, post] = project(psi, 0, EquatorialBasis{0.0}.direction(0));
    CHECK(prob == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(post.num_qubits == 3);
}

TEST_CASE("branch probabilities sum to one and branches rebuild the marginal") {
    Rng rng(22);
    for (int rep = 0; rep < 5; ++rep) {
        const DensityState rho = testutil::random_density(rng, 2);
        const int qubit = rep % 2;
        // random direction and its orthogonal partner
        const ComplexMatrix d0 = EquatorialBasis{rng.uniform() * 6.28}.direction(0);
        ComplexMatrix d1(2, 1);
        d1(0, 0) = -std::conj(d0(1, 0));
        d1(1, 0) = std::conj(d0(0, 0));

        auto [prob0, post0] = project(rho, qubit, d0);
        auto [prob1, post1] = project(rho, qubit, d1);
        CHECK(prob0 + prob1 == doctest::Approx(1.0).epsilon(1e-12));

        const DensityState marginal = partial_trace(rho, {1 - qubit});
        CHECK((post0.matrix + post1.matrix).max_abs_diff(marginal.matrix) < 1e-12);
    }
}

TEST_CASE("project validates its direction") {
    const DensityState plus = density_from_ket(gates::ket_plus());
    CHECK_THROWS_AS(project(plus, 0, ComplexMatrix::column({1.0, 1.0})), std::invalid_argument);
    CHECK_THROWS_AS(project(plus, 1, gates::ket0()), std::out_of_range);
}

TEST_CASE("density state validity checks") {
    const DensityState pure = density_from_ket(gates::ket_plus());
    CHECK(pure.is_valid());
    DensityState half = pure;
    half.matrix = half.matrix * cdouble(0.5);
    CHECK_FALSE(half.is_valid());
    CHECK(half.is_valid(/*branch_form=*/true));
}
