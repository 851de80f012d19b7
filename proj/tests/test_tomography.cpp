#include "doctest.h"

#include <cmath>

#include "qchan/noise.hpp"
#include "qchan/tomography.hpp"
#include "test_helpers.hpp"

using namespace qchan;

namespace {

// Independent chi oracle: expand each Kraus operator entrywise (not via
// traces) and accumulate the coefficient outer products.
ComplexMatrix chi_oracle(const KrausChannel& ch) {
    ComplexMatrix chi(4, 4);
    for (const auto& k : ch.ops) {
        const cdouble ci = (k(0, 0) + k(1, 1)) * 0.5;
        const cdouble cz = (k(0, 0) - k(1, 1)) * 0.5;
        const cdouble cx = (k(0, 1) + k(1, 0)) * 0.5;
        const cdouble cy = cdouble(0.0, 1.0) * (k(0, 1) - k(1, 0)) * 0.5;
        const cdouble c[4] = {ci, cx, cy, cz};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) chi(i, j) += c[i] * std::conj(c[j]);
    }
    return chi;
}

const double kHalfPi = std::acos(0.0);

}  // namespace

TEST_CASE("probe set is informationally complete") {
    const auto probes = probe_states();
    // Gram system rank: expand each probe in the Pauli basis and check
    // the 4x4 coefficient matrix is invertible.
    ComplexMatrix gram(4, 4);
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            gram(k, i) = (pauli_matrix("IXYZ"[i]) * probes[k].matrix).trace() * 0.5;
    CHECK_NOTHROW(solve_linear(gram, {1.0, 0.0, 0.0, 0.0}));
}

TEST_CASE("state tomography linear inversion and clipping") {
    CHECK(state_tomography({0, 0, 0}).matrix.approx_equal(0.5 * ComplexMatrix::identity(2), 1e-12));
    CHECK(state_tomography({1, 0, 0})
              .matrix.approx_equal(outer(gates::ket_plus(), gates::ket_plus()), 1e-12));

    // unphysical |r| > 1 clips onto the Bloch sphere along r/|r|
    const DensityState clipped = state_tomography({0.9, 0.9, 0.0});
    const double norm = std::sqrt(0.9 * 0.9 * 2.0);
    const DensityState expected = testutil::bloch_state(0.9 / norm, 0.9 / norm, 0.0);
    CHECK(clipped.matrix.approx_equal(expected.matrix, 1e-8));
    CHECK(clipped.is_valid());

    CHECK_THROWS_AS(state_tomography({1.1, 0, 0}), std::invalid_argument);
}

TEST_CASE("process tomography recovers simple channels") {
    const auto probes = probe_states();

    // identity channel
    ProcessMatrix chi = process_tomography(probes, probes);
    ComplexMatrix unit(4, 4);
    unit(0, 0) = 1.0;
    CHECK(chi.chi.approx_equal(unit, 1e-12));

    // full phase damping: diag(1/2, 0, 0, 1/2)
    std::array<DensityState, 4> outputs;
    for (int k = 0; k < 4; ++k) outputs[k] = apply_channel(phase_damping_channel(1.0), probes[k]);
    chi = process_tomography(probes, outputs);
    CHECK(chi.chi.approx_equal(
        ComplexMatrix{{0.5, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0.5}}, 1e-12));

    // full amplitude damping against the entrywise expansion oracle
    for (int k = 0; k < 4; ++k)
        outputs[k] = apply_channel(amplitude_damping_channel(1.0), probes[k]);
    chi = process_tomography(probes, outputs);
    CHECK(chi.chi.approx_equal(chi_oracle(amplitude_damping_channel(1.0)), 1e-12));
    // spot values fixed by the expansion: (X,Y) entry is -i/4
    CHECK(std::abs(chi.chi(1, 2) - cdouble(0.0, -0.25)) < 1e-12);
    CHECK(std::abs(chi.chi(0, 3) - cdouble(0.25)) < 1e-12);

    // rank-deficient probe set: repeat one probe
    std::array<DensityState, 4> degenerate = {probes[0], probes[0], probes[2], probes[3]};
    CHECK_THROWS_AS(process_tomography(degenerate, degenerate), std::runtime_error);
}

TEST_CASE("kraus_to_chi agrees with the oracle and the reconstruction") {
    ComplexMatrix unit(4, 4);
    unit(0, 0) = 1.0;
    KrausChannel identity;
    identity.ops.push_back(ComplexMatrix::identity(2));
    CHECK(kraus_to_chi(identity).chi.approx_equal(unit, 1e-14));

    Rng rng(51);
    const auto probes = probe_states();
    for (int rep = 0; rep < 10; ++rep) {
        const DampingParams p(rng.uniform() * kHalfPi, rng.uniform() * kHalfPi);
        const KrausChannel ch = kraus_from_angles(p);
        CHECK(kraus_to_chi(ch).chi.approx_equal(chi_oracle(ch), 1e-13));

        std::array<DensityState, 4> outputs;
        for (int k = 0; k < 4; ++k) outputs[k] = apply_channel(ch, probes[k]);
        CHECK(process_tomography(probes, outputs).chi.max_abs_diff(kraus_to_chi(ch).chi) < 1e-12);
    }

    // phase damping chi is diagonal with the expansion weights
    for (double g : {0.0, 0.3, 0.7, 1.0}) {
        const double s = std::sqrt(1.0 - g);
        const ComplexMatrix chi = kraus_to_chi(phase_damping_channel(g)).chi;
        CHECK(chi(0, 0).real() == doctest::Approx((1 + s) * (1 + s) / 4 + g / 4).epsilon(1e-12));
        CHECK(chi(3, 3).real() == doctest::Approx((1 - s) * (1 - s) / 4 + g / 4).epsilon(1e-12));
        CHECK(std::abs(chi(0, 3)) < 1e-12);
        CHECK(std::abs(chi(1, 1)) < 1e-12);
    }
}

TEST_CASE("tomography round trip over random angles") {
    Rng rng(52);
    const auto probes = probe_states();
    for (int rep = 0; rep < 50; ++rep) {
        const DampingParams p(rng.uniform() * kHalfPi, rng.uniform() * kHalfPi);
        const KrausChannel ch = kraus_from_angles(p);
        std::array<DensityState, 4> outputs;
        for (int k = 0; k < 4; ++k) outputs[k] = apply_channel(ch, probes[k]);
        const ProcessMatrix reconstructed = process_tomography(probes, outputs);
        const ProcessMatrix analytic = kraus_to_chi(ch);
        CHECK(reconstructed.chi.max_abs_diff(analytic.chi) < 1e-9);
        CHECK(process_fidelity(reconstructed, analytic) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(std::abs(reconstructed.chi.trace().real() - 1.0) < 1e-8);
    }
}

TEST_CASE("process fidelity endpoints and invariances") {
    const ProcessMatrix identity{[] {
        ComplexMatrix m(4, 4);
        m(0, 0) = 1.0;
        return m;
    }()};
    const ProcessMatrix pd = kraus_to_chi(phase_damping_channel(1.0));

    CHECK(process_fidelity(pd, pd) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(process_fidelity(identity, pd) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(process_fidelity(pd, identity) == doctest::Approx(0.5).epsilon(1e-10));

    // invariant under common rescaling of both arguments
    const ProcessMatrix pd2{pd.chi * cdouble(2.0)};
    const ProcessMatrix id2{identity.chi * cdouble(2.0)};
    CHECK(process_fidelity(id2, pd2) == doctest::Approx(0.5).epsilon(1e-8));

    ComplexMatrix negative(4, 4);
    negative(0, 0) = 1.0;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(process_fidelity(ProcessMatrix{negative}, identity), std::domain_error);
}

TEST_CASE("apply_chi matches the Kraus action") {
    Rng rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        const DampingParams p(rng.uniform() * kHalfPi, rng.uniform() * kHalfPi);
        const KrausChannel ch = kraus_from_angles(p);
        const DensityState rho = testutil::random_density(rng, 1);
        CHECK(apply_chi(kraus_to_chi(ch), rho).matrix.max_abs_diff(
                  apply_channel(ch, rho).matrix) < 1e-12);
    }
}

TEST_CASE("cluster fidelity terms form the projector") {
    const auto& terms = cluster_fidelity_terms();
    REQUIRE(terms.size() == 16);
    bool has_identity = false;
    for (const auto& t : terms)
        if (t.word == "IIII") {
            has_identity = true;
            CHECK(t.coefficient == doctest::Approx(1.0 / 16.0));
        }
    CHECK(has_identity);

    ComplexMatrix sum(16, 16);
    for (const auto& t : terms) sum += t.coefficient * pauli_word_matrix(t.word);
    CHECK(sum.max_abs_diff(reference_cluster_state().matrix) < 1e-12);
}

TEST_CASE("fidelity estimator equals the direct overlap") {
    const DensityState psi = reference_cluster_state();
    CHECK(fidelity_and_witness(psi).fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity_and_witness(psi).gme);

    const DensityState mixed(4, ComplexMatrix::identity(16) * cdouble(1.0 / 16.0));
    CHECK(fidelity_and_witness(mixed).fidelity == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK_FALSE(fidelity_and_witness(mixed).gme);

    Rng rng(54);
    for (int rep = 0; rep < 20; ++rep) {
        const DensityState rho = testutil::random_density(rng, 4);
        const double direct = (reference_cluster_state().matrix * rho.matrix).trace().real();
        CHECK(fidelity_and_witness(rho).fidelity == doctest::Approx(direct).epsilon(1e-12));
    }

    // white-noise mix hitting the F = 0.63 working point
    const double v = (16.0 * 0.63 - 1.0) / 15.0;
    const auto noisy = white_noise_mix(psi, v);
    const auto result = fidelity_and_witness(noisy);
    CHECK(result.fidelity == doctest::Approx(0.63).epsilon(1e-3));
    CHECK(result.gme);
}

TEST_CASE("sample_counts basics and determinism") {
    const DensityState zero = density_from_ket(gates::ket0());
    const auto counts = sample_counts(zero, "Z", 1000, 7);
    CHECK(counts[0] == 1000);
    CHECK(counts[1] == 0);

    const DensityState plus = density_from_ket(gates::ket_plus());
    const auto big = sample_counts(plus, "Z", 1000000, 7);
    CHECK(std::abs(big[0] / 1e6 - 0.5) < 0.002);

    CHECK(sample_counts(plus, "X", 5000, 99) == sample_counts(plus, "X", 5000, 99));
    CHECK(sample_counts(plus, "X", 5000, 99)[0] == 5000);  // +1 eigenstate of X

    CHECK_THROWS_AS(sample_counts(plus, "ZZ", 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_counts(plus, "Z", 0, 1), std::invalid_argument);
}

TEST_CASE("expectation_from_counts applies parity over non-identity positions") {
    // counts over 2 qubits, word "ZI": second qubit ignored
    const std::vector<long> counts = {10, 20, 30, 40};
    CHECK(expectation_from_counts(counts, "ZI") ==
          doctest::Approx((10 + 20 - 30 - 40) / 100.0).epsilon(1e-12));
    CHECK(expectation_from_counts(counts, "IZ") ==
          doctest::Approx((10 - 20 + 30 - 40) / 100.0).epsilon(1e-12));
}

TEST_CASE("sampled cluster fidelity estimator is unbiased at 3 sigma") {
    Rng rng(55);
    const long shots = 10000;
    for (int rep = 0; rep < 4; ++rep) {
        const DensityState rho = testutil::random_density(rng, 4);
        const double exact = fidelity_and_witness(rho).fidelity;
        const double sampled = sampled_cluster_fidelity(rho, shots, 1000 + rep);
        // binomial error propagation over the 15 sampled terms
        double var = 0.0;
        for (const auto& term : cluster_fidelity_terms()) {
            if (term.word == "IIII") continue;
            const double e = (pauli_word_matrix(term.word) * rho.matrix).trace().real();
            var += term.coefficient * term.coefficient * (1.0 - e * e) / shots;
        }
        CHECK(std::abs(sampled - exact) < 3.0 * std::sqrt(var) + 1e-12);
    }
}

TEST_CASE("sampled process pipeline and bootstrap behave sanely") {
    const auto probes = probe_states();
    const KrausChannel ch = amplitude_damping_channel(0.5);
    std::array<DensityState, 4> outputs;
    for (int k = 0; k < 4; ++k) outputs[k] = apply_channel(ch, probes[k]);
    const ProcessMatrix ideal = kraus_to_chi(ch);

    const auto data = sample_process_data(outputs, 20000, 77);
    const ProcessMatrix chi_hat = chi_from_counts(data);
    CHECK(chi_hat.is_physical());
    CHECK(process_fidelity(chi_hat, ideal) > 0.99);

    const auto boot = bootstrap_process_fidelity(data, ideal, 50, 78, Exec::serial);
    CHECK(boot.sigma > 0.0);
    CHECK(boot.sigma < 0.05);
    CHECK(boot.mean > 0.98);
}

TEST_CASE("projected_physical clips negative chi eigenvalues") {
    ComplexMatrix bad(4, 4);
    bad(0, 0) = 1.05;
    bad(1, 1) = -0.05;
    const ProcessMatrix fixed = ProcessMatrix{bad}.projected_physical();
    CHECK(fixed.is_physical());
    CHECK(std::abs(fixed.chi.trace().real() - 1.0) < 1e-12);
}
