#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/parallel.hpp"

namespace qchan {

/// Operator basis order (1, X, Y, Z) used for every process matrix.
const ComplexMatrix& pauli_matrix(char p);
ComplexMatrix pauli_word_matrix(const std::string& word);

/// chi in E(rho) = sum_ij chi_ij E_i rho E_j^dagger with E = (1, X, Y, Z).
/// Physical channels have Hermitian PSD chi; trace-preserving ones have
/// trace 1.
struct ProcessMatrix {
    ComplexMatrix chi{4, 4};

    bool is_physical(double herm_tol = 1e-9, double psd_tol = 1e-8) const;
    /// Nearest-PSD projection by eigenvalue clipping, rescaled back to
    /// the input trace. Identity on already-physical matrices.
    ProcessMatrix projected_physical() const;
};

/// A signed Pauli word, e.g. {"XZII", 1/16}.
struct PauliObservable {
    std::string word;
    double coefficient = 0.0;
};

/// Informationally complete probe set used for process tomography, in
/// the fixed order |0>, |1>, |+>, |+y> = (|0> + i|1>)/sqrt(2).
std::array<ComplexMatrix, 4> probe_kets();
std::array<DensityState, 4> probe_states();

/// Single-qubit Pauli expectations; <1> is implied to be 1.
struct BlochExpectations {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

BlochExpectations exact_expectations(const DensityState& rho);

/// Linear-inversion estimate (1 + <X>X + <Y>Y + <Z>Z)/2 projected to the
/// nearest PSD unit-trace state by eigenvalue clipping. Rejects
/// expectations with |e| > 1 + 1e-6.
DensityState state_tomography(const BlochExpectations& e);

/// chi solving E(rho_k) = sum_ij chi_ij E_i rho_k E_j^dagger over all
/// probes, Hermitized. Throws std::runtime_error on a rank-deficient
/// probe set.
ProcessMatrix process_tomography(const std::array<DensityState, 4>& inputs,
                                 const std::array<DensityState, 4>& outputs);

/// Analytic chi: expand each Kraus operator in the Pauli basis and sum
/// the coefficient outer products.
ProcessMatrix kraus_to_chi(const KrausChannel& ch);

/// F_p = Tr(sqrt(sqrt(chi) chi_id sqrt(chi)))^2 / (Tr chi  Tr chi_id).
double process_fidelity(const ProcessMatrix& chi, const ProcessMatrix& chi_id);

/// Applies the channel described by chi: sum_ij chi_ij E_i rho E_j^dagger.
DensityState apply_chi(const ProcessMatrix& chi, const DensityState& rho);

/// The 16 signed weight-1/16 Pauli words (identity included) whose sum
/// is the projector onto the four-qubit cluster state, found by scanning
/// all 256 words for |Tr(rho P)| = 1.
const std::vector<PauliObservable>& cluster_fidelity_terms();

struct FidelityWitness {
    double fidelity = 0.0;
    bool gme = false;
};

/// Overlap with the four-qubit cluster state via the 16-term local-Pauli
/// estimator; gme is the F > 0.5 witness verdict.
FidelityWitness fidelity_and_witness(const DensityState& rho);

/// Multinomial counts over all-qubit outcomes (MSB-first bit strings)
/// when each qubit is measured in the basis named by `word`; positions
/// marked I are measured in Z and ignored by expectation_from_counts.
/// Deterministic for a fixed seed.
std::vector<long> sample_counts(const DensityState& state, const std::string& word, long shots,
                                std::uint64_t seed);

double expectation_from_counts(const std::vector<long>& counts, const std::string& word);

/// 16-term fidelity estimate from `shots` samples per non-identity term.
double sampled_cluster_fidelity(const DensityState& rho, long shots, std::uint64_t seed);

// Shot-sampled process tomography: raw outcome-0 counts per probe and
// per measured Pauli (X, Y, Z), enough to rebuild or resample chi.
struct SampledProcessData {
    long shots = 0;
    std::array<std::array<long, 3>, 4> zero_counts{};
};

SampledProcessData sample_process_data(const std::array<DensityState, 4>& outputs, long shots,
                                       std::uint64_t seed);

/// Linear-inversion chi from sampled counts, PSD-projected.
ProcessMatrix chi_from_counts(const SampledProcessData& data);

struct BootstrapResult {
    double mean = 0.0;
    double sigma = 0.0;
};

/// Multinomial bootstrap of the process fidelity against `ideal`:
/// resamples the counts, rebuilds chi and F_p per resample (derived
/// per-resample seeds, so the result is independent of execution order).
BootstrapResult bootstrap_process_fidelity(const SampledProcessData& data,
                                           const ProcessMatrix& ideal, int resamples,
                                           std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace qchan
