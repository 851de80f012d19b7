#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qchan/matrix.hpp"

namespace qchan {

// Qubit ordering convention, used everywhere in this library:
// qubit 0 is the leftmost tensor factor of a ket and the most significant
// bit of a basis-state index, so |q0 q1 ... q_{n-1}> has index
// sum_q bit(q) << (n-1-q). kron(a, b) therefore places a on the
// lower-numbered qubits.

/// Density operator over n qubits. Branch states produced by projective
/// measurement are carried unnormalized with trace equal to the branch
/// probability, so summing over outcome branches is a plain matrix sum.
struct DensityState {
    int num_qubits = 0;
    ComplexMatrix matrix;

    DensityState() = default;
    DensityState(int n, ComplexMatrix m);

    std::size_t dim() const { return std::size_t{1} << num_qubits; }

    /// Hermiticity, trace and positivity checks. Normalized states must
    /// have unit trace; branch states any trace in (0, 1].
    bool is_valid(bool branch_form = false, double tol = kDefaultTol) const;
};

/// rho = |psi><psi| for a 2^n x 1 column vector.
DensityState density_from_ket(const ComplexMatrix& ket);

/// Reduced state on `keep` (ascending qubit order preserved).
DensityState partial_trace(const DensityState& state, const std::vector<int>& keep);

/// Projects `qubit` onto the normalized single-qubit direction d and
/// removes it. Returns the branch probability Tr[(|d><d| (x) 1) rho] and
/// the contracted state <d| rho |d> with trace equal to that probability.
std::pair<double, DensityState> project(const DensityState& state, int qubit,
                                        const ComplexMatrix& direction);

/// Applies an operator to a contiguous register starting at `first_qubit`
/// (op dimension fixes how many qubits it covers): rho -> U rho U^dagger.
DensityState apply_to_qubits(const DensityState& state, const ComplexMatrix& op, int first_qubit);

/// Same embedding for kets: |psi> -> (1 (x) U (x) 1)|psi>.
ComplexMatrix apply_to_ket(const ComplexMatrix& ket, int num_qubits, const ComplexMatrix& op,
                           int first_qubit);

}  // namespace qchan
