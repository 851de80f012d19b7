#pragma once

#include "qchan/state.hpp"

namespace qchan {

namespace gates {

const ComplexMatrix& h();
const ComplexMatrix& x();
const ComplexMatrix& y();
const ComplexMatrix& z();
const ComplexMatrix& cz();
/// Controlled-X with the first slot as control, second as target;
/// equal to (1 (x) H) CZ (1 (x) H).
const ComplexMatrix& cx();

/// exp(-i alpha sigma_z / 2)
ComplexMatrix rz(double alpha);
/// [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
ComplexMatrix ry(double theta);

ComplexMatrix ket0();
ComplexMatrix ket1();
ComplexMatrix ket_plus();
ComplexMatrix ket_minus();
/// (|0> + i|1>)/sqrt(2)
ComplexMatrix ket_plus_y();
/// Computational basis ket |index> over n qubits (MSB-first).
ComplexMatrix basis_ket(int num_qubits, std::size_t index);

}  // namespace gates

/// Measurement basis on the Bloch equator, {(|0> +- e^{-i angle}|1>)/sqrt(2)}.
/// Outcome 0 is the + vector.
struct EquatorialBasis {
    double angle = 0.0;

    ComplexMatrix direction(int outcome) const;
};

/// True when two equal-shape unit vectors (or unitaries of the same
/// dimension) differ only by a global phase.
bool equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-10);

/// CZ applied to each adjacent pair of |+>^n, as a ket. 2 <= n <= 6.
ComplexMatrix linear_cluster_ket(int n);
DensityState linear_cluster(int n);

/// The four-qubit cluster state in its explicit superposition form,
/// (|+00+> + |+01-> + |-10+> - |-11->)/2, built by expanding the |+>/|->
/// factors directly. Coincides with linear_cluster(4); kept as an
/// independent construction for cross-checks and fidelity estimation.
ComplexMatrix reference_cluster_ket();
DensityState reference_cluster_state();

/// One cluster propagation step: measuring the head qubit of a chain in
/// the equatorial basis B(alpha) with outcome s maps the logical state as
/// |phi> -> sigma_x^s H R_z(alpha) |phi>.
ComplexMatrix propagate_one_step(const ComplexMatrix& input, double alpha, int outcome);

/// Checks R_y(2 gamma) = R_z(pi/2) H R_z(2 gamma) H R_z(-pi/2) up to a
/// global phase.
bool ry_decomposition_check(double gamma);

}  // namespace qchan
