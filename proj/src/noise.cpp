#include "qchan/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "qchan/gates.hpp"

namespace qchan {

bool NoiseSpec::is_ideal() const {
    if (white_noise_v != 1.0 || path_visibility != 1.0) return false;
    for (double p : per_qubit_dephasing)
        if (p != 0.0) return false;
    return true;
}

DensityState NoiseSpec::apply(const DensityState& state) const {
    DensityState out = white_noise_v < 1.0 ? white_noise_mix(state, white_noise_v) : state;
    for (std::size_t q = 0; q < per_qubit_dephasing.size(); ++q)
        out = dephase_qubit(out, static_cast<int>(q), per_qubit_dephasing[q]);
    if (path_visibility < 1.0 && state.num_qubits > 1)
        out = dephase_qubit(out, 1, (1.0 - path_visibility) / 2.0);
    return out;
}

DensityState white_noise_mix(const DensityState& psi, double v) {
    if (v < 0.0 || v > 1.0) throw std::invalid_argument("white_noise_mix: v must lie in [0, 1]");
    // purity check: Tr(rho^2) = 1 for pure inputs
    const double purity = (psi.matrix * psi.matrix).trace().real();
    if (std::abs(purity - 1.0) > 1e-8)
        throw std::invalid_argument("white_noise_mix: input state is not pure");
    const double dim = static_cast<double>(psi.dim());
    ComplexMatrix out = psi.matrix * cdouble(v);
    out += ComplexMatrix::identity(psi.dim()) * cdouble((1.0 - v) / dim);
    return DensityState(psi.num_qubits, std::move(out));
}

DensityState dephase_qubit(const DensityState& rho, int qubit, double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("dephase_qubit: p must lie in [0, 1]");
    if (qubit < 0 || qubit >= rho.num_qubits)
        throw std::out_of_range("dephase_qubit: qubit index out of range");
    const DensityState flipped = apply_to_qubits(rho, gates::z(), qubit);
    return DensityState(rho.num_qubits,
                        rho.matrix * cdouble(1.0 - p) + flipped.matrix * cdouble(p));
}

}  // namespace qchan
