#pragma once

#include "qchan/state.hpp"

namespace qchan {

/// Phenomenological degradation knobs for the resource state. White
/// noise emulates the overall mixedness of the generated cluster;
/// per-qubit dephasing with p = (1 - V)/2 emulates an interferometric
/// path qubit of visibility V.
struct NoiseSpec {
    double white_noise_v = 1.0;
    std::vector<double> per_qubit_dephasing;  // probability per qubit, may be empty
    double path_visibility = 1.0;             // applied to qubit 1 (the path qubit)

    bool is_ideal() const;
    /// Degrades a resource state: white-noise mixing, then the explicit
    /// per-qubit dephasing list, then visibility dephasing on qubit 1.
    DensityState apply(const DensityState& state) const;
};

/// v |psi><psi| + (1 - v) 1/2^n; the input must be pure.
DensityState white_noise_mix(const DensityState& psi, double v);

/// (1 - p) rho + p Z_q rho Z_q.
DensityState dephase_qubit(const DensityState& rho, int qubit, double p);

}  // namespace qchan
