#pragma once

#include <string>
#include <vector>

#include "qchan/gates.hpp"

namespace qchan {

/// The three damping channels realised in this library. Amplitude and
/// beta damping include the outcome-conditioned X correction; phase
/// damping omits it.
enum class ChannelMode { amplitude, phase, beta };

std::string to_string(ChannelMode mode);

/// Channel angles (alpha, beta) in [0, pi/2] and the rotation angles
/// gamma1 = (beta - alpha + pi/2)/2, gamma2 = (beta + alpha - pi/2)/2
/// driving the ancilla circuit. For beta = 0 the damping strength is
/// Gamma = sin^2(alpha).
struct DampingParams {
    double alpha = 0.0;
    double beta = 0.0;

    DampingParams(double alpha_, double beta_);

    double gamma1() const;
    double gamma2() const;
    /// sin^2(alpha); the single damping knob when beta = 0.
    double big_gamma() const;

    /// alpha = arccos(sqrt(1 - Gamma)), beta = 0.
    static DampingParams from_gamma(double gamma);
    /// Gamma = 1 - exp(-eta t), i.e. alpha = arccos(e^{-eta t / 2}).
    static DampingParams from_rate_time(double eta, double t);
};

/// Ordered Kraus operators K_i with sum K_i^dagger K_i = 1.
struct KrausChannel {
    std::vector<ComplexMatrix> ops;

    bool completeness_holds(double tol = kDefaultTol) const;
};

/// K0 = diag(cos beta, cos alpha), K1 = [[0, sin alpha], [sin beta, 0]].
KrausChannel kraus_from_angles(const DampingParams& p);

/// {diag(1, sqrt(1-Gamma)), diag(0, sqrt(Gamma))}; Gamma in [0, 1].
KrausChannel phase_damping_channel(double gamma);

/// kraus_from_angles at (arccos sqrt(1-Gamma), 0); Gamma in [0, 1].
KrausChannel amplitude_damping_channel(double gamma);

/// The closed-form channel the named mode should realise at the given
/// angles: {K0, K1} for amplitude/beta, {K0, X K1} for phase.
KrausChannel reference_channel(const DampingParams& p, ChannelMode mode);

/// rho -> sum_i K_i rho K_i^dagger.
DensityState apply_channel(const KrausChannel& ch, const DensityState& rho);

/// Branch-enumerates the two-qubit ancilla circuit: ancilla |0>,
/// R_y(2 gamma1) on the ancilla, CX (system controls ancilla),
/// R_y(2 gamma2), computational measurement M, and X on the system for
/// M = 1 when requested. Returns the two effective branch operators as a
/// Kraus channel.
KrausChannel circuit_channel(const DampingParams& p, bool apply_x_correction);

}  // namespace qchan
