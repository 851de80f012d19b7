#include "qchan/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qchan {

namespace {
const double kHalfPi = std::acos(0.0);
}

std::string to_string(ChannelMode mode) {
    switch (mode) {
        case ChannelMode::amplitude: return "amplitude";
        case ChannelMode::phase: return "phase";
        case ChannelMode::beta: return "beta";
    }
    return "?";
}

DampingParams::DampingParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    const double slack = 1e-12;
    if (alpha < -slack || alpha > kHalfPi + slack || beta < -slack || beta > kHalfPi + slack)
        throw std::invalid_argument("DampingParams: angles must lie in [0, pi/2]");
}

double DampingParams::gamma1() const { return (beta - alpha + kHalfPi) / 2.0; }
double DampingParams::gamma2() const { return (beta + alpha - kHalfPi) / 2.0; }
double DampingParams::big_gamma() const {
    const double s = std::sin(alpha);
    return s * s;
}

DampingParams DampingParams::from_gamma(double gamma) {
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("Gamma must lie in [0, 1]");
    return DampingParams(std::acos(std::sqrt(1.0 - gamma)), 0.0);
}

DampingParams DampingParams::from_rate_time(double eta, double t) {
    if (eta < 0.0 || t < 0.0) throw std::invalid_argument("rate and time must be non-negative");
    return from_gamma(1.0 - std::exp(-eta * t));
}

bool KrausChannel::completeness_holds(double tol) const {
    if (ops.empty()) return false;
    ComplexMatrix sum = ComplexMatrix::zero(ops.front().cols(), ops.front().cols());
    for (const auto& k : ops) sum += k.dagger() * k;
    return sum.approx_equal(ComplexMatrix::identity(sum.rows()), tol);
}

KrausChannel kraus_from_angles(const DampingParams& p) {
    const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
    const double cb = std::cos(p.beta), sb = std::sin(p.beta);
    KrausChannel ch;
    ch.ops.push_back(ComplexMatrix{{cb, 0.0}, {0.0, ca}});
    ch.ops.push_back(ComplexMatrix{{0.0, sa}, {sb, 0.0}});
    return ch;
}

KrausChannel phase_damping_channel(double gamma) {
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("Gamma must lie in [0, 1]");
    KrausChannel ch;
    ch.ops.push_back(ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}});
    ch.ops.push_back(ComplexMatrix{{0.0, 0.0}, {0.0, std::sqrt(gamma)}});
    return ch;
}

KrausChannel amplitude_damping_channel(double gamma) {
    return kraus_from_angles(DampingParams::from_gamma(gamma));
}

KrausChannel reference_channel(const DampingParams& p, ChannelMode mode) {
    KrausChannel ch = kraus_from_angles(p);
    if (mode == ChannelMode::phase) ch.ops[1] = gates::x() * ch.ops[1];
    return ch;
}

DensityState apply_channel(const KrausChannel& ch, const DensityState& rho) {
    if (ch.ops.empty() || ch.ops.front().rows() != rho.dim())
        throw std::invalid_argument("apply_channel: dimension mismatch");
    ComplexMatrix out = ComplexMatrix::zero(rho.dim(), rho.dim());
    for (const auto& k : ch.ops) out += k * rho.matrix * k.dagger();
    return DensityState(rho.num_qubits, std::move(out));
}

KrausChannel circuit_channel(const DampingParams& p, bool apply_x_correction) {
    using namespace gates;
    // system is qubit 0, ancilla qubit 1
    const ComplexMatrix u = kron(ComplexMatrix::identity(2), ry(2.0 * p.gamma2())) * cx() *
                            kron(ComplexMatrix::identity(2), ry(2.0 * p.gamma1()));
    KrausChannel ch;
    for (int m = 0; m < 2; ++m) {
        // B_m = <m|_ancilla U |0>_ancilla, a 2x2 operator on the system
        ComplexMatrix bm(2, 2);
        for (std::size_t s_out = 0; s_out < 2; ++s_out)
            for (std::size_t s_in = 0; s_in < 2; ++s_in)
                bm(s_out, s_in) = u(2 * s_out + m, 2 * s_in + 0);
        if (m == 1 && apply_x_correction) bm = x() * bm;
        ch.ops.push_back(std::move(bm));
    }
    return ch;
}

}  // namespace qchan
