#include "qchan/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qchan {

namespace gates {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

const ComplexMatrix& h() {
    static const ComplexMatrix m{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
    return m;
}

const ComplexMatrix& x() {
    static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}

const ComplexMatrix& y() {
    static const ComplexMatrix m{{0.0, cdouble(0.0, -1.0)}, {cdouble(0.0, 1.0), 0.0}};
    return m;
}

const ComplexMatrix& z() {
    static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

const ComplexMatrix& cz() {
    static const ComplexMatrix m{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    return m;
}

const ComplexMatrix& cx() {
    static const ComplexMatrix m{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    return m;
}

ComplexMatrix rz(double alpha) {
    return ComplexMatrix{{std::polar(1.0, -alpha / 2.0), 0.0}, {0.0, std::polar(1.0, alpha / 2.0)}};
}

ComplexMatrix ry(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return ComplexMatrix{{c, -s}, {s, c}};
}

ComplexMatrix ket0() { return ComplexMatrix::column({1.0, 0.0}); }
ComplexMatrix ket1() { return ComplexMatrix::column({0.0, 1.0}); }
ComplexMatrix ket_plus() { return ComplexMatrix::column({kInvSqrt2, kInvSqrt2}); }
ComplexMatrix ket_minus() { return ComplexMatrix::column({kInvSqrt2, -kInvSqrt2}); }
ComplexMatrix ket_plus_y() {
    return ComplexMatrix::column({kInvSqrt2, cdouble(0.0, kInvSqrt2)});
}

ComplexMatrix basis_ket(int num_qubits, std::size_t index) {
    ComplexMatrix m(std::size_t{1} << num_qubits, 1);
    m(index, 0) = 1.0;
    return m;
}

}  // namespace gates

ComplexMatrix EquatorialBasis::direction(int outcome) const {
    const double sign = outcome == 0 ? 1.0 : -1.0;
    return ComplexMatrix::column(
        {1.0 / std::sqrt(2.0), sign * std::polar(1.0 / std::sqrt(2.0), -angle)});
}

bool equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.cols() == 1) return std::abs(std::abs(inner(a, b)) - 1.0) <= tol;
    // unitaries: |Tr(a^dagger b)| = dim iff b = e^{i phi} a
    return std::abs(std::abs((a.dagger() * b).trace()) - static_cast<double>(a.rows())) <= tol;
}

ComplexMatrix linear_cluster_ket(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("linear_cluster: n must be in [2, 6]");
    ComplexMatrix ket = gates::ket_plus();
    for (int q = 1; q < n; ++q) ket = kron(ket, gates::ket_plus());
    for (int q = 0; q + 1 < n; ++q) ket = apply_to_ket(ket, n, gates::cz(), q);
    return ket;
}

DensityState linear_cluster(int n) { return density_from_ket(linear_cluster_ket(n)); }

ComplexMatrix reference_cluster_ket() {
    using namespace gates;
    auto term = [](const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                   const ComplexMatrix& d) { return kron(kron(kron(a, b), c), d); };
    ComplexMatrix psi = term(ket_plus(), ket0(), ket0(), ket_plus());
    psi += term(ket_plus(), ket0(), ket1(), ket_minus());
    psi += term(ket_minus(), ket1(), ket0(), ket_plus());
    psi += cdouble(-1.0) * term(ket_minus(), ket1(), ket1(), ket_minus());
    return psi * cdouble(0.5);
}

DensityState reference_cluster_state() { return density_from_ket(reference_cluster_ket()); }

ComplexMatrix propagate_one_step(const ComplexMatrix& input, double alpha, int outcome) {
    ComplexMatrix out = gates::h() * gates::rz(alpha) * input;
    if (outcome) out = gates::x() * out;
    return out;
}

bool ry_decomposition_check(double gamma) {
    const double half_pi = std::acos(0.0);
    const ComplexMatrix lhs = gates::ry(2.0 * gamma);
    const ComplexMatrix rhs =
        gates::rz(half_pi) * gates::h() * gates::rz(2.0 * gamma) * gates::h() * gates::rz(-half_pi);
    return equal_up_to_phase(lhs, rhs, 1e-10);
}

}  // namespace qchan
