#include "qchan/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qchan {

DensityState::DensityState(int n, ComplexMatrix m) : num_qubits(n), matrix(std::move(m)) {
    if (matrix.rows() != dim() || matrix.cols() != dim())
        throw std::invalid_argument("DensityState: matrix dimension does not match qubit count");
}

bool DensityState::is_valid(bool branch_form, double tol) const {
    if (!matrix.is_hermitian(tol)) return false;
    const double tr = matrix.trace().real();
    if (branch_form) {
        if (tr <= 0.0 || tr > 1.0 + tol) return false;
    } else {
        if (std::abs(tr - 1.0) > tol) return false;
    }
    const auto sys = eigh(matrix, 1e-8);
    return sys.values.front() >= kPsdEigTol;
}

DensityState density_from_ket(const ComplexMatrix& ket) {
    if (ket.cols() != 1) throw std::invalid_argument("density_from_ket: not a column vector");
    int n = 0;
    while ((std::size_t{1} << n) < ket.rows()) ++n;
    if ((std::size_t{1} << n) != ket.rows())
        throw std::invalid_argument("density_from_ket: dimension not a power of two");
    return DensityState(n, outer(ket, ket));
}

DensityState partial_trace(const DensityState& state, const std::vector<int>& keep) {
    const int n = state.num_qubits;
    if (keep.empty()) throw std::out_of_range("partial_trace: keep set empty");
    std::vector<bool> kept(n, false);
    for (int q : keep) {
        if (q < 0 || q >= n) throw std::out_of_range("partial_trace: qubit index out of range");
        if (kept[q]) throw std::out_of_range("partial_trace: duplicate qubit index");
        kept[q] = true;
    }

    const int m = static_cast<int>(keep.size());

    // index helpers in the MSB-first convention; kept qubits keep their
    // relative (ascending) order in the reduced index
    auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
        std::size_t idx = 0;
        int kpos = m - 1, tpos = 0;
        for (int q = n - 1; q >= 0; --q) {
            std::size_t bit;
            if (kept[q]) {
                bit = (kept_bits >> (m - 1 - kpos)) & 1;
                --kpos;
            } else {
                bit = (traced_bits >> tpos) & 1;
                ++tpos;
            }
            idx |= bit << (n - 1 - q);
        }
        return idx;
    };

    const std::size_t traced_dim = std::size_t{1} << (n - m);
    const std::size_t out_dim = std::size_t{1} << m;
    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t r = 0; r < out_dim; ++r)
        for (std::size_t c = 0; c < out_dim; ++c) {
            cdouble s = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t)
                s += state.matrix(compose(r, t), compose(c, t));
            out(r, c) = s;
        }
    return DensityState(m, std::move(out));
}

std::pair<double, DensityState> project(const DensityState& state, int qubit,
                                        const ComplexMatrix& direction) {
    const int n = state.num_qubits;
    if (qubit < 0 || qubit >= n) throw std::out_of_range("project: qubit index out of range");
    if (direction.rows() != 2 || direction.cols() != 1)
        throw std::invalid_argument("project: direction must be a 2-vector");
    const double norm = std::sqrt(std::norm(direction(0, 0)) + std::norm(direction(1, 0)));
    if (std::abs(norm - 1.0) > kDefaultTol)
        throw std::invalid_argument("project: direction not normalized");

    const int shift = n - 1 - qubit;  // bit position of `qubit` in basis indices
    const std::size_t out_dim = std::size_t{1} << (n - 1);
    auto expand = [&](std::size_t reduced, std::size_t bit) {
        const std::size_t low = reduced & ((std::size_t{1} << shift) - 1);
        const std::size_t high = reduced >> shift;
        return (high << (shift + 1)) | (bit << shift) | low;
    };

    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t r = 0; r < out_dim; ++r)
        for (std::size_t c = 0; c < out_dim; ++c) {
            cdouble s = 0.0;
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t bp = 0; bp < 2; ++bp)
                    s += std::conj(direction(b, 0)) * direction(bp, 0) *
                         state.matrix(expand(r, b), expand(c, bp));
            out(r, c) = s;
        }
    DensityState post(n - 1, std::move(out));
    return {post.matrix.trace().real(), std::move(post)};
}

DensityState apply_to_qubits(const DensityState& state, const ComplexMatrix& op, int first_qubit) {
    const std::size_t before = std::size_t{1} << first_qubit;
    int span = 0;
    while ((std::size_t{1} << span) < op.rows()) ++span;
    if ((std::size_t{1} << span) != op.rows() || op.rows() != op.cols())
        throw std::invalid_argument("apply_to_qubits: operator dimension not a power of two");
    if (first_qubit < 0 || first_qubit + span > state.num_qubits)
        throw std::out_of_range("apply_to_qubits: register out of range");
    const std::size_t after = state.dim() / (before * op.rows());
    const ComplexMatrix full =
        kron(kron(ComplexMatrix::identity(before), op), ComplexMatrix::identity(after));
    return DensityState(state.num_qubits, full * state.matrix * full.dagger());
}

ComplexMatrix apply_to_ket(const ComplexMatrix& ket, int num_qubits, const ComplexMatrix& op,
                           int first_qubit) {
    const std::size_t before = std::size_t{1} << first_qubit;
    int span = 0;
    while ((std::size_t{1} << span) < op.rows()) ++span;
    if ((std::size_t{1} << span) != op.rows() || op.rows() != op.cols())
        throw std::invalid_argument("apply_to_ket: operator dimension not a power of two");
    if (first_qubit < 0 || first_qubit + span > num_qubits)
        throw std::out_of_range("apply_to_ket: register out of range");
    const std::size_t after = (std::size_t{1} << num_qubits) / (before * op.rows());
    const ComplexMatrix full =
        kron(kron(ComplexMatrix::identity(before), op), ComplexMatrix::identity(after));
    return full * ket;
}

}  // namespace qchan
