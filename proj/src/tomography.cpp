#include "qchan/tomography.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qchan/rng.hpp"

namespace qchan {

const ComplexMatrix& pauli_matrix(char p) {
    static const ComplexMatrix id = ComplexMatrix::identity(2);
    switch (p) {
        case 'I': return id;
        case 'X': return gates::x();
        case 'Y': return gates::y();
        case 'Z': return gates::z();
    }
    throw std::invalid_argument("pauli_matrix: unknown label");
}

ComplexMatrix pauli_word_matrix(const std::string& word) {
    if (word.empty()) throw std::invalid_argument("pauli_word_matrix: empty word");
    ComplexMatrix m = pauli_matrix(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) m = kron(m, pauli_matrix(word[i]));
    return m;
}

bool ProcessMatrix::is_physical(double herm_tol, double psd_tol) const {
    if (!chi.is_hermitian(herm_tol)) return false;
    const auto sys = eigh(chi.hermitized(), 1e-6);
    return sys.values.front() >= -psd_tol;
}

ProcessMatrix ProcessMatrix::projected_physical() const {
    const ComplexMatrix herm = chi.hermitized();
    const double tr = herm.trace().real();
    auto sys = eigh(herm, 1e-6);
    double clipped_tr = 0.0;
    for (double& v : sys.values) {
        v = std::max(v, 0.0);
        clipped_tr += v;
    }
    const double rescale = clipped_tr > 0.0 ? tr / clipped_tr : 0.0;
    ComplexMatrix out(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        const double w = sys.values[k] * rescale;
        if (w == 0.0) continue;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                out(r, c) += w * sys.vectors(r, k) * std::conj(sys.vectors(c, k));
    }
    return ProcessMatrix{out.hermitized()};
}

std::array<ComplexMatrix, 4> probe_kets() {
    using namespace gates;
    return {ket0(), ket1(), ket_plus(), ket_plus_y()};
}

std::array<DensityState, 4> probe_states() {
    const auto kets = probe_kets();
    return {density_from_ket(kets[0]), density_from_ket(kets[1]), density_from_ket(kets[2]),
            density_from_ket(kets[3])};
}

BlochExpectations exact_expectations(const DensityState& rho) {
    const double tr = rho.matrix.trace().real();
    auto ev = [&](const ComplexMatrix& p) { return (p * rho.matrix).trace().real() / tr; };
    return {ev(gates::x()), ev(gates::y()), ev(gates::z())};
}

DensityState state_tomography(const BlochExpectations& e) {
    for (double v : {e.x, e.y, e.z})
        if (std::abs(v) > 1.0 + 1e-6)
            throw std::invalid_argument("state_tomography: expectation magnitude exceeds 1");
    ComplexMatrix rho =
        0.5 * (ComplexMatrix::identity(2) + e.x * gates::x() + e.y * gates::y() + e.z * gates::z());
    auto sys = eigh(rho.hermitized(), 1e-8);
    double tr = 0.0;
    for (double& v : sys.values) {
        v = std::max(v, 0.0);
        tr += v;
    }
    ComplexMatrix out(2, 2);
    for (std::size_t k = 0; k < 2; ++k) {
        const double w = sys.values[k] / tr;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                out(r, c) += w * sys.vectors(r, k) * std::conj(sys.vectors(c, k));
    }
    return DensityState(1, out.hermitized());
}

ProcessMatrix process_tomography(const std::array<DensityState, 4>& inputs,
                                 const std::array<DensityState, 4>& outputs) {
    // 16 equations (4 probes x 4 matrix entries) in the 16 unknowns chi_ij.
    ComplexMatrix a(16, 16);
    std::vector<cdouble> b(16);
    for (int k = 0; k < 4; ++k) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const ComplexMatrix term = pauli_matrix("IXYZ"[i]) * inputs[k].matrix *
                                           pauli_matrix("IXYZ"[j]).dagger();
                for (std::size_t m = 0; m < 2; ++m)
                    for (std::size_t n = 0; n < 2; ++n)
                        a(k * 4 + m * 2 + n, i * 4 + j) = term(m, n);
            }
        for (std::size_t m = 0; m < 2; ++m)
            for (std::size_t n = 0; n < 2; ++n) b[k * 4 + m * 2 + n] = outputs[k].matrix(m, n);
    }

    std::vector<cdouble> x;
    try {
        x = solve_linear(a, b);
    } catch (const std::runtime_error&) {
        throw std::runtime_error("process_tomography: rank-deficient probe set");
    }

    ComplexMatrix chi(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) chi(i, j) = x[i * 4 + j];
    return ProcessMatrix{chi.hermitized()};
}

ProcessMatrix kraus_to_chi(const KrausChannel& ch) {
    ComplexMatrix chi(4, 4);
    for (const auto& k : ch.ops) {
        if (k.rows() != 2 || k.cols() != 2)
            throw std::invalid_argument("kraus_to_chi: expects 2x2 operators");
        // K = sum_i c_i E_i with c_i = Tr(E_i K)/2
        std::array<cdouble, 4> c;
        for (int i = 0; i < 4; ++i) c[i] = (pauli_matrix("IXYZ"[i]) * k).trace() * 0.5;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) chi(i, j) += c[i] * std::conj(c[j]);
    }
    return ProcessMatrix{chi};
}

double process_fidelity(const ProcessMatrix& chi, const ProcessMatrix& chi_id) {
    if (!chi.is_physical(1e-6, 1e-8) || !chi_id.is_physical(1e-6, 1e-8))
        throw std::domain_error("process_fidelity: non-PSD process matrix");
    const ComplexMatrix a = chi.projected_physical().chi;
    const ComplexMatrix b = chi_id.projected_physical().chi;
    const ComplexMatrix root = matrix_sqrt(a);
    const ComplexMatrix inner_sqrt = matrix_sqrt((root * b * root).hermitized());
    const double tr = inner_sqrt.trace().real();
    return tr * tr / (a.trace().real() * b.trace().real());
}

DensityState apply_chi(const ProcessMatrix& chi, const DensityState& rho) {
    if (rho.num_qubits != 1) throw std::invalid_argument("apply_chi: expects a 1-qubit state");
    ComplexMatrix out(2, 2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const cdouble w = chi.chi(i, j);
            if (w == cdouble{}) continue;
            out += w * (pauli_matrix("IXYZ"[i]) * rho.matrix * pauli_matrix("IXYZ"[j]).dagger());
        }
    return DensityState(1, std::move(out));
}

const std::vector<PauliObservable>& cluster_fidelity_terms() {
    static const std::vector<PauliObservable> terms = [] {
        const DensityState psi = reference_cluster_state();
        std::vector<PauliObservable> out;
        std::string word(4, 'I');
        for (int code = 0; code < 256; ++code) {
            for (int q = 0; q < 4; ++q) word[q] = "IXYZ"[(code >> (2 * (3 - q))) & 3];
            const double t = (pauli_word_matrix(word) * psi.matrix).trace().real();
            if (std::abs(std::abs(t) - 1.0) < 1e-9)
                out.push_back({word, (t > 0.0 ? 1.0 : -1.0) / 16.0});
        }
        return out;
    }();
    return terms;
}

FidelityWitness fidelity_and_witness(const DensityState& rho) {
    if (rho.num_qubits != 4)
        throw std::invalid_argument("fidelity_and_witness: expects a 4-qubit state");
    double f = 0.0;
    for (const auto& term : cluster_fidelity_terms())
        f += term.coefficient * (pauli_word_matrix(term.word) * rho.matrix).trace().real();
    return {f, f > 0.5};
}

namespace {

// Columns are the +1/-1 eigenvectors of the measured Pauli; I falls back
// to the computational basis.
ComplexMatrix basis_rotation(char p) {
    switch (p) {
        case 'I':
        case 'Z': return ComplexMatrix::identity(2);
        case 'X': return gates::h();
        case 'Y': {
            const double s = 1.0 / std::sqrt(2.0);
            return ComplexMatrix{{s, s}, {cdouble(0.0, s), cdouble(0.0, -s)}};
        }
    }
    throw std::invalid_argument("basis_rotation: unknown label");
}

}  // namespace

std::vector<long> sample_counts(const DensityState& state, const std::string& word, long shots,
                                std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");
    if (static_cast<int>(word.size()) != state.num_qubits)
        throw std::invalid_argument("sample_counts: word length must match qubit count");

    ComplexMatrix v = basis_rotation(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) v = kron(v, basis_rotation(word[i]));
    const ComplexMatrix rotated = v.dagger() * state.matrix * v;

    const std::size_t dim = state.dim();
    std::vector<double> cdf(dim);
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        acc += std::max(0.0, rotated(i, i).real());
        cdf[i] = acc;
    }
    for (double& c : cdf) c /= acc;

    std::vector<long> counts(dim, 0);
    Rng rng(seed);
    for (long s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        std::size_t idx = 0;
        while (idx + 1 < dim && u >= cdf[idx]) ++idx;
        ++counts[idx];
    }
    return counts;
}

double expectation_from_counts(const std::vector<long>& counts, const std::string& word) {
    const int n = static_cast<int>(word.size());
    std::size_t mask = 0;
    for (int q = 0; q < n; ++q)
        if (word[q] != 'I') mask |= std::size_t{1} << (n - 1 - q);

    long total = 0;
    long signed_sum = 0;
    for (std::size_t b = 0; b < counts.size(); ++b) {
        total += counts[b];
        signed_sum += (std::popcount(b & mask) % 2 == 0) ? counts[b] : -counts[b];
    }
    if (total == 0) throw std::invalid_argument("expectation_from_counts: empty counts");
    return static_cast<double>(signed_sum) / static_cast<double>(total);
}

double sampled_cluster_fidelity(const DensityState& rho, long shots, std::uint64_t seed) {
    double f = 0.0;
    std::uint64_t term_index = 0;
    for (const auto& term : cluster_fidelity_terms()) {
        if (term.word == "IIII") {
            f += term.coefficient;
            continue;
        }
        const auto counts = sample_counts(rho, term.word, shots, derive_seed(seed, term_index++));
        f += term.coefficient * expectation_from_counts(counts, term.word);
    }
    return f;
}

SampledProcessData sample_process_data(const std::array<DensityState, 4>& outputs, long shots,
                                       std::uint64_t seed) {
    SampledProcessData data;
    data.shots = shots;
    for (int k = 0; k < 4; ++k) {
        const char bases[3] = {'X', 'Y', 'Z'};
        for (int b = 0; b < 3; ++b) {
            const auto counts = sample_counts(outputs[k], std::string(1, bases[b]), shots,
                                              derive_seed(seed, k * 3 + b));
            data.zero_counts[k][b] = counts[0];
        }
    }
    return data;
}

namespace {

ProcessMatrix chi_from_zero_counts(const std::array<std::array<long, 3>, 4>& zero_counts,
                                   long shots) {
    std::array<DensityState, 4> outputs;
    for (int k = 0; k < 4; ++k) {
        BlochExpectations e;
        e.x = (2.0 * zero_counts[k][0] - shots) / shots;
        e.y = (2.0 * zero_counts[k][1] - shots) / shots;
        e.z = (2.0 * zero_counts[k][2] - shots) / shots;
        outputs[k] = state_tomography(e);
    }
    return process_tomography(probe_states(), outputs).projected_physical();
}

}  // namespace

ProcessMatrix chi_from_counts(const SampledProcessData& data) {
    return chi_from_zero_counts(data.zero_counts, data.shots);
}

BootstrapResult bootstrap_process_fidelity(const SampledProcessData& data,
                                           const ProcessMatrix& ideal, int resamples,
                                           std::uint64_t seed, Exec exec) {
    if (resamples < 2) throw std::invalid_argument("bootstrap needs at least 2 resamples");
    std::vector<double> fps(resamples);
    parallel_for(resamples, exec, [&](int r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        std::array<std::array<long, 3>, 4> resampled;
        for (int k = 0; k < 4; ++k)
            for (int b = 0; b < 3; ++b) {
                const double p = static_cast<double>(data.zero_counts[k][b]) / data.shots;
                resampled[k][b] = rng.binomial(data.shots, p);
            }
        fps[r] = process_fidelity(chi_from_zero_counts(resampled, data.shots), ideal);
    });

    double mean = 0.0;
    for (double f : fps) mean += f;
    mean /= resamples;
    double var = 0.0;
    for (double f : fps) var += (f - mean) * (f - mean);
    var /= (resamples - 1);
    return {mean, std::sqrt(var)};
}

}  // namespace qchan
