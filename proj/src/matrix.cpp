#include "qchan/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qchan {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::column(std::vector<cdouble> amps) {
    ComplexMatrix m(amps.size(), 1);
    for (std::size_t i = 0; i < amps.size(); ++i) m(i, 0) = amps[i];
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch in +");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch in -");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("shape mismatch in *");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cdouble aik = (*this)(i, k);
            if (aik == cdouble{}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(cdouble s) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch in +=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
    return out;
}

cdouble ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    cdouble t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::hermitized() const {
    if (rows_ != cols_) throw std::invalid_argument("hermitized of non-square matrix");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
    return out;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& rhs, double tol) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    return max_abs_diff(rhs) <= tol;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("shape mismatch in max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - rhs.data_[i]));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    return (dagger() * (*this)).approx_equal(identity(rows_), tol);
}

ComplexMatrix operator*(cdouble s, const ComplexMatrix& m) { return m * s; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cdouble av = a(ar, ac);
            if (av == cdouble{}) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = av * b(br, bc);
        }
    return out;
}

cdouble inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != 1 || b.cols() != 1 || a.rows() != b.rows())
        throw std::invalid_argument("inner expects matching column vectors");
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::conj(a(i, 0)) * b(i, 0);
    return s;
}

ComplexMatrix outer(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != 1 || b.cols() != 1)
        throw std::invalid_argument("outer expects column vectors");
    ComplexMatrix out(a.rows(), b.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.rows(); ++c) out(r, c) = a(r, 0) * std::conj(b(c, 0));
    return out;
}

namespace {

double off_diagonal_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return s;
}

}  // namespace

EigenSystem eigh(const ComplexMatrix& m, double herm_tol) {
    if (!m.is_hermitian(herm_tol)) throw std::invalid_argument("eigh: matrix not Hermitian");
    const std::size_t n = m.rows();
    ComplexMatrix a = m.hermitized();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double stop = scale * scale * 1e-30;

    // Cyclic Jacobi sweeps. Each pivot (p,q) is first rephased so the
    // off-diagonal entry is real, then rotated away with a real Givens
    // rotation; both are folded into one unitary column update.
    for (int sweep = 0; sweep < 100 && off_diagonal_sq(a) > stop; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= scale * 1e-18) continue;
                const cdouble phase = apq / r;  // e^{i theta}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Column rotation U: U[p][p]=c, U[p][q]=s, U[q][p]=-s*conj(phase), U[q][q]=c*conj(phase).
                const cdouble upq = s;
                const cdouble uqp = -s * std::conj(phase);
                const cdouble uqq = c * std::conj(phase);
                // a <- U^dagger a U
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem sys;
    sys.values.resize(n);
    sys.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sys.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) sys.vectors(i, j) = v(i, order[j]);
    }
    return sys;
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& m) {
    EigenSystem sys = eigh(m, 1e-8);
    const std::size_t n = m.rows();
    // Rounding noise of order machine epsilon turns into sqrt(eps) ~ 1e-8
    // after the root, so eigenvalues below a relative cutoff count as zero.
    const double cutoff = std::abs(sys.values.back()) * 1e-12;
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double lambda = sys.values[k];
        if (lambda < kPsdEigTol) throw std::domain_error("matrix_sqrt: input not PSD");
        lambda = lambda < cutoff ? 0.0 : lambda;
        const double root = std::sqrt(lambda);
        for (std::size_t r = 0; r < n; ++r) {
            const cdouble vr = sys.vectors(r, k) * root;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(sys.vectors(c, k));
        }
    }
    return out.hermitized();
}

std::vector<cdouble> solve_linear(ComplexMatrix a, std::vector<cdouble> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
    const double singular_tol = std::max(a.max_abs(), 1.0) * 1e-12;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) < singular_tol)
            throw std::runtime_error("solve_linear: singular system");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
            std::swap(b[col], b[pivot]);
        }
        const cdouble inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cdouble f = a(r, col) * inv;
            if (f == cdouble{}) continue;
            a(r, col) = 0.0;
            for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        cdouble s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * b[c];
        b[i] = s / a(i, i);
    }
    return b;
}

}  // namespace qchan
