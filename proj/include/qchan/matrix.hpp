#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qchan {

using cdouble = std::complex<double>;

/// Default absolute tolerance for entrywise matrix comparisons.
inline constexpr double kDefaultTol = 1e-10;

/// Eigenvalues above this (negative) threshold are treated as rounding
/// noise of zero; anything below it is genuine negativity.
inline constexpr double kPsdEigTol = -1e-9;

/// Dense row-major complex matrix. Column vectors (kets) are represented
/// as n x 1 matrices so the same arithmetic covers states and operators.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Row-major entries, e.g. {{a,b},{c,d}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    /// n x 1 column from amplitudes.
    static ComplexMatrix column(std::vector<cdouble> amps);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    cdouble& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cdouble& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cdouble>& data() const { return data_; }

    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(cdouble s) const;
    ComplexMatrix& operator+=(const ComplexMatrix& rhs);

    /// Conjugate transpose.
    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    cdouble trace() const;
    double max_abs() const;
    double frobenius_norm() const;

    /// (this + this^dagger)/2, square matrices only.
    ComplexMatrix hermitized() const;

    /// Entrywise comparison with an explicit absolute tolerance.
    bool approx_equal(const ComplexMatrix& rhs, double tol = kDefaultTol) const;
    /// max_ij |this_ij - rhs_ij|
    double max_abs_diff(const ComplexMatrix& rhs) const;

    bool is_hermitian(double tol = kDefaultTol) const;
    bool is_unitary(double tol = kDefaultTol) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

ComplexMatrix operator*(cdouble s, const ComplexMatrix& m);

/// Tensor (Kronecker) product; a acts on the more significant index block.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Inner product <a|b> of two column vectors.
cdouble inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// |a><b| for column vectors.
ComplexMatrix outer(const ComplexMatrix& a, const ComplexMatrix& b);

/// Result of a Hermitian eigendecomposition: m = V diag(values) V^dagger,
/// eigenvalues ascending, eigenvectors as columns of V.
struct EigenSystem {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization for Hermitian matrices. Throws
/// std::invalid_argument if the input is not Hermitian within tol.
EigenSystem eigh(const ComplexMatrix& m, double herm_tol = 1e-8);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues in
/// [kPsdEigTol, 0) are clipped to zero; below that throws std::domain_error.
ComplexMatrix matrix_sqrt(const ComplexMatrix& m);

/// Solves a x = b by Gaussian elimination with partial pivoting.
/// Throws std::runtime_error on a (numerically) singular system.
std::vector<cdouble> solve_linear(ComplexMatrix a, std::vector<cdouble> b);

}  // namespace qchan
