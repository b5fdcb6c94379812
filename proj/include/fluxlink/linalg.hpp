#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fluxlink {

using cxd = std::complex<double>;

/// Dense complex matrix, row-major storage. All operators, states and
/// propagators in the library are instances of this type.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(1), cols_(1), data_(1) {}
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix dagger() const;
    ComplexMatrix conjugate() const;

    cxd trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    /// max entry of |A - A^dagger|; zero for exactly Hermitian matrices.
    double hermiticity_defect() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cxd s);

private:
    std::size_t rows_, cols_;
    std::vector<cxd> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cxd s, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// max entry of |A - B|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, dimensions (rA*rB) x (cA*cB).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// [A, B] = AB - BA for square matrices of equal dimension.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Spectral decomposition of a Hermitian matrix.
/// eigenvalues ascending; eigenvector k is column k of eigenvectors.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Full spectral decomposition via cyclic Jacobi rotations. The input must
/// be Hermitian up to 1e-9 (relative to its max-norm for matrices larger
/// than unit scale); it is symmetrized before iteration.
EigenDecomposition herm_eig(const ComplexMatrix& a);

/// Hermitian PSD square root V diag(sqrt(lambda)) V^dagger. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything more negative is rejected.
ComplexMatrix sqrtm_psd(const ComplexMatrix& a);

/// exp(s H) for Hermitian H, via V diag(exp(s lambda)) V^dagger.
/// For s = -i*dt the result is unitary up to the eigensolver tolerance.
ComplexMatrix expm_herm_scaled(const ComplexMatrix& h, cxd s);

} // namespace fluxlink
