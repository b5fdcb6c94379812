#include "fluxlink/linalg.hpp"

#include "fluxlink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fluxlink {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionMismatch("ComplexMatrix: dimensions must be >= 1");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = std::conj(data_[k]);
    return out;
}

cxd ComplexMatrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace: matrix not square");
    cxd t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cxd& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cxd& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) throw DimensionMismatch("hermiticity_defect: matrix not square");
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cxd& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("operator+=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("operator-=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cxd s) {
    for (cxd& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(cxd s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("operator*: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            const cxd aik = a(i, k);
            if (aik == cxd(0.0, 0.0)) continue; // operator matrices are mostly zeros
            for (std::size_t j = 0; j < p; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cxd aij = a(i, j);
            if (aij == cxd(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionMismatch("commutator: operands must be square and equal size");
    return a * b - b * a;
}

namespace {

// One cyclic Jacobi sweep: annihilate A(p,q) for all p<q via the unitary
// rotation R with R(p,p)=c, R(p,q)=s*e^{i phi}, R(q,p)=-s*e^{-i phi},
// R(q,q)=c, where A(p,q)=|A(p,q)|e^{i phi}. A <- R^dag A R, V <- V R.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v, double skip) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const cxd apq = a(p, q);
            const double beta = std::abs(apq);
            if (beta <= skip) continue;
            const cxd phase = apq / beta;
            const double alpha = a(p, p).real();
            const double gamma = a(q, q).real();
            const double tau = (gamma - alpha) / (2.0 * beta);
            const double sign = tau >= 0.0 ? 1.0 : -1.0;
            const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const cxd sp = s * phase;           // s e^{i phi}
            const cxd spc = s * std::conj(phase);

            for (std::size_t j = 0; j < n; ++j) { // columns: A <- A R
                const cxd ajp = a(j, p), ajq = a(j, q);
                a(j, p) = c * ajp - spc * ajq;
                a(j, q) = sp * ajp + c * ajq;
            }
            for (std::size_t j = 0; j < n; ++j) { // rows: A <- R^dag A
                const cxd apj = a(p, j), aqj = a(q, j);
                a(p, j) = c * apj - sp * aqj;
                a(q, j) = spc * apj + c * aqj;
            }
            for (std::size_t j = 0; j < n; ++j) { // accumulate V <- V R
                const cxd vjp = v(j, p), vjq = v(j, q);
                v(j, p) = c * vjp - spc * vjq;
                v(j, q) = sp * vjp + c * vjq;
            }
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = a(p, p).real();
            a(q, q) = a(q, q).real();
        }
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

EigenDecomposition herm_eig(const ComplexMatrix& input) {
    if (!input.is_square()) throw DimensionMismatch("herm_eig: matrix not square");
    const std::size_t n = input.rows();
    const double scale = std::max(1.0, input.max_abs());
    if (input.hermiticity_defect() > 1e-9 * scale) {
        throw NonHermitianInput("herm_eig: input deviates from Hermitian beyond tolerance");
    }

    ComplexMatrix a = 0.5 * (input + input.dagger());
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double norm = std::max(a.frobenius_norm(), 1e-300);
    const double stop = 1e-14 * norm;
    const int max_sweeps = 40;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double off = off_diagonal_norm(a);
        if (off <= stop) break;
        jacobi_sweep(a, v, stop / double(n));
    }

    EigenDecomposition dec;
    dec.eigenvalues.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::sort(order.begin(), order.end(),
              [&diag](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

    dec.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        dec.eigenvalues[k] = diag[order[k]];
        for (std::size_t j = 0; j < n; ++j) dec.eigenvectors(j, k) = v(j, order[k]);
    }
    return dec;
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& a) {
    EigenDecomposition dec = herm_eig(a);
    const double scale = std::max(1.0, a.max_abs());
    const std::size_t n = a.rows();
    for (double& lam : dec.eigenvalues) {
        if (lam < -1e-9 * scale) {
            throw NotPositiveSemidefinite("sqrtm_psd: eigenvalue " + std::to_string(lam) +
                                          " below tolerance");
        }
        lam = lam > 0.0 ? std::sqrt(lam) : 0.0;
    }
    const ComplexMatrix& vmat = dec.eigenvectors;
    ComplexMatrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) scaled(i, k) = vmat(i, k) * dec.eigenvalues[k];
    return scaled * vmat.dagger();
}

ComplexMatrix expm_herm_scaled(const ComplexMatrix& h, cxd s) {
    EigenDecomposition dec = herm_eig(h);
    const std::size_t n = h.rows();
    const ComplexMatrix& vmat = dec.eigenvectors;
    ComplexMatrix scaled(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const cxd f = std::exp(s * dec.eigenvalues[k]);
        for (std::size_t i = 0; i < n; ++i) scaled(i, k) = vmat(i, k) * f;
    }
    return scaled * vmat.dagger();
}

} // namespace fluxlink
