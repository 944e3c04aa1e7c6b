#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ghz {

using Complex = std::complex<double>;

/// Dense square complex matrix with value semantics, row-major storage.
/// Small dimensions only (paradox logic runs at dim 8, solver accepts up
/// to 64).
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    Complex& operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    Complex trace() const;
    ComplexMatrix adjoint() const;

    /// max_ij |a(i,j) - conj(a(j,i))|
    double hermiticity_violation() const;
    bool is_hermitian(double tolerance) const {
        return hermiticity_violation() <= tolerance;
    }

    /// (A + A^dagger) / 2
    ComplexMatrix symmetrized() const;

    /// Sum of |a(i,j)|^2 (squared Frobenius norm; equals Tr(A^2) for
    /// Hermitian A).
    double frobenius_norm_sq() const;

    /// max_ij |a(i,j) - b(i,j)|
    double max_entry_distance(const ComplexMatrix& other) const;

    bool all_finite() const;

    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix scaled(Complex factor) const;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Kronecker product, left factor on the most significant index block.
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenResult {
    std::vector<double> eigenvalues; // sorted ascending
    double max_offdiagonal_residual;
};

/// All eigenvalues of a Hermitian matrix, sorted ascending. Cyclic Jacobi
/// sweeps on the real-symmetric embedding [[X, -Y], [Y, X]]; converges when
/// the largest off-diagonal magnitude drops below 1e-12, hard cap 100
/// sweeps. Deterministic for identical input. dim <= 64.
///
/// Throws NotHermitianError if the input is not Hermitian within 1e-9.
EigenResult hermitian_eigenvalues(const ComplexMatrix& m);

} // namespace ghz
