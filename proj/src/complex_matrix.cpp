#include "ghz/complex_matrix.hpp"

#include "ghz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghz {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = Complex{1.0, 0.0};
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(i, j) = std::conj((*this)(j, i));
        }
    }
    return out;
}

double ComplexMatrix::hermiticity_violation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

ComplexMatrix ComplexMatrix::symmetrized() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
        }
    }
    return out;
}

double ComplexMatrix::frobenius_norm_sq() const {
    double sum = 0.0;
    for (const Complex& z : entries_) {
        sum += std::norm(z);
    }
    return sum;
}

double ComplexMatrix::max_entry_distance(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) {
        throw DomainError("max_entry_distance: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) {
        throw DomainError("matrix addition: dimension mismatch");
    }
    ComplexMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] + rhs.entries_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) {
        throw DomainError("matrix subtraction: dimension mismatch");
    }
    ComplexMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] - rhs.entries_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) {
        throw DomainError("matrix product: dimension mismatch");
    }
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
    ComplexMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] * factor;
    }
    return out;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

namespace {

constexpr double kJacobiThreshold = 1e-12;
constexpr int kMaxSweeps = 100;
constexpr double kHermitianPrecondition = 1e-9;

double max_offdiagonal(const std::vector<double>& b, std::size_t n) {
    double worst = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            worst = std::max(worst, std::abs(b[p * n + q]));
        }
    }
    return worst;
}

// One cyclic sweep of classical Jacobi rotations on a real symmetric
// matrix stored densely in b (n x n).
void jacobi_sweep(std::vector<double>& b, std::size_t n) {
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const double apq = b[p * n + q];
            if (apq == 0.0) {
                continue;
            }
            const double app = b[p * n + p];
            const double aqq = b[q * n + q];
            const double theta = (aqq - app) / (2.0 * apq);
            const double t = (theta >= 0.0)
                                 ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                 : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;

            for (std::size_t k = 0; k < n; ++k) {
                const double bkp = b[k * n + p];
                const double bkq = b[k * n + q];
                b[k * n + p] = c * bkp - s * bkq;
                b[k * n + q] = s * bkp + c * bkq;
            }
            for (std::size_t k = 0; k < n; ++k) {
                const double bpk = b[p * n + k];
                const double bqk = b[q * n + k];
                b[p * n + k] = c * bpk - s * bqk;
                b[q * n + k] = s * bpk + c * bqk;
            }
        }
    }
}

} // namespace

EigenResult hermitian_eigenvalues(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    if (n > 64) {
        throw DomainError("hermitian_eigenvalues: dim > 64 not supported");
    }
    const double violation = m.hermiticity_violation();
    if (violation > kHermitianPrecondition) {
        throw NotHermitianError("hermitian_eigenvalues: matrix is not Hermitian (violation " +
                                std::to_string(violation) + ")");
    }

    // Real-symmetric embedding of X + iY as [[X, -Y], [Y, X]]. Every
    // eigenvalue of the Hermitian input appears twice in the embedding.
    const std::size_t big = 2 * n;
    std::vector<double> b(big * big, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
            b[i * big + j] = h.real();
            b[(i + n) * big + (j + n)] = h.real();
            b[i * big + (j + n)] = -h.imag();
            b[(i + n) * big + j] = h.imag();
        }
    }

    double residual = max_offdiagonal(b, big);
    int sweep = 0;
    while (residual >= kJacobiThreshold && sweep < kMaxSweeps) {
        jacobi_sweep(b, big);
        residual = max_offdiagonal(b, big);
        ++sweep;
    }
    if (residual >= kJacobiThreshold) {
        throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge in " +
                                 std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<double> doubled(big);
    for (std::size_t i = 0; i < big; ++i) {
        doubled[i] = b[i * big + i];
    }
    std::sort(doubled.begin(), doubled.end());

    EigenResult result;
    result.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Eigenvalues pair up in the sorted embedding; average the pair to
        // cancel the rotation noise between the two copies.
        result.eigenvalues[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    result.max_offdiagonal_residual = residual;
    return result;
}

} // namespace ghz
