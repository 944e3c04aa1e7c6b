#pragma once

#include "ghz/complex_matrix.hpp"

#include <cstddef>
#include <span>

namespace ghz {

/// Default tolerance for the Hermiticity, positivity, and trace checks.
/// Far above accumulated rounding at dim 8, far below any physically
/// meaningful eigenvalue.
constexpr double kDefaultValidationTolerance = 1e-10;

/// A validated quantum state: Hermitian, positive semi-definite, unit
/// trace. Immutable after construction. The stored matrix is symmetrized
/// ((M + M^dagger)/2) so representable rounding noise does not leak into
/// downstream arithmetic.
///
/// Basis convention: computational basis ordered |000>, |001>, ..., |111>
/// (binary ascending), qubit 1 most significant.
class DensityMatrix {
public:
    /// Validates and wraps a matrix. Checks run in the order Hermitian,
    /// positive semi-definite, unit trace, and throw NotHermitianError,
    /// NotPositiveSemiDefiniteError (reporting the most negative
    /// eigenvalue), or TraceNotOneError. The dimension must be a power of
    /// two.
    static DensityMatrix build(const ComplexMatrix& m,
                               double tolerance = kDefaultValidationTolerance);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }
    double validation_tolerance() const { return tolerance_; }

    /// Tr(rho^2), in [1/dim, 1].
    double purity() const { return matrix_.frobenius_norm_sq(); }

    /// (d/(d-1)) (1 - Tr(rho^2)), normalized to [0, 1].
    double linear_entropy() const;

private:
    DensityMatrix(ComplexMatrix m, double tolerance)
        : matrix_(std::move(m)), tolerance_(tolerance) {}

    ComplexMatrix matrix_;
    double tolerance_;
};

/// Sum of w_i rho_i, revalidated. Weights must be non-negative and sum to
/// one within 1e-12; all states must share a dimension. Throws
/// WeightsError otherwise.
DensityMatrix convex_mix(std::span<const DensityMatrix> states,
                         std::span<const double> weights);

} // namespace ghz
