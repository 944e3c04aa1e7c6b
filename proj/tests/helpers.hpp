#pragma once

#include "ghz/complex_matrix.hpp"
#include "ghz/rng.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace ghz::testing {

// Literal matrix constructions, written against the definitions rather
// than the library under test.

/// Projector onto (|000> + |111>)/sqrt(2): corners (0,0), (0,7), (7,0),
/// (7,7) at 1/2.
inline ComplexMatrix ghz_matrix() {
    ComplexMatrix m(8);
    m(0, 0) = 0.5;
    m(0, 7) = 0.5;
    m(7, 0) = 0.5;
    m(7, 7) = 0.5;
    return m;
}

/// Anti-corner matrix: only (0,7) and (7,0) set to f1 (not a state).
inline ComplexMatrix corner_only_matrix(double f1) {
    ComplexMatrix m(8);
    m(0, 7) = f1;
    m(7, 0) = f1;
    return m;
}

/// Corner block matrix: (0,0), (0,7), (7,0), (7,7) set to f1, rest zero
/// (unit trace only at f1 = 1/2).
inline ComplexMatrix corner_block_matrix(double f1) {
    ComplexMatrix m = corner_only_matrix(f1);
    m(0, 0) = f1;
    m(7, 7) = f1;
    return m;
}

/// The noise-resistant family written out entry by entry: corner block at
/// f1 plus diagonal fill (1 - 2 f1)/6 on rows 1..6.
inline ComplexMatrix optimal_family_matrix(double f1) {
    ComplexMatrix m = corner_block_matrix(f1);
    const double fill = (1.0 - 2.0 * f1) / 6.0;
    for (std::size_t i = 1; i <= 6; ++i) {
        m(i, i) = fill;
    }
    return m;
}

/// Basis-state projector |k><k|.
inline ComplexMatrix basis_projector(std::size_t k) {
    ComplexMatrix m(8);
    m(k, k) = 1.0;
    return m;
}

/// Random Hermitian matrix with entries of order one (not a state).
inline ComplexMatrix random_hermitian(std::uint64_t seed, std::size_t dim = 8) {
    Rng rng(seed);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = Complex{rng.normal(), 0.0};
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex z{rng.normal(), rng.normal()};
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

/// Determinant by LU decomposition with partial pivoting. Independent of
/// the Jacobi eigensolver; used to cross-check eigenvalues through the
/// characteristic polynomial.
inline Complex determinant(ComplexMatrix m) {
    const std::size_t n = m.dim();
    Complex det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(m(row, col)) > std::abs(m(pivot, col))) {
                pivot = row;
            }
        }
        if (std::abs(m(pivot, col)) == 0.0) {
            return Complex{0.0, 0.0};
        }
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(m(col, k), m(pivot, k));
            }
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t row = col + 1; row < n; ++row) {
            const Complex factor = m(row, col) / m(col, col);
            if (factor == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t k = col; k < n; ++k) {
                m(row, k) -= factor * m(col, k);
            }
        }
    }
    return det;
}

} // namespace ghz::testing
