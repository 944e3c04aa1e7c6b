#include "ghz/pauli.hpp"

#include "ghz/errors.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace ghz {

namespace {

ComplexMatrix single_qubit_pauli(int which) {
    ComplexMatrix m(2);
    switch (which) {
    case 0: // identity
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        break;
    case 1: // sigma_x
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case 2: // sigma_y
        m(0, 1) = Complex{0.0, -1.0};
        m(1, 0) = Complex{0.0, 1.0};
        break;
    case 3: // sigma_z
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    default:
        throw DomainError("pauli component index must be in 0..3");
    }
    return m;
}

std::vector<ComplexMatrix> build_operator_table() {
    std::vector<ComplexMatrix> table;
    table.reserve(64);
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            for (int t = 0; t < 4; ++t) {
                table.push_back(kronecker(single_qubit_pauli(r),
                                          kronecker(single_qubit_pauli(s),
                                                    single_qubit_pauli(t))));
            }
        }
    }
    return table;
}

const std::vector<ComplexMatrix>& operator_table() {
    static const std::vector<ComplexMatrix> table = build_operator_table();
    return table;
}

} // namespace

const ComplexMatrix& pauli_operator(PauliIndex idx) {
    if (!idx.valid()) {
        throw DomainError("pauli_operator: index components must be in 0..3");
    }
    return operator_table()[idx.flat()];
}

PauliCoefficients decompose(const DensityMatrix& rho) {
    if (rho.dim() != 8) {
        throw DomainError("decompose: expected a three-qubit state (dim 8)");
    }
    PauliCoefficients coeffs;
    const ComplexMatrix& m = rho.matrix();
    for (std::size_t flat = 0; flat < 64; ++flat) {
        const ComplexMatrix& op = operator_table()[flat];
        Complex tr{0.0, 0.0};
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                tr += m(i, j) * op(j, i);
            }
        }
        coeffs.values[flat] = tr.real();
    }
    return coeffs;
}

ComplexMatrix reconstruct(const PauliCoefficients& coeffs) {
    for (double v : coeffs.values) {
        if (!std::isfinite(v)) {
            throw DomainError("reconstruct: coefficients must be finite");
        }
    }
    ComplexMatrix out(8);
    for (std::size_t flat = 0; flat < 64; ++flat) {
        const double p = coeffs.values[flat];
        if (p == 0.0) {
            continue;
        }
        const ComplexMatrix& op = operator_table()[flat];
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                out(i, j) += 0.125 * p * op(i, j);
            }
        }
    }
    return out;
}

double entropy_from_coefficients(const PauliCoefficients& coeffs) {
    double sum_sq = 0.0;
    for (std::size_t flat = 1; flat < 64; ++flat) {
        sum_sq += coeffs.values[flat] * coeffs.values[flat];
    }
    return 1.0 - sum_sq / 7.0;
}

} // namespace ghz
