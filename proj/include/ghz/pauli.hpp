#pragma once

#include "ghz/complex_matrix.hpp"
#include "ghz/density_matrix.hpp"

#include <array>
#include <cstddef>

namespace ghz {

/// Index into the three-qubit Pauli tensor basis. Components mean
/// 0 = identity, 1 = sigma_x, 2 = sigma_y, 3 = sigma_z, so e.g. (1,1,1)
/// is sigma_x (x) sigma_x (x) sigma_x and (2,1,2) is
/// sigma_y (x) sigma_x (x) sigma_y.
struct PauliIndex {
    int r;
    int s;
    int t;

    bool valid() const {
        return r >= 0 && r <= 3 && s >= 0 && s <= 3 && t >= 0 && t <= 3;
    }

    /// Position in lexicographic (r, s, t) order, 0..63.
    std::size_t flat() const {
        return static_cast<std::size_t>(r * 16 + s * 4 + t);
    }
};

/// The 64 real expansion coefficients of a three-qubit state over the
/// Pauli tensor basis, lexicographic (r, s, t) order. For a unit-trace
/// state the (0,0,0) coefficient is 1 and every coefficient lies in
/// [-1, 1].
struct PauliCoefficients {
    std::array<double, 64> values{};

    double at(PauliIndex idx) const { return values[idx.flat()]; }
    double& at(PauliIndex idx) { return values[idx.flat()]; }
};

/// The 8x8 operator sigma_r (x) sigma_s (x) sigma_t, first factor on the
/// most significant qubit. Built once and cached.
const ComplexMatrix& pauli_operator(PauliIndex idx);

/// p_rst = Tr(rho . sigma_r (x) sigma_s (x) sigma_t). Imaginary residues
/// stay below 1e-12 for a valid state and are discarded.
PauliCoefficients decompose(const DensityMatrix& rho);

/// (1/8) sum p_rst sigma_r (x) sigma_s (x) sigma_t. Inverse of decompose
/// up to rounding.
ComplexMatrix reconstruct(const PauliCoefficients& coeffs);

/// Linear entropy computed from coefficients alone:
/// 1 - (1/7) sum_{(r,s,t) != (0,0,0)} p_rst^2.
///
/// The identity coefficient is excluded from the sum. Including it would
/// shift the result by a constant 1/7 and break agreement with
/// DensityMatrix::linear_entropy (the maximally mixed state would come
/// out as 6/7 instead of 1).
double entropy_from_coefficients(const PauliCoefficients& coeffs);

} // namespace ghz
