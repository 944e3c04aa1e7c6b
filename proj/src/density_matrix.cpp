#include "ghz/density_matrix.hpp"

#include "ghz/errors.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace ghz {

namespace {

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

} // namespace

DensityMatrix DensityMatrix::build(const ComplexMatrix& m, double tolerance) {
    if (!is_power_of_two(m.dim())) {
        throw DomainError("density matrix dimension must be a power of two, got " +
                          std::to_string(m.dim()));
    }
    if (!m.all_finite()) {
        throw ValidationError("density matrix has non-finite entries", "finite");
    }

    const double violation = m.hermiticity_violation();
    if (violation > tolerance) {
        throw NotHermitianError("matrix is not Hermitian: max |a(i,j) - conj(a(j,i))| = " +
                                std::to_string(violation));
    }

    ComplexMatrix sym = m.symmetrized();

    // Positivity is checked before the trace so that a matrix failing both
    // reports its negative eigenvalue rather than the trace deficit.
    const EigenResult eig = hermitian_eigenvalues(sym);
    const double min_eigenvalue = eig.eigenvalues.front();
    if (min_eigenvalue < -tolerance) {
        throw NotPositiveSemiDefiniteError(
            "matrix is not positive semi-definite: minimum eigenvalue = " +
                std::to_string(min_eigenvalue),
            min_eigenvalue);
    }

    const double trace = sym.trace().real();
    if (std::abs(trace - 1.0) > tolerance) {
        throw TraceNotOneError("matrix trace is " + std::to_string(trace) + ", expected 1",
                               trace);
    }

    return DensityMatrix(std::move(sym), tolerance);
}

double DensityMatrix::linear_entropy() const {
    const double d = static_cast<double>(dim());
    return d / (d - 1.0) * (1.0 - purity());
}

DensityMatrix convex_mix(std::span<const DensityMatrix> states,
                         std::span<const double> weights) {
    if (states.empty() || states.size() != weights.size()) {
        throw WeightsError("convex_mix: need one weight per state");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw WeightsError("convex_mix: weights must be non-negative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw WeightsError("convex_mix: weights sum to " + std::to_string(sum) +
                           ", expected 1");
    }
    const std::size_t dim = states.front().dim();
    for (const DensityMatrix& s : states) {
        if (s.dim() != dim) {
            throw WeightsError("convex_mix: states have mismatched dimensions");
        }
    }

    ComplexMatrix mixed(dim);
    for (std::size_t k = 0; k < states.size(); ++k) {
        mixed = mixed + states[k].matrix().scaled(Complex{weights[k], 0.0});
    }
    return DensityMatrix::build(mixed, states.front().validation_tolerance());
}

} // namespace ghz
