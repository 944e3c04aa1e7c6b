#include "ghz/paradox.hpp"

#include "ghz/errors.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghz {

namespace {

constexpr double kIdentitySlack = 1e-12;
constexpr double kViolationSlack = 1e-12;
constexpr double kMaxFrontierEntropy = 17.0 / 21.0; // frontier_entropy(1/4)

const std::array<PauliIndex, 4> kObservableIndices = {
    PauliIndex{1, 1, 1}, // XXX
    PauliIndex{2, 1, 2}, // YXY
    PauliIndex{2, 2, 1}, // YYX
    PauliIndex{1, 2, 2}, // XYY
};

constexpr std::array<int, 4> kTargetSigns = {+1, -1, -1, -1};

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    Complex tr{0.0, 0.0};
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            tr += a(i, j) * b(j, i);
        }
    }
    return tr.real();
}

GhzObservableSet build_observables() {
    GhzObservableSet set{
        {pauli_operator(kObservableIndices[0]), pauli_operator(kObservableIndices[1]),
         pauli_operator(kObservableIndices[2]), pauli_operator(kObservableIndices[3])},
        kTargetSigns};

    const ComplexMatrix id = ComplexMatrix::identity(8);
    for (std::size_t i = 0; i < 4; ++i) {
        if ((set.operators[i] * set.operators[i]).max_entry_distance(id) > kIdentitySlack) {
            throw std::runtime_error("observable " + std::to_string(i + 1) +
                                     " does not square to identity");
        }
        for (std::size_t j = i + 1; j < 4; ++j) {
            const ComplexMatrix commutator =
                set.operators[i] * set.operators[j] - set.operators[j] * set.operators[i];
            if (commutator.max_entry_distance(ComplexMatrix(8)) > kIdentitySlack) {
                throw std::runtime_error("observables " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " do not commute");
            }
        }
    }
    return set;
}

ComplexMatrix ghz_projector_matrix() {
    ComplexMatrix m(8);
    m(0, 0) = 0.5;
    m(0, 7) = 0.5;
    m(7, 0) = 0.5;
    m(7, 7) = 0.5;
    return m;
}

void require_dim8(const DensityMatrix& rho, const char* op) {
    if (rho.dim() != 8) {
        throw DomainError(std::string(op) + ": expected a three-qubit state (dim 8)");
    }
}

// Solves a small dense linear system in place by Gaussian elimination with
// partial pivoting.
std::array<double, 4> solve4(std::array<std::array<double, 4>, 4> a,
                             std::array<double, 4> rhs) {
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < 4; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) {
                pivot = row;
            }
        }
        if (a[pivot][col] == 0.0) {
            throw std::runtime_error("anti-diagonal system is singular");
        }
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t row = col + 1; row < 4; ++row) {
            const double factor = a[row][col] / a[col][col];
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t k = col; k < 4; ++k) {
                a[row][k] -= factor * a[col][k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    std::array<double, 4> x{};
    for (std::size_t row = 4; row-- > 0;) {
        double acc = rhs[row];
        for (std::size_t k = row + 1; k < 4; ++k) {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    return x;
}

} // namespace

const GhzObservableSet& observables() {
    static const GhzObservableSet set = [] {
        GhzObservableSet s = build_observables();
        // The GHZ state must be a common eigenstate with the target signs.
        const ComplexMatrix ghz = ghz_projector_matrix();
        for (std::size_t i = 0; i < 4; ++i) {
            const double expectation = real_trace_product(ghz, s.operators[i]);
            if (std::abs(expectation - s.target_signs[i]) > kIdentitySlack) {
                throw std::runtime_error("GHZ state is not an eigenstate of observable " +
                                         std::to_string(i + 1));
            }
        }
        return s;
    }();
    return set;
}

DensityMatrix ghz_state() {
    return DensityMatrix::build(ghz_projector_matrix());
}

std::array<double, 4> event_probabilities(const DensityMatrix& rho) {
    require_dim8(rho, "event_probabilities");
    const GhzObservableSet& set = observables();
    const ComplexMatrix id = ComplexMatrix::identity(8);

    std::array<double, 4> q{};
    for (std::size_t i = 0; i < 4; ++i) {
        const ComplexMatrix projector =
            (id + set.operators[i].scaled(Complex{static_cast<double>(set.target_signs[i]), 0.0}))
                .scaled(Complex{0.5, 0.0});
        q[i] = real_trace_product(rho.matrix(), projector);
    }

    // Cross-check against the coefficient form.
    const PauliCoefficients coeffs = decompose(rho);
    const std::array<double, 4> from_coeffs = {
        0.5 * (1.0 + coeffs.at(kObservableIndices[0])),
        0.5 * (1.0 - coeffs.at(kObservableIndices[1])),
        0.5 * (1.0 - coeffs.at(kObservableIndices[2])),
        0.5 * (1.0 - coeffs.at(kObservableIndices[3])),
    };
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(q[i] - from_coeffs[i]) > kIdentitySlack) {
            throw std::runtime_error("event probability routes disagree for observable " +
                                     std::to_string(i + 1));
        }
    }
    return q;
}

ParadoxReport paradox_report(const DensityMatrix& rho) {
    require_dim8(rho, "paradox_report");
    ParadoxReport report{};
    report.q = event_probabilities(rho);
    report.inequality_value =
        3.0 - report.q[0] - report.q[1] - report.q[2] - report.q[3];

    const PauliCoefficients coeffs = decompose(rho);
    report.f1 = (coeffs.at(kObservableIndices[0]) - coeffs.at(kObservableIndices[1]) -
                 coeffs.at(kObservableIndices[2]) - coeffs.at(kObservableIndices[3])) /
                8.0;

    if (std::abs(report.inequality_value - (1.0 - 4.0 * report.f1)) > kIdentitySlack) {
        throw std::runtime_error("inequality value does not match 1 - 4 f1");
    }
    report.violated = report.inequality_value < -kViolationSlack;
    return report;
}

OptimalFamilyParam OptimalFamilyParam::from_f1(double f1) {
    if (!(f1 >= 0.0 && f1 <= 0.5)) {
        throw DomainError("f1 = " + std::to_string(f1) +
                          " outside the admissible range [0, 0.5]");
    }
    return OptimalFamilyParam{f1, (1.0 - 2.0 * f1) / 6.0, f1 > 0.25 + kViolationSlack};
}

DensityMatrix optimal_state(double f1) {
    const OptimalFamilyParam param = OptimalFamilyParam::from_f1(f1);
    ComplexMatrix m(8);
    m(0, 0) = param.f1;
    m(0, 7) = param.f1;
    m(7, 0) = param.f1;
    m(7, 7) = param.f1;
    for (std::size_t i = 1; i <= 6; ++i) {
        m(i, i) = param.f;
    }
    return DensityMatrix::build(m);
}

double frontier_entropy(double f1) {
    const OptimalFamilyParam param = OptimalFamilyParam::from_f1(f1);
    return 8.0 / 7.0 *
           (1.0 - 4.0 * param.f1 * param.f1 - 6.0 * param.f * param.f);
}

double purity_floor(double f1) {
    if (!(f1 >= 0.0)) {
        throw DomainError("purity_floor: f1 must be non-negative");
    }
    const double rest = 1.0 - 2.0 * f1;
    return 4.0 * f1 * f1 + rest * rest / 6.0;
}

double frontier_invert(double entropy) {
    if (!(entropy >= 0.0 && entropy <= kMaxFrontierEntropy + 1e-12)) {
        throw DomainError("frontier_invert: entropy " + std::to_string(entropy) +
                          " outside [0, " + std::to_string(kMaxFrontierEntropy) + "]");
    }
    // frontier_entropy(f1) = (4/21)(5 + 4 f1 - 28 f1^2); solving for the
    // larger root of (14/3) f1^2 - (2/3) f1 + (7 entropy/8 - 5/6) = 0
    // selects the monotone branch f1 in [1/4, 1/2].
    const double discriminant = 16.0 - 49.0 * entropy / 3.0;
    const double root = (2.0 + 3.0 * std::sqrt(discriminant)) / 28.0;
    return std::min(0.5, std::max(0.25, root));
}

NoiseMixture noise_mixture(double f1) {
    const OptimalFamilyParam param = OptimalFamilyParam::from_f1(f1);
    NoiseMixture mix{};
    mix.ghz_weight = 2.0 * param.f1;
    mix.noise_weight = 1.0 - 2.0 * param.f1;
    mix.paradox_survives = param.paradox_regime;
    return mix;
}

FrontierPoint frontier_point(double f1) {
    FrontierPoint point{};
    point.f1 = f1;
    point.violation = 4.0 * f1 - 1.0;
    point.entropy = frontier_entropy(f1);
    point.purity_floor = purity_floor(f1);
    return point;
}

PauliCoefficients methods_solve_antidiagonal(double f1) {
    if (!std::isfinite(f1)) {
        throw DomainError("methods_solve_antidiagonal: f1 must be finite");
    }
    // Anti-diagonal positions (0,7), (1,6), (2,5), (3,4); coefficient
    // columns p_111, p_212, p_221, p_122 with the 1/8 reconstruction
    // normalization.
    std::array<std::array<double, 4>, 4> system{};
    for (std::size_t row = 0; row < 4; ++row) {
        for (std::size_t col = 0; col < 4; ++col) {
            const ComplexMatrix& op = pauli_operator(kObservableIndices[col]);
            system[row][col] = 0.125 * op(row, 7 - row).real();
        }
    }
    const std::array<double, 4> solution = solve4(system, {f1, 0.0, 0.0, 0.0});

    PauliCoefficients coeffs;
    for (std::size_t col = 0; col < 4; ++col) {
        coeffs.at(kObservableIndices[col]) = solution[col];
    }
    return coeffs;
}

} // namespace ghz
