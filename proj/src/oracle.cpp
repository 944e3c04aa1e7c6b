#include "ghz/oracle.hpp"

#include "ghz/errors.hpp"
#include "ghz/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace ghz {

namespace {

constexpr std::size_t kDim = 8;
constexpr double kFloorRegimeCutoff = 0.125; // 1/8
constexpr double kFloorSlack = 1e-9;

ComplexMatrix ginibre_matrix(Rng& rng) {
    ComplexMatrix g(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            g(i, j) = Complex{rng.normal(), rng.normal()};
        }
    }
    return g;
}

DensityMatrix ginibre_state(Rng& rng) {
    const ComplexMatrix g = ginibre_matrix(rng);
    ComplexMatrix m = g * g.adjoint();
    const double trace = m.trace().real();
    return DensityMatrix::build(m.scaled(Complex{1.0 / trace, 0.0}));
}

// --- constrained purity minimization -----------------------------------
//
// The search runs over a full 8x8 complex factor A (128 real parameters),
// rho = A A^dagger / Tr(A A^dagger). Every candidate is restored to the
// exact constraint f1 = target before scoring: a state with corner weight
// s below target is mixed toward the GHZ projector (corner weight 1/2),
// one above target toward the maximally mixed state (corner weight 0),
// with the unique weight that lands exactly on target. f1 is affine in
// the state, so the restored candidate is feasible to rounding, and its
// purity can only sit above the analytic floor. A bare quadratic penalty
// cannot deliver that: with weight w it leaves a bias of order
// floor'(t)/(2w) ~ 1e-4 in f1, which would undershoot the floor by far
// more than the tolerated 1e-9.

constexpr std::size_t kParams = 2 * kDim * kDim;

using ParamVector = std::array<double, kParams>;

struct RestoredScore {
    double purity;
    double f1;
    double objective; // purity + penalty_weight (f1 - target)^2
};

// Scores one factor without materializing the restored matrix.
RestoredScore score_factor(const ParamVector& x, double target_f1,
                           double penalty_weight) {
    // M = A A^dagger, upper triangle only.
    std::array<Complex, kDim * kDim> m{};
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = i; j < kDim; ++j) {
            double re = 0.0;
            double im = 0.0;
            for (std::size_t k = 0; k < kDim; ++k) {
                const double air = x[2 * (kDim * i + k)];
                const double aii = x[2 * (kDim * i + k) + 1];
                const double ajr = x[2 * (kDim * j + k)];
                const double aji = x[2 * (kDim * j + k) + 1];
                re += air * ajr + aii * aji;
                im += aii * ajr - air * aji;
            }
            m[i * kDim + j] = Complex{re, im};
        }
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) {
        trace += m[i * kDim + i].real();
    }

    double norm_sq = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) {
        norm_sq += std::norm(m[i * kDim + i]);
        for (std::size_t j = i + 1; j < kDim; ++j) {
            norm_sq += 2.0 * std::norm(m[i * kDim + j]);
        }
    }
    const double purity_raw = norm_sq / (trace * trace);
    const double s = m[7].real() / trace; // Re rho(0,7)

    double lambda = 0.0;
    double cross = 0.0;        // Tr(rho P) for the mixing partner P
    double partner_purity = 0.0;
    double partner_f1 = 0.0;
    if (s < target_f1) {
        lambda = (target_f1 - s) / (0.5 - s);
        cross = 0.5 * (m[0].real() + m[63].real() + 2.0 * m[7].real()) / trace;
        partner_purity = 1.0;
        partner_f1 = 0.5;
    } else if (s > target_f1) {
        lambda = (s - target_f1) / s;
        cross = 0.125;
        partner_purity = 0.125;
        partner_f1 = 0.0;
    }

    RestoredScore out{};
    out.purity = (1.0 - lambda) * (1.0 - lambda) * purity_raw +
                 2.0 * lambda * (1.0 - lambda) * cross +
                 lambda * lambda * partner_purity;
    out.f1 = (1.0 - lambda) * s + lambda * partner_f1;
    const double residual = out.f1 - target_f1;
    out.objective = out.purity + penalty_weight * residual * residual;
    return out;
}

// Materializes the restored state for reporting.
DensityMatrix restored_state(const ParamVector& x, double target_f1) {
    ComplexMatrix a(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            a(i, j) = Complex{x[2 * (kDim * i + j)], x[2 * (kDim * i + j) + 1]};
        }
    }
    ComplexMatrix m = a * a.adjoint();
    const double trace = m.trace().real();
    ComplexMatrix rho = m.scaled(Complex{1.0 / trace, 0.0});

    const double s = rho(0, 7).real();
    if (s < target_f1) {
        const double lambda = (target_f1 - s) / (0.5 - s);
        ComplexMatrix ghz(kDim);
        ghz(0, 0) = 0.5;
        ghz(0, 7) = 0.5;
        ghz(7, 0) = 0.5;
        ghz(7, 7) = 0.5;
        rho = rho.scaled(Complex{1.0 - lambda, 0.0}) + ghz.scaled(Complex{lambda, 0.0});
    } else if (s > target_f1) {
        const double lambda = (s - target_f1) / s;
        rho = rho.scaled(Complex{1.0 - lambda, 0.0}) +
              ComplexMatrix::identity(kDim).scaled(Complex{lambda / 8.0, 0.0});
    }
    return DensityMatrix::build(rho);
}

// sqrt of optimal_state(f1): same sparsity pattern, corner block
// sqrt(2 f1)/2 and diagonal sqrt(f), since the family is written in its
// eigenbasis.
ParamVector warm_start_factor(double f1) {
    const double corner = std::sqrt(2.0 * f1) / 2.0;
    const double diag = std::sqrt((1.0 - 2.0 * f1) / 6.0);
    ParamVector x{};
    x[2 * (kDim * 0 + 0)] = corner;
    x[2 * (kDim * 0 + 7)] = corner;
    x[2 * (kDim * 7 + 0)] = corner;
    x[2 * (kDim * 7 + 7)] = corner;
    for (std::size_t i = 1; i <= 6; ++i) {
        x[2 * (kDim * i + i)] = diag;
    }
    return x;
}

struct DescentOutcome {
    ParamVector best_x;
    double best_objective;
    int iterations;
    bool converged;
};

DescentOutcome descend(ParamVector x, double target_f1,
                       const OptimizerOptions& options) {
    constexpr double kDiffStep = 1e-6;
    constexpr double kStallWindowImprovement = 1e-12;
    constexpr int kStallWindow = 50;
    constexpr int kMaxHalvings = 30;

    auto objective = [&](const ParamVector& p) {
        return score_factor(p, target_f1, options.penalty_weight).objective;
    };

    DescentOutcome outcome{};
    outcome.best_x = x;
    outcome.best_objective = objective(x);
    outcome.converged = false;

    double step = 0.05;
    double window_anchor = outcome.best_objective;
    int window_start = 0;

    ParamVector grad{};
    ParamVector trial{};
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        outcome.iterations = iter + 1;

        ParamVector probe = outcome.best_x;
        for (std::size_t k = 0; k < kParams; ++k) {
            const double saved = probe[k];
            probe[k] = saved + kDiffStep;
            const double up = objective(probe);
            probe[k] = saved - kDiffStep;
            const double down = objective(probe);
            probe[k] = saved;
            grad[k] = (up - down) / (2.0 * kDiffStep);
        }

        bool improved = false;
        for (int halving = 0; halving < kMaxHalvings; ++halving) {
            for (std::size_t k = 0; k < kParams; ++k) {
                trial[k] = outcome.best_x[k] - step * grad[k];
            }
            const double value = objective(trial);
            if (value < outcome.best_objective) {
                outcome.best_x = trial;
                outcome.best_objective = value;
                step *= 1.3;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) {
            // Step underflowed against the gradient: resolution limit.
            outcome.converged = true;
            break;
        }

        if (iter - window_start >= kStallWindow) {
            if (window_anchor - outcome.best_objective < kStallWindowImprovement) {
                outcome.converged = true;
                break;
            }
            window_anchor = outcome.best_objective;
            window_start = iter;
        }
    }
    return outcome;
}

} // namespace

DensityMatrix sample_state(std::uint64_t seed, SampleMode mode,
                           double perturbation_weight) {
    Rng rng(seed);
    if (mode == SampleMode::ginibre) {
        return ginibre_state(rng);
    }
    if (!(perturbation_weight >= 0.0 && perturbation_weight <= 1.0)) {
        throw DomainError("perturbation weight must be in [0, 1]");
    }
    // Draw the frontier point first, then the perturbation, so the stream
    // layout is part of the sampling contract.
    const double f1 = 0.25 + 0.25 * rng.uniform();
    const DensityMatrix anchor = optimal_state(f1);
    const DensityMatrix noise = ginibre_state(rng);
    const std::array<DensityMatrix, 2> states = {anchor, noise};
    const std::array<double, 2> weights = {1.0 - perturbation_weight, perturbation_weight};
    return convex_mix(states, weights);
}

ScanReport purity_bound_scan(const SampleConfig& config) {
    if (config.count < 1) {
        throw DomainError("purity_bound_scan: count must be at least 1");
    }
    ScanReport report{};
    report.samples = config.count;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < config.count; ++i) {
        const DensityMatrix rho =
            sample_state(config.seed + i, config.mode, config.perturbation_weight);
        const double w1 = std::abs(rho.matrix()(0, 7).real());
        if (w1 < kFloorRegimeCutoff) {
            continue;
        }
        const double margin = rho.purity() - purity_floor(w1);
        report.checked += 1;
        report.worst_margin = std::min(report.worst_margin, margin);
        if (margin < -kFloorSlack) {
            report.violations += 1;
        }
    }
    if (report.checked == 0) {
        report.worst_margin = 0.0;
    }
    return report;
}

OptimizationResult minimize_purity_at_f1(double target_f1,
                                         const OptimizerOptions& options) {
    if (!(target_f1 >= 0.25 && target_f1 <= 0.5)) {
        throw DomainError("optimizer target f1 = " + std::to_string(target_f1) +
                          " outside the admissible range [0.25, 0.5]");
    }
    if (options.restarts < 1) {
        throw DomainError("optimizer needs at least one restart");
    }

    OptimizationResult result{};
    result.target_f1 = target_f1;
    result.analytic_floor = purity_floor(target_f1);

    bool have_best = false;
    DescentOutcome best{};
    for (int r = 0; r < options.restarts; ++r) {
        ParamVector x0;
        if (options.warm_start && r == 0) {
            x0 = warm_start_factor(target_f1);
        } else {
            Rng rng(options.seed + static_cast<std::uint64_t>(r));
            for (double& v : x0) {
                v = rng.normal();
            }
        }
        DescentOutcome outcome = descend(x0, target_f1, options);
        result.iterations += outcome.iterations;
        if (!have_best || outcome.best_objective < best.best_objective ||
            (outcome.best_objective == best.best_objective && outcome.converged &&
             !best.converged)) {
            best = outcome;
            have_best = true;
        }
    }

    DensityMatrix state = restored_state(best.best_x, target_f1);
    result.achieved_f1 = state.matrix()(0, 7).real();
    result.achieved_purity = state.purity();
    result.gap = result.achieved_purity - result.analytic_floor;
    result.converged =
        best.converged && std::abs(result.achieved_f1 - target_f1) <= options.tolerance;
    result.state = std::move(state);
    return result;
}

std::vector<std::pair<FrontierPoint, OptimizationResult>>
frontier_scan(std::span<const double> grid, const OptimizerOptions& options) {
    for (double f1 : grid) {
        if (!(f1 >= 0.25 && f1 <= 0.5)) {
            throw DomainError("frontier grid value " + std::to_string(f1) +
                              " outside the admissible range [0.25, 0.5]");
        }
    }
    std::vector<std::pair<FrontierPoint, OptimizationResult>> rows;
    rows.reserve(grid.size());
    for (double f1 : grid) {
        const FrontierPoint analytic = frontier_point(f1);
        OptimizationResult numeric;
        try {
            numeric = minimize_purity_at_f1(f1, options);
        } catch (const Error&) {
            numeric = OptimizationResult{};
            numeric.target_f1 = f1;
            numeric.analytic_floor = analytic.purity_floor;
            numeric.achieved_f1 = std::numeric_limits<double>::quiet_NaN();
            numeric.achieved_purity = std::numeric_limits<double>::quiet_NaN();
            numeric.gap = std::numeric_limits<double>::quiet_NaN();
            numeric.converged = false;
        }
        rows.emplace_back(analytic, numeric);
    }
    return rows;
}

} // namespace ghz
