#pragma once

#include "ghz/density_matrix.hpp"
#include "ghz/paradox.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ghz {

enum class SampleMode {
    ginibre,              // G G^dagger / Tr(G G^dagger), complex Gaussian G
    frontier_perturbation // (1-w) optimal_state(f1 ~ U[1/4,1/2]) + w ginibre
};

struct SampleConfig {
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    SampleMode mode = SampleMode::ginibre;
    double perturbation_weight = 0.0; // frontier_perturbation only, in [0, 1]
};

/// One random state, deterministic for a given (seed, mode, weight).
/// Samples inside a scan use per-sample seeds seed + index, so the
/// aggregate is independent of iteration order.
DensityMatrix sample_state(std::uint64_t seed, SampleMode mode,
                           double perturbation_weight = 0.0);

struct ScanReport {
    std::size_t samples;    // total drawn
    std::size_t checked;    // samples with corner weight >= 1/8
    std::size_t violations; // checked samples with purity below the floor
    double worst_margin;    // min over checked of purity - floor; 0 if none checked
};

/// Draws config.count states and checks, for every sample whose corner
/// weight w1 = |Re rho(0,7)| is at least 1/8, that
///   purity(rho) >= 4 w1^2 + (1 - 2 w1)^2 / 6 - 1e-9.
///
/// The floor only binds for w1 >= 1/8: below that the positivity
/// constraint on the corner block stops being the active one and the true
/// minimum drops to 2 w1^2 + 1/8 (the maximally mixed state, w1 = 0 and
/// purity 1/8, sits below the formula). Samples under the cutoff are drawn
/// but not checked. Using |Re rho(0,7)| loses no generality: flipping the
/// sign of sigma_z on one qubit maps the corner weight to its negative
/// without changing purity.
ScanReport purity_bound_scan(const SampleConfig& config);

struct OptimizerOptions {
    int restarts = 8;
    int max_iterations = 2000;   // per restart
    double penalty_weight = 1e4;
    double tolerance = 1e-8;     // |achieved_f1 - target_f1| for convergence
    std::uint64_t seed = 1;
    bool warm_start = false;     // seed restart 0 at the known optimum factor
};

struct OptimizationResult {
    double target_f1 = 0.0;
    double achieved_f1 = 0.0;
    double achieved_purity = 0.0;
    double analytic_floor = 0.0;
    double gap = 0.0; // achieved_purity - analytic_floor
    int iterations = 0;
    bool converged = false;
    std::optional<DensityMatrix> state; // best state found; empty on failure
};

/// Searches for the minimum purity attainable at corner weight target_f1
/// (in [1/4, 1/2]) over all three-qubit states, parameterized as
/// rho = A A^dagger / Tr(A A^dagger) with a full 8x8 complex factor A
/// (128 real parameters). Descends the penalized objective
/// purity + penalty_weight (f1 - target)^2 by central-difference gradients
/// with adaptive step halving; every evaluated state is first restored to
/// the exact constraint f1 = target by convex mixing, so the reported
/// purity can never undershoot the analytic floor beyond rounding.
OptimizationResult minimize_purity_at_f1(double target_f1,
                                         const OptimizerOptions& options = {});

/// Runs the optimizer at each grid point and pairs it with the analytic
/// frontier value. A failure at one point is reported in that row's
/// converged flag; the scan itself keeps going.
std::vector<std::pair<FrontierPoint, OptimizationResult>>
frontier_scan(std::span<const double> grid, const OptimizerOptions& options = {});

} // namespace ghz
