#include "ghz/oracle.hpp"

#include "ghz/errors.hpp"
#include "ghz/paradox.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

using namespace ghz;

TEST_CASE("ginibre samples are valid states with interior purity") {
    for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
        const DensityMatrix rho = sample_state(seed, SampleMode::ginibre);
        const double purity = rho.purity();
        CHECK(purity > 0.125);
        CHECK(purity < 1.0);
    }
}

TEST_CASE("sampling is deterministic in the seed") {
    const DensityMatrix a = sample_state(7, SampleMode::ginibre);
    const DensityMatrix b = sample_state(7, SampleMode::ginibre);
    CHECK(a.matrix().max_entry_distance(b.matrix()) == 0.0);

    const DensityMatrix c = sample_state(8, SampleMode::ginibre);
    CHECK(c.matrix().max_entry_distance(a.matrix()) > 0.0);
}

TEST_CASE("zero perturbation weight reproduces a frontier state exactly") {
    const DensityMatrix rho = sample_state(11, SampleMode::frontier_perturbation, 0.0);
    const double f1 = rho.matrix()(0, 7).real();
    CHECK(f1 >= 0.25);
    CHECK(f1 <= 0.5);
    CHECK(rho.matrix().max_entry_distance(optimal_state(f1).matrix()) <= 1e-15);
    CHECK(std::abs(rho.purity() - purity_floor(f1)) <= 1e-12);
}

TEST_CASE("perturbation weight outside [0, 1] is rejected") {
    CHECK_THROWS_AS(sample_state(1, SampleMode::frontier_perturbation, 1.5), DomainError);
    CHECK_THROWS_AS(sample_state(1, SampleMode::frontier_perturbation, -0.1), DomainError);
}

TEST_CASE("frontier states saturate the floor with zero margin") {
    const DensityMatrix rho = optimal_state(0.3);
    const double w1 = std::abs(rho.matrix()(0, 7).real());
    CHECK(std::abs(rho.purity() - purity_floor(w1)) <= 1e-12);
}

TEST_CASE("the maximally mixed state sits below the naive floor formula") {
    // w1 = 0 < 1/8, purity 1/8 < 1/6: the sample would flag a violation if
    // the scan did not respect the validity cutoff.
    const DensityMatrix mixed =
        DensityMatrix::build(ComplexMatrix::identity(8).scaled(Complex{0.125, 0.0}));
    CHECK(std::abs(mixed.matrix()(0, 7).real()) < 0.125);
    CHECK(mixed.purity() < purity_floor(0.0));
}

TEST_CASE("purity bound scan finds no violations at unit-test scale") {
    SampleConfig ginibre;
    ginibre.count = 2000;
    ginibre.seed = 101;
    ginibre.mode = SampleMode::ginibre;
    const ScanReport report = purity_bound_scan(ginibre);
    CHECK(report.samples == 2000);
    CHECK(report.violations == 0);
    if (report.checked > 0) {
        CHECK(report.worst_margin >= -1e-9);
    }

    SampleConfig frontier;
    frontier.count = 2000;
    frontier.seed = 202;
    frontier.mode = SampleMode::frontier_perturbation;
    frontier.perturbation_weight = 0.3;
    const ScanReport perturbed = purity_bound_scan(frontier);
    CHECK(perturbed.checked > 0);
    CHECK(perturbed.violations == 0);
    CHECK(perturbed.worst_margin >= -1e-9);
}

TEST_CASE("scan reports are deterministic") {
    SampleConfig config;
    config.count = 500;
    config.seed = 33;
    config.mode = SampleMode::frontier_perturbation;
    config.perturbation_weight = 0.25;
    const ScanReport a = purity_bound_scan(config);
    const ScanReport b = purity_bound_scan(config);
    CHECK(a.checked == b.checked);
    CHECK(a.violations == b.violations);
    CHECK(a.worst_margin == b.worst_margin);
}

TEST_CASE("warm-started optimization sits on the floor immediately") {
    OptimizerOptions options;
    options.restarts = 1;
    options.warm_start = true;
    const OptimizationResult result = minimize_purity_at_f1(0.3, options);
    CHECK(result.converged);
    CHECK(std::abs(result.achieved_f1 - 0.3) <= options.tolerance);
    CHECK(result.gap <= 1e-9);
    CHECK(result.gap >= -1e-9);
}

TEST_CASE("cold-started optimization reaches the floor at a modest budget") {
    OptimizerOptions options;
    options.restarts = 2;
    options.seed = 5;
    const OptimizationResult result = minimize_purity_at_f1(0.35, options);
    CHECK(result.gap >= -1e-9);
    CHECK(result.gap <= 1e-3);
    CHECK(std::abs(result.achieved_f1 - 0.35) <= options.tolerance);
}

TEST_CASE("optimizer rejects targets outside the paradox regime") {
    CHECK_THROWS_AS(minimize_purity_at_f1(0.2), DomainError);
    CHECK_THROWS_AS(minimize_purity_at_f1(0.55), DomainError);
}

TEST_CASE("near-floor optimizer output has equal middle diagonal entries") {
    // Saturation is unique: once the gap closes, the state dephased to the
    // family sparsity pattern must have its six middle diagonal entries
    // equal (the equality case of the mean inequality behind the floor).
    OptimizerOptions options;
    options.restarts = 2;
    options.seed = 17;
    for (double target : {0.3, 0.42}) {
        const OptimizationResult result = minimize_purity_at_f1(target, options);
        REQUIRE(result.gap <= 1e-6);
        REQUIRE(result.state.has_value());

        const ComplexMatrix& rho = result.state->matrix();
        double low = 1.0;
        double high = 0.0;
        for (std::size_t i = 1; i <= 6; ++i) {
            low = std::min(low, rho(i, i).real());
            high = std::max(high, rho(i, i).real());
        }
        CHECK(high - low <= 1e-3);
        CHECK(std::abs(rho(0, 7).real() - target) <= 1e-9);
    }
}

TEST_CASE("analytic frontier entropy is strictly decreasing on the paradox branch") {
    double previous = frontier_entropy(0.25);
    for (int i = 1; i <= 100; ++i) {
        const double f1 = 0.25 + 0.25 * static_cast<double>(i) / 100.0;
        const double entropy = frontier_entropy(f1);
        CHECK(entropy < previous);
        previous = entropy;
    }
}

TEST_CASE("the boundary grid point carries zero violation") {
    OptimizerOptions options;
    options.restarts = 1;
    options.warm_start = true;
    const std::array<double, 1> grid = {0.25};
    const auto rows = frontier_scan(grid, options);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].first.violation == 0.0);
    CHECK(rows[0].second.gap <= 1e-9);
}

TEST_CASE("frontier scan pairs analytic and numeric rows") {
    OptimizerOptions options;
    options.restarts = 1;
    options.warm_start = true;
    const std::array<double, 2> grid = {0.3, 0.5};
    const auto rows = frontier_scan(grid, options);
    REQUIRE(rows.size() == 2);
    for (const auto& [analytic, numeric] : rows) {
        CHECK(analytic.purity_floor == numeric.analytic_floor);
        CHECK(std::abs(analytic.violation - (4.0 * analytic.f1 - 1.0)) == 0.0);
        CHECK(numeric.gap <= 1e-6);
        CHECK(numeric.gap >= -1e-9);
    }

    const std::array<double, 1> bad_grid = {0.1};
    CHECK_THROWS_AS(frontier_scan(bad_grid, options), DomainError);
}
