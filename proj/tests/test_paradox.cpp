#include "ghz/paradox.hpp"

#include "ghz/density_matrix.hpp"
#include "ghz/errors.hpp"
#include "ghz/oracle.hpp"
#include "ghz/pauli.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <cstddef>

using namespace ghz;
using namespace ghz::testing;

TEST_CASE("observables commute, square to identity, and multiply to minus identity") {
    const GhzObservableSet& set = observables();
    const ComplexMatrix id = ComplexMatrix::identity(8);

    for (std::size_t i = 0; i < 4; ++i) {
        CHECK((set.operators[i] * set.operators[i]).max_entry_distance(id) == 0.0);
        for (std::size_t j = i + 1; j < 4; ++j) {
            const ComplexMatrix commutator =
                set.operators[i] * set.operators[j] - set.operators[j] * set.operators[i];
            CHECK(commutator.max_entry_distance(ComplexMatrix(8)) == 0.0);
        }
    }

    // The sign obstruction behind the paradox: the operator product is -I
    // while the target signs multiply to -1 as well, but any deterministic
    // +-1 assignment squares to +1 on the product.
    const ComplexMatrix product =
        set.operators[0] * set.operators[1] * set.operators[2] * set.operators[3];
    CHECK(product.max_entry_distance(id.scaled(Complex{-1.0, 0.0})) == 0.0);
}

TEST_CASE("GHZ state matches the projector and is maximally violating") {
    const DensityMatrix ghz = ghz_state();
    CHECK(ghz.matrix().max_entry_distance(ghz_matrix()) == 0.0);
    CHECK(std::abs(ghz.purity() - 1.0) < 1e-15);
    CHECK(std::abs(decompose(ghz).at({1, 1, 1}) - 1.0) < 1e-12);

    const ParadoxReport report = paradox_report(ghz);
    for (double q : report.q) {
        CHECK(std::abs(q - 1.0) < 1e-12);
    }
    CHECK(std::abs(report.inequality_value + 1.0) < 1e-12);
    CHECK(std::abs(report.f1 - 0.5) < 1e-12);
    CHECK(report.violated);
}

TEST_CASE("maximally mixed state sits at the classical value") {
    const DensityMatrix mixed =
        DensityMatrix::build(ComplexMatrix::identity(8).scaled(Complex{0.125, 0.0}));
    const ParadoxReport report = paradox_report(mixed);
    for (double q : report.q) {
        CHECK(std::abs(q - 0.5) < 1e-12);
    }
    CHECK(std::abs(report.inequality_value - 1.0) < 1e-12);
    CHECK(std::abs(report.f1) < 1e-12);
    CHECK_FALSE(report.violated);
}

TEST_CASE("event probabilities of the family state are (1 + 2 f1)/2") {
    const std::array<double, 4> q = event_probabilities(optimal_state(0.4));
    for (double value : q) {
        CHECK(std::abs(value - 0.9) < 1e-12);
    }
}

TEST_CASE("optimal_state endpoints and interior") {
    CHECK(optimal_state(0.5).matrix().max_entry_distance(ghz_matrix()) == 0.0);

    const DensityMatrix noise_only = optimal_state(0.0);
    CHECK(noise_only.matrix().max_entry_distance(optimal_family_matrix(0.0)) == 0.0);
    CHECK(std::abs(noise_only.matrix()(1, 1).real() - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(noise_only.matrix()(0, 0).real()) == 0.0);

    CHECK(std::abs(optimal_state(0.3).linear_entropy() - 368.0 / 525.0) < 1e-14);

    CHECK_THROWS_AS(optimal_state(0.6), DomainError);
    CHECK_THROWS_AS(optimal_state(-0.01), DomainError);
}

TEST_CASE("boundary state neither violates nor is violated by the inequality") {
    const ParadoxReport report = paradox_report(optimal_state(0.25));
    CHECK(std::abs(report.inequality_value) < 1e-12);
    CHECK_FALSE(report.violated);
}

TEST_CASE("frontier formulas agree with the constructed states on a grid") {
    for (int i = 0; i <= 100; ++i) {
        const double f1 = 0.5 * static_cast<double>(i) / 100.0;
        const DensityMatrix state = optimal_state(f1);
        CHECK(std::abs(state.linear_entropy() - frontier_entropy(f1)) <= 1e-12);
        CHECK(std::abs(state.purity() - purity_floor(f1)) <= 1e-12);

        const FrontierPoint point = frontier_point(f1);
        CHECK(std::abs(point.entropy - 8.0 / 7.0 * (1.0 - point.purity_floor)) <= 1e-12);
        CHECK(point.violation <= 1.0);

        const ParadoxReport report = paradox_report(state);
        CHECK(report.violated == (f1 > 0.25 + 1e-12));
    }
}

TEST_CASE("frontier_entropy and purity_floor hit the frozen values") {
    CHECK(std::abs(frontier_entropy(0.5)) < 1e-15);
    CHECK(std::abs(frontier_entropy(0.25) - 17.0 / 21.0) < 1e-15);
    CHECK(std::abs(frontier_entropy(0.3) - 368.0 / 525.0) < 1e-15);

    CHECK(std::abs(purity_floor(0.5) - 1.0) < 1e-15);
    CHECK(std::abs(purity_floor(0.25) - 7.0 / 24.0) < 1e-15);
    CHECK(std::abs(purity_floor(0.3) - 29.0 / 75.0) < 1e-15);

    CHECK_THROWS_AS(frontier_entropy(0.51), DomainError);
    CHECK_THROWS_AS(purity_floor(-0.1), DomainError);
}

TEST_CASE("frontier_invert returns the paradox branch") {
    CHECK(std::abs(frontier_invert(0.0) - 0.5) < 1e-12);
    CHECK(std::abs(frontier_invert(17.0 / 21.0) - 0.25) < 1e-12);
    CHECK(std::abs(frontier_invert(368.0 / 525.0) - 0.3) < 1e-12);

    for (int i = 0; i <= 50; ++i) {
        const double f1 = 0.25 + 0.25 * static_cast<double>(i) / 50.0;
        CHECK(std::abs(frontier_invert(frontier_entropy(f1)) - f1) < 1e-12);
    }

    CHECK_THROWS_AS(frontier_invert(-0.01), DomainError);
    CHECK_THROWS_AS(frontier_invert(0.82), DomainError);
}

TEST_CASE("family parameters carry the fill weight and regime flag") {
    const OptimalFamilyParam pure = OptimalFamilyParam::from_f1(0.5);
    CHECK(pure.f == 0.0);
    CHECK(pure.paradox_regime);

    const OptimalFamilyParam boundary = OptimalFamilyParam::from_f1(0.25);
    CHECK(std::abs(boundary.f - 1.0 / 12.0) < 1e-15);
    CHECK_FALSE(boundary.paradox_regime);
    CHECK(std::abs(2.0 * boundary.f1 + 6.0 * boundary.f - 1.0) < 1e-15);

    CHECK_THROWS_AS(OptimalFamilyParam::from_f1(0.51), DomainError);
}

TEST_CASE("noise mixture weights") {
    const NoiseMixture pure = noise_mixture(0.5);
    CHECK(pure.ghz_weight == 1.0);
    CHECK(pure.noise_weight == 0.0);
    CHECK(pure.paradox_survives);

    const NoiseMixture threshold = noise_mixture(0.25);
    CHECK(threshold.ghz_weight == 0.5);
    CHECK(threshold.noise_weight == 0.5);
    CHECK_FALSE(threshold.paradox_survives);

    const NoiseMixture surviving = noise_mixture(0.3);
    CHECK(std::abs(surviving.ghz_weight - 0.6) < 1e-15);
    CHECK(std::abs(surviving.noise_weight - 0.4) < 1e-15);
    CHECK(surviving.paradox_survives);
}

TEST_CASE("anti-diagonal system solves to (2 f1, -2 f1, -2 f1, -2 f1)") {
    const PauliCoefficients zero = methods_solve_antidiagonal(0.0);
    for (double value : zero.values) {
        CHECK(value == 0.0);
    }

    for (double f1 : {0.1, 0.25, 0.3, 0.5}) {
        const PauliCoefficients coeffs = methods_solve_antidiagonal(f1);
        CHECK(std::abs(coeffs.at({1, 1, 1}) - 2.0 * f1) < 1e-12);
        CHECK(std::abs(coeffs.at({2, 1, 2}) + 2.0 * f1) < 1e-12);
        CHECK(std::abs(coeffs.at({2, 2, 1}) + 2.0 * f1) < 1e-12);
        CHECK(std::abs(coeffs.at({1, 2, 2}) + 2.0 * f1) < 1e-12);

        const double combination = coeffs.at({1, 1, 1}) - coeffs.at({2, 1, 2}) -
                                   coeffs.at({2, 2, 1}) - coeffs.at({1, 2, 2});
        CHECK(std::abs(combination - 8.0 * f1) < 1e-12);

        // Reconstruction leaves only the (0,7)/(7,0) corners at f1, exact
        // to last-place rounding of the accumulation.
        CHECK(reconstruct(coeffs).max_entry_distance(corner_only_matrix(f1)) <= 1e-15);
    }
}

TEST_CASE("inequality value reduces to 1 - 4 f1 on random states") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const DensityMatrix rho = sample_state(seed + 5000, SampleMode::ginibre);
        const ParadoxReport report = paradox_report(rho);
        CHECK(std::abs(report.inequality_value - (1.0 - 4.0 * report.f1)) <= 1e-12);
        CHECK(std::abs(report.f1) <= 0.5 + 1e-12);
    }
}

TEST_CASE("ensemble and direct construction agree on the f1 grid") {
    for (int i = 0; i <= 100; ++i) {
        const double f1 = 0.5 * static_cast<double>(i) / 100.0;
        const NoiseMixture mix = noise_mixture(f1);
        std::vector<DensityMatrix> states;
        std::vector<double> weights;
        states.push_back(ghz_state());
        weights.push_back(mix.ghz_weight);
        for (std::size_t k = 1; k <= 6; ++k) {
            states.push_back(DensityMatrix::build(basis_projector(k)));
            weights.push_back(mix.noise_weight / 6.0);
        }
        const DensityMatrix mixed = convex_mix(states, weights);
        CHECK(mixed.matrix().max_entry_distance(optimal_state(f1).matrix()) <= 1e-15);
    }
}
