#pragma once

#include "ghz/complex_matrix.hpp"
#include "ghz/density_matrix.hpp"
#include "ghz/pauli.hpp"

#include <array>

namespace ghz {

/// The four mutually commuting three-qubit observables of the paradox,
///   O1 = XXX, O2 = YXY, O3 = YYX, O4 = XYY,
/// with the signs the GHZ state yields with certainty: (+1, -1, -1, -1).
/// Each operator squares to the identity; O1 O2 O3 O4 = -I, which is what
/// makes a deterministic sign assignment for all four impossible.
struct GhzObservableSet {
    std::array<ComplexMatrix, 4> operators;
    std::array<int, 4> target_signs;
};

/// Shared observable set; invariants (commutation, involution, GHZ
/// eigenstate with the target signs) are verified once at first use.
const GhzObservableSet& observables();

/// Projector onto (|000> + |111>)/sqrt(2).
DensityMatrix ghz_state();

/// Event probabilities q_i = Tr(rho (I + s_i O_i)/2): the probability that
/// observable i yields its target sign. Computed from the projectors and
/// cross-checked against the coefficient form
/// ((1+p_111)/2, (1-p_212)/2, (1-p_221)/2, (1-p_122)/2); the two routes
/// must agree within 1e-12.
std::array<double, 4> event_probabilities(const DensityMatrix& rho);

/// Outcome of the logical-inequality test 3 - q1 - q2 - q3 - q4 >= 0 on a
/// state. f1 = (p_111 - p_212 - p_221 - p_122)/8 equals the real corner
/// entry rho(0,7); the inequality value always equals 1 - 4 f1.
struct ParadoxReport {
    std::array<double, 4> q;
    double inequality_value; // 3 - sum q_i
    double f1;
    bool violated; // inequality_value < -1e-12
};

ParadoxReport paradox_report(const DensityMatrix& rho);

/// Parameters of the noise-resistant state family: corner weight f1 in
/// [0, 1/2] and diagonal fill f = (1 - 2 f1)/6. The paradox regime is
/// f1 > 1/4.
struct OptimalFamilyParam {
    double f1;
    double f;
    bool paradox_regime;

    static OptimalFamilyParam from_f1(double f1);
};

/// The maximal-entropy state at violation strength f1: corners
/// (0,0), (0,7), (7,0), (7,7) equal to f1, diagonal entries 1..6 equal to
/// f = (1 - 2 f1)/6. Equivalently a mixture of the GHZ projector (weight
/// 2 f1) with the six flipped basis states (weight f each).
DensityMatrix optimal_state(double f1);

/// Linear entropy of optimal_state(f1): (8/7)(1 - 4 f1^2 - 6 f^2).
double frontier_entropy(double f1);

/// Minimal purity compatible with corner weight f1 (for f1 >= 1/8):
/// 4 f1^2 + (1 - 2 f1)^2 / 6. Saturated by optimal_state(f1).
double purity_floor(double f1);

/// Inverse of frontier_entropy on the paradox branch: the unique
/// f1 in [1/4, 1/2] with frontier_entropy(f1) = entropy. Defined for
/// entropy in [0, 17/21 ~= 0.8095238].
double frontier_invert(double entropy);

/// Ensemble weights of optimal_state(f1) as GHZ plus flipped noise. The
/// paradox survives while the noise weight stays below 1/2.
struct NoiseMixture {
    double ghz_weight;   // 2 f1
    double noise_weight; // 1 - 2 f1
    bool paradox_survives;
};

NoiseMixture noise_mixture(double f1);

/// One sample of the analytic entropy-violation frontier.
struct FrontierPoint {
    double f1;
    double violation; // 4 f1 - 1
    double entropy;
    double purity_floor;
};

FrontierPoint frontier_point(double f1);

/// Solves the 4x4 real linear system mapping (p_111, p_212, p_221, p_122)
/// to the anti-diagonal entries rho(0,7), rho(1,6), rho(2,5), rho(3,4) of
/// the Pauli reconstruction, under the constraints rho(0,7) = f1 and the
/// other three equal to zero. The unique solution is p_111 = 2 f1,
/// p_212 = p_221 = p_122 = -2 f1; reconstructing it yields the matrix
/// whose only nonzero entries are the (0,7)/(7,0) corners at f1.
PauliCoefficients methods_solve_antidiagonal(double f1);

} // namespace ghz
