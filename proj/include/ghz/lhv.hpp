#pragma once

#include <array>
#include <map>

namespace ghz {

/// One deterministic local-hidden-variable assignment: a definite sign for
/// each of sigma_x and sigma_y on each of the three qubits, in the order
/// v1x, v1y, v2x, v2y, v3x, v3y.
struct LhvAssignment {
    std::array<int, 6> v;
};

/// Decodes a 6-bit code 0..63 into an assignment; bit k set means the k-th
/// sign is -1, clear means +1.
LhvAssignment lhv_assignment_from_code(unsigned code);

/// How many of the four sign conditions the assignment satisfies:
///   v1x v2x v3x = +1, v1y v2x v3y = -1, v1y v2y v3x = -1, v1x v2y v3y = -1.
/// The product of the four left-hand sides is always +1 while the product
/// of the targets is -1, so the count is always odd and never 4.
int satisfied_conditions(const LhvAssignment& a);

struct LhvReport {
    int max_satisfied;
    std::map<int, int> histogram; // satisfied-count -> number of assignments
    double classical_min_inequality_value; // 3 - max_satisfied
};

/// Exhaustive sweep of all 64 deterministic assignments. Deterministic
/// strategies are the extreme points of the local set and the inequality
/// value is affine in the response probabilities, so this sweep bounds
/// every local model, stochastic ones included.
LhvReport enumerate_all();

} // namespace ghz
