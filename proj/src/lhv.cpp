#include "ghz/lhv.hpp"

#include "ghz/errors.hpp"

#include <algorithm>

namespace ghz {

LhvAssignment lhv_assignment_from_code(unsigned code) {
    if (code > 63) {
        throw DomainError("lhv assignment code must be in 0..63");
    }
    LhvAssignment a{};
    for (int k = 0; k < 6; ++k) {
        a.v[k] = (code >> k) & 1u ? -1 : +1;
    }
    return a;
}

int satisfied_conditions(const LhvAssignment& a) {
    const int v1x = a.v[0], v1y = a.v[1];
    const int v2x = a.v[2], v2y = a.v[3];
    const int v3x = a.v[4], v3y = a.v[5];

    int count = 0;
    count += (v1x * v2x * v3x == +1) ? 1 : 0;
    count += (v1y * v2x * v3y == -1) ? 1 : 0;
    count += (v1y * v2y * v3x == -1) ? 1 : 0;
    count += (v1x * v2y * v3y == -1) ? 1 : 0;
    return count;
}

LhvReport enumerate_all() {
    LhvReport report{};
    report.max_satisfied = 0;
    for (unsigned code = 0; code < 64; ++code) {
        const int satisfied = satisfied_conditions(lhv_assignment_from_code(code));
        report.histogram[satisfied] += 1;
        report.max_satisfied = std::max(report.max_satisfied, satisfied);
    }
    report.classical_min_inequality_value = 3.0 - report.max_satisfied;
    return report;
}

} // namespace ghz
