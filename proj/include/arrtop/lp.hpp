#ifndef ARRTOP_LP_HPP
#define ARRTOP_LP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "arrtop/rational.hpp"

namespace arrtop {

// One linear constraint  a . x >= c  over exact rationals.
struct GeConstraint {
    RatVec a;
    Rat c;
};

// Decides feasibility of a conjunction of >= constraints by Fourier-Motzkin
// elimination and, when feasible, reconstructs an exact witness by
// back-substitution through the recorded bound stages.  Exponential in the
// worst case, entirely adequate at arrangement desk scale (<= 12 forms, small
// dimension).
std::optional<RatVec> feasible_point(std::vector<GeConstraint> constraints,
                                     std::size_t nvars);

inline bool satisfies(const std::vector<GeConstraint>& constraints, const RatVec& x) {
    for (const GeConstraint& g : constraints)
        if (dot(g.a, x) < g.c) return false;
    return true;
}

} // namespace arrtop

#endif
