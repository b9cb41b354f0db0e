#ifndef CHOWCHECK_DIOPHANTINE_HPP
#define CHOWCHECK_DIOPHANTINE_HPP

#include <vector>

#include "chowcheck/polynomial.hpp"

namespace chowcheck {

/// Linear side condition slope*n + offset >= 0 on the enumeration variable.
struct LinearBound {
    Rational slope;
    Rational offset;

    bool admits(const Int& n) const { return slope * n + offset >= 0; }
};

/// All integers n >= 1 with p(n) < 0 that satisfy every bound, in increasing
/// order.  p must be a quadratic in `var` with numeric coefficients and a
/// positive leading coefficient (otherwise the solution region is unbounded
/// and the call fails).  Evaluation is exact; no real roots are extracted.
std::vector<Int> integer_points_under_quadratic(const Polynomial& p,
                                                const std::string& var,
                                                const std::vector<LinearBound>& bounds = {});

} // namespace chowcheck

#endif
