#ifndef CHOWCHECK_POLYGCD_HPP
#define CHOWCHECK_POLYGCD_HPP

#include "chowcheck/polynomial.hpp"

namespace chowcheck {

/// Greatest common divisor of multivariate polynomials over the rationals,
/// normalized to content 1 with positive leading coefficient.  gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Divides out content and fixes the leading sign; maps 0 to 0.
Polynomial poly_normalize(const Polynomial& p);

} // namespace chowcheck

#endif
