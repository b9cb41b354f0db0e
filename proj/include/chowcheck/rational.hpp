#ifndef CHOWCHECK_RATIONAL_HPP
#define CHOWCHECK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace chowcheck {

/// Arbitrary-precision integers and rationals.  cpp_rational keeps every value
/// reduced with a positive denominator, which is exactly the invariant the rest
/// of the engine assumes.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p/q", or just "p" when q == 1.  Decimal output is never used.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Int& n) { return n.str(); }

inline Rational rational(long num, long den = 1) { return Rational(num, den); }

/// Largest integer <= q.
inline Int floor_int(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

/// Smallest integer >= q.
inline Int ceil_int(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int quo = n / d;
    if (n > 0 && quo * d != n) ++quo;
    return quo;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

} // namespace chowcheck

#endif
