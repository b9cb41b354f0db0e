#include "chowcheck/diophantine.hpp"

#include <algorithm>

namespace chowcheck {

std::vector<Int> integer_points_under_quadratic(const Polynomial& p,
                                                const std::string& var,
                                                const std::vector<LinearBound>& bounds) {
    if (p.degree_in(var) != 2)
        throw Error(Error::Kind::BadArgument, "polynomial is not quadratic in " + var, var);
    Polynomial a2 = p.coeff_of(var, 2), a1 = p.coeff_of(var, 1), a0 = p.coeff_of(var, 0);
    if (!a2.is_constant() || !a1.is_constant() || !a0.is_constant())
        throw Error(Error::Kind::BadArgument,
                    "coefficients must be numeric; substitute parameters first: " + p.str());
    Rational A = a2.constant_value(), B = a1.constant_value(), C = a0.constant_value();
    if (A <= 0)
        throw Error(Error::Kind::Unbounded,
                    "leading coefficient not positive, solution set unbounded: " + p.str());

    auto value = [&](const Int& n) { return A * n * n + B * n + C; };
    auto admitted = [&](const Int& n) {
        if (n < 1) return false;
        return std::all_of(bounds.begin(), bounds.end(),
                           [&](const LinearBound& b) { return b.admits(n); });
    };

    // The region p < 0 is an interval around the vertex -B/(2A); walk out from
    // there in both directions using exact arithmetic only.
    Int center = floor_int(Rational(-B / (2 * A)));
    std::vector<Int> hits;
    for (Int n = center; value(n) < 0; --n)
        if (admitted(n)) hits.push_back(n);
    for (Int n = center + 1; value(n) < 0; ++n)
        if (admitted(n)) hits.push_back(n);
    std::sort(hits.begin(), hits.end());
    return hits;
}

} // namespace chowcheck
