#include "chowcheck/charclass.hpp"

namespace chowcheck {

namespace {

void require_degree_one(const GradedClass& d, const char* what) {
    if (!d.is_homogeneous() || (!d.is_zero() && d.degree() != 1)) {
        throw Error(Error::Kind::DegreeMismatch,
                    std::string(what) + " needs a homogeneous degree-1 class");
    }
}

} // namespace

GradedClass chern_character_line(const GradedClass& d) {
    require_degree_one(d, "chern_character_line");
    GradedClass acc = GradedClass::one(d.ring());
    GradedClass power = GradedClass::one(d.ring());
    Rational factorial = 1;
    for (int k = 1; k <= d.ring()->top_degree(); ++k) {
        power *= d;
        factorial *= k;
        if (power.is_zero()) break;
        acc += power * (Rational(1) / factorial);
    }
    return acc;
}

GradedClass todd_line(const GradedClass& d) {
    require_degree_one(d, "todd_line");
    // d / (1 - exp(-d)) = sum coeff[k] * d^k.
    static const Rational coeff[] = {
        Rational(1),        rational(1, 2),  rational(1, 12), Rational(0),
        rational(-1, 720),  Rational(0),     rational(1, 30240),
    };
    const int top = d.ring()->top_degree();
    if (top > 6) {
        throw Error(Error::Kind::BadArgument,
                    "todd_line carries series coefficients through degree 6, ring top is "
                        + std::to_string(top));
    }
    GradedClass acc = GradedClass::one(d.ring());
    GradedClass power = GradedClass::one(d.ring());
    for (int k = 1; k <= top; ++k) {
        power *= d;
        if (power.is_zero()) break;
        if (coeff[k] != 0) acc += power * coeff[k];
    }
    return acc;
}

Polynomial euler_characteristic(const GradedClass& first_chern,
                                const GradedClass& todd) {
    return integrate_full(chern_character_line(first_chern) * todd);
}

GradedClass todd_fourfold_chi_one(const GradedClass& c1, const GradedClass& c2,
                                  const GradedClass& point) {
    require_degree_one(c1, "todd_fourfold_chi_one");
    if (!c2.is_homogeneous() || (!c2.is_zero() && c2.degree() != 2)) {
        throw Error(Error::Kind::DegreeMismatch,
                    "todd_fourfold_chi_one needs c2 homogeneous of degree 2");
    }
    if (point.is_zero() || !point.is_homogeneous() || point.degree() != 4) {
        throw Error(Error::Kind::DegreeMismatch,
                    "todd_fourfold_chi_one needs a degree-4 point class");
    }
    GradedClass one = GradedClass::one(c1.ring());
    return one + c1 * rational(1, 2) + (c1 * c1 + c2) * rational(1, 12)
           + c1 * c2 * rational(1, 24) + point;
}

} // namespace chowcheck
