#ifndef CHOWCHECK_FRACTION_HPP
#define CHOWCHECK_FRACTION_HPP

#include "chowcheck/polynomial.hpp"

namespace chowcheck {

/// Rational function num/den in canonical form: gcd(num, den) = 1, den has
/// content 1 and positive leading coefficient.  Equality is decided by
/// cross-multiplication, so it never depends on the gcd reduction.
class Fraction {
public:
    Fraction() = default;
    Fraction(Polynomial num, Polynomial den); // den must be nonzero
    explicit Fraction(Polynomial num);
    static Fraction constant(AlphabetPtr alphabet, const Rational& value);
    static Fraction var(AlphabetPtr alphabet, const std::string& name);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const AlphabetPtr& alphabet() const { return num_.alphabet(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    Fraction operator-() const;
    Fraction operator+(const Fraction& rhs) const;
    Fraction operator-(const Fraction& rhs) const;
    Fraction operator*(const Fraction& rhs) const;
    Fraction operator/(const Fraction& rhs) const;
    Fraction& operator+=(const Fraction& rhs) { return *this = *this + rhs; }
    Fraction& operator-=(const Fraction& rhs) { return *this = *this - rhs; }
    Fraction& operator*=(const Fraction& rhs) { return *this = *this * rhs; }

    bool operator==(const Fraction& rhs) const;
    bool operator!=(const Fraction& rhs) const { return !(*this == rhs); }

    /// Substitutes rational values for parameters; the denominator must not
    /// vanish under the substitution.
    Fraction substitute(const std::map<std::string, Rational>& repl) const;

    /// Full evaluation to a rational number.
    Rational evaluate(const std::map<std::string, Rational>& values) const;

    std::string str() const;

private:
    void normalize();

    Polynomial num_, den_;
};

} // namespace chowcheck

#endif
