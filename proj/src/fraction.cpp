#include "chowcheck/fraction.hpp"

#include "chowcheck/polygcd.hpp"

namespace chowcheck {

Fraction::Fraction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw Error(Error::Kind::BadArgument, "zero denominator");
    normalize();
}

Fraction::Fraction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.alphabet(), 1)) {}

Fraction Fraction::constant(AlphabetPtr alphabet, const Rational& value) {
    return Fraction(Polynomial::constant(std::move(alphabet), value));
}

Fraction Fraction::var(AlphabetPtr alphabet, const std::string& name) {
    return Fraction(Polynomial::var(std::move(alphabet), name));
}

void Fraction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(den_.alphabet(), 1);
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.total_degree() > 0 || g.content() != 1) {
        num_ = *num_.try_divide(g);
        den_ = *den_.try_divide(g);
    }
    Rational scale = den_.content();
    if (den_.leading_coefficient() < 0) scale = -scale;
    num_ = num_ / scale;
    den_ = den_ / scale;
}

bool Fraction::is_polynomial() const { return den_.is_constant(); }

Fraction Fraction::operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
}

Fraction Fraction::operator+(const Fraction& rhs) const {
    return Fraction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Fraction Fraction::operator-(const Fraction& rhs) const {
    return Fraction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Fraction Fraction::operator*(const Fraction& rhs) const {
    return Fraction(num_ * rhs.num_, den_ * rhs.den_);
}

Fraction Fraction::operator/(const Fraction& rhs) const {
    if (rhs.is_zero())
        throw Error(Error::Kind::BadArgument, "division by zero fraction");
    return Fraction(num_ * rhs.den_, den_ * rhs.num_);
}

bool Fraction::operator==(const Fraction& rhs) const {
    return num_ * rhs.den_ == rhs.num_ * den_;
}

Fraction Fraction::substitute(const std::map<std::string, Rational>& repl) const {
    Polynomial n = num_.substitute(repl);
    Polynomial d = den_.substitute(repl);
    if (d.is_zero())
        throw Error(Error::Kind::SingularSystem,
                    "denominator vanishes under substitution: " + den_.str());
    return Fraction(n, d);
}

Rational Fraction::evaluate(const std::map<std::string, Rational>& values) const {
    Rational d = den_.evaluate(values);
    if (d == 0)
        throw Error(Error::Kind::SingularSystem,
                    "denominator vanishes under substitution: " + den_.str());
    return num_.evaluate(values) / d;
}

std::string Fraction::str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace chowcheck
