#include "chowcheck/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chowcheck {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error(Error::Kind::BadArgument, "duplicate parameter name: " + names_[i],
                            names_[i]);
}

bool Alphabet::has(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t Alphabet::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw Error(Error::Kind::UnknownSymbol, "parameter not in alphabet: " + name, name);
    return static_cast<std::size_t>(it - names_.begin());
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
}

int cmp_graded_lex(const std::vector<int>& a, const std::vector<int>& b,
                   const std::vector<int>& weights) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) da += static_cast<long>(a[i]) * (weights.empty() ? 1 : weights[i]);
    for (std::size_t i = 0; i < b.size(); ++i) db += static_cast<long>(b[i]) * (weights.empty() ? 1 : weights[i]);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a.size() != b.size()) {
        // Trailing zeros do not affect order.
        const auto& longer = a.size() > b.size() ? a : b;
        for (std::size_t i = std::min(a.size(), b.size()); i < longer.size(); ++i)
            if (longer[i] != 0) return &longer == &a ? 1 : -1;
    }
    return 0;
}

Polynomial Polynomial::zero(AlphabetPtr alphabet) { return Polynomial(std::move(alphabet)); }

Polynomial Polynomial::constant(AlphabetPtr alphabet, const Rational& value) {
    Polynomial p(std::move(alphabet));
    p.add_term(std::vector<int>(p.alphabet_->size(), 0), value);
    return p;
}

Polynomial Polynomial::var(AlphabetPtr alphabet, const std::string& name, int power) {
    if (power < 0)
        throw Error(Error::Kind::BadArgument, "negative exponent for " + name, name);
    Polynomial p(std::move(alphabet));
    std::vector<int> e(p.alphabet_->size(), 0);
    e[p.alphabet_->index_of(name)] = power;
    p.add_term(e, 1);
    return p;
}

void Polynomial::require_same_alphabet(const Polynomial& a, const Polynomial& b) {
    if (a.alphabet_ == b.alphabet_) return;
    if (!a.alphabet_ || !b.alphabet_)
        throw Error(Error::Kind::BadArgument, "polynomial without an alphabet");
    if (*a.alphabet_ == *b.alphabet_) return;
    for (const auto& n : a.alphabet_->names())
        if (!b.alphabet_->has(n))
            throw Error(Error::Kind::AlphabetMismatch, "parameter not shared by both alphabets: " + n, n);
    for (const auto& n : b.alphabet_->names())
        if (!a.alphabet_->has(n))
            throw Error(Error::Kind::AlphabetMismatch, "parameter not shared by both alphabets: " + n, n);
    throw Error(Error::Kind::AlphabetMismatch, "alphabets declare the same names in different order");
}

void Polynomial::add_term(const std::vector<int>& exponents, const Rational& coefficient) {
    if (coefficient == 0) return;
    std::vector<int> e = exponents;
    e.resize(alphabet_->size(), 0);
    auto [it, inserted] = terms_.emplace(std::move(e), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree() == 0;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant())
        throw Error(Error::Kind::BadArgument, "polynomial is not constant: " + str());
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& lead = terms_.begin()->first; // graded order: leading term has max degree
    return std::accumulate(lead.begin(), lead.end(), 0);
}

int Polynomial::degree_in(const std::string& name) const {
    std::size_t idx = alphabet_->index_of(name);
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(alphabet_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial r = *this;
    r += rhs;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial r = *this;
    r -= rhs;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (!alphabet_) { *this = rhs; return *this; }
    require_same_alphabet(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (!alphabet_) { *this = -rhs; return *this; }
    require_same_alphabet(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_alphabet(*this, rhs);
    Polynomial r(alphabet_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<int> e(alphabet_->size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    Polynomial r(alphabet_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

Polynomial Polynomial::operator/(const Rational& s) const {
    if (s == 0) throw Error(Error::Kind::BadArgument, "division by zero scalar");
    return *this * (Rational(1) / s);
}

Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw Error(Error::Kind::BadArgument, "negative polynomial power");
    Polynomial r = Polynomial::constant(alphabet_, 1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    require_same_alphabet(*this, rhs);
    return terms_ == rhs.terms_;
}

Polynomial Polynomial::coeff_of(const std::string& name, int power) const {
    std::size_t idx = alphabet_->index_of(name);
    Polynomial r(alphabet_);
    for (const auto& [e, c] : terms_)
        if (e[idx] == power) {
            std::vector<int> stripped = e;
            stripped[idx] = 0;
            r.add_term(stripped, c);
        }
    return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& repl) const {
    for (const auto& [name, value] : repl) {
        alphabet_->index_of(name); // validate
        require_same_alphabet(*this, value);
    }
    Polynomial r(alphabet_);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(alphabet_, c);
        std::vector<int> residual(alphabet_->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = repl.find(alphabet_->name(i));
            if (it == repl.end()) residual[i] = e[i];
            else term *= it->second.pow(e[i]);
        }
        Polynomial mono(alphabet_);
        mono.add_term(residual, 1);
        r += term * mono;
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Rational>& repl) const {
    std::map<std::string, Polynomial> lifted;
    for (const auto& [name, value] : repl)
        lifted.emplace(name, Polynomial::constant(alphabet_, value));
    return substitute(lifted);
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
    Polynomial r = substitute(values);
    if (!r.is_constant())
        throw Error(Error::Kind::BadArgument, "evaluation left free parameters: " + r.str());
    return r.constant_value();
}

Rational Polynomial::content() const {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    if (num_gcd == 0) return 0;
    return Rational(num_gcd, den_lcm);
}

Rational Polynomial::leading_coefficient() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& divisor) const {
    require_same_alphabet(*this, divisor);
    if (divisor.is_zero())
        throw Error(Error::Kind::BadArgument, "division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quo(alphabet_);
    const auto& dlead = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.begin();
        std::vector<int> e(alphabet_->size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        Rational c = rlead.second / dlead.second;
        Polynomial t(alphabet_);
        t.add_term(e, c);
        quo += t;
        rem -= t * divisor;
    }
    return quo;
}

std::string monomial_str(const std::vector<int>& exponents,
                         const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!first) os << "*";
        os << names[i];
        if (exponents[i] > 1) os << "^" << exponents[i];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono = monomial_str(e, alphabet_->names());
        if (mono == "1") os << to_string(mag);
        else if (mag == 1) os << mono;
        else os << to_string(mag) << "*" << mono;
        first = false;
    }
    return os.str();
}

} // namespace chowcheck
