#ifndef CHOWCHECK_POLYNOMIAL_HPP
#define CHOWCHECK_POLYNOMIAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chowcheck/error.hpp"
#include "chowcheck/rational.hpp"

namespace chowcheck {

/// Ordered list of parameter names.  Declared once per engine; polynomials over
/// alphabets with different name lists do not mix.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    bool has(const std::string& name) const;
    std::size_t index_of(const std::string& name) const; // throws UnknownSymbol

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

/// Three-way compare of exponent vectors in graded lexicographic order.
/// Degree is weighted when `weights` is non-empty (used by ring monomials);
/// ties break lexicographically with earlier positions more significant.
int cmp_graded_lex(const std::vector<int>& a, const std::vector<int>& b,
                   const std::vector<int>& weights = {});

/// Comparator putting the graded-lex largest monomial first.
struct GradedLexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return cmp_graded_lex(a, b) > 0;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over a fixed
/// parameter alphabet.  Terms are kept in descending graded-lex order with no
/// zero coefficients, so equal polynomials have identical representations.
class Polynomial {
public:
    using TermMap = std::map<std::vector<int>, Rational, GradedLexGreater>;

    Polynomial() = default; // invalid until given an alphabet; factories below
    static Polynomial zero(AlphabetPtr alphabet);
    static Polynomial constant(AlphabetPtr alphabet, const Rational& value);
    static Polynomial var(AlphabetPtr alphabet, const std::string& name, int power = 1);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; requires is_constant().
    Rational constant_value() const;
    int total_degree() const; // -1 for the zero polynomial
    int degree_in(const std::string& name) const;
    bool depends_on(const std::string& name) const { return degree_in(name) > 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial operator*(const Rational& s) const;
    Polynomial operator/(const Rational& s) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    /// Coefficient (a polynomial in the remaining parameters) of name^power.
    Polynomial coeff_of(const std::string& name, int power) const;

    /// Substitutes polynomials for parameters; unmapped parameters stay formal.
    Polynomial substitute(const std::map<std::string, Polynomial>& repl) const;
    Polynomial substitute(const std::map<std::string, Rational>& repl) const;

    /// Full evaluation; every parameter appearing in the polynomial must be mapped.
    Rational evaluate(const std::map<std::string, Rational>& values) const;

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    Rational content() const;
    /// Leading (graded-lex greatest) coefficient; 0 for the zero polynomial.
    Rational leading_coefficient() const;

    /// Exact quotient this/divisor, or nullopt when the division leaves a remainder.
    std::optional<Polynomial> try_divide(const Polynomial& divisor) const;

    std::string str() const;

    /// Raw term insertion used by the implementation; keeps canonical form.
    void add_term(const std::vector<int>& exponents, const Rational& coefficient);

private:
    explicit Polynomial(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
    static void require_same_alphabet(const Polynomial& a, const Polynomial& b);

    AlphabetPtr alphabet_;
    TermMap terms_;
};

Polynomial operator*(const Rational& s, const Polynomial& p);

/// Renders one monomial over `names`, e.g. "a^2*r"; "1" for the empty monomial.
std::string monomial_str(const std::vector<int>& exponents,
                         const std::vector<std::string>& names);

} // namespace chowcheck

#endif
