#include "doctest.h"

#include "chowcheck/polynomial.hpp"

using namespace chowcheck;

namespace {

AlphabetPtr abc() { return make_alphabet({"a", "b", "c"}); }

Polynomial v(const AlphabetPtr& al, const std::string& n, int p = 1) {
    return Polynomial::var(al, n, p);
}

} // namespace

TEST_CASE("alphabet lookup and equality") {
    auto al = abc();
    CHECK(al->size() == 3);
    CHECK(al->has("b"));
    CHECK_FALSE(al->has("z"));
    CHECK(al->index_of("c") == 2);
    CHECK_THROWS_AS(al->index_of("z"), Error);
    CHECK_THROWS_AS(make_alphabet({"a", "a"}), Error);

    auto other = make_alphabet({"a", "b", "c"});
    CHECK(*al == *other);
}

TEST_CASE("graded lex order ranks degree before position") {
    // a^2 > ab > b^2 > a > b > 1 over {a, b}
    CHECK(cmp_graded_lex({2, 0}, {1, 1}) > 0);
    CHECK(cmp_graded_lex({1, 1}, {0, 2}) > 0);
    CHECK(cmp_graded_lex({0, 2}, {1, 0}) > 0);
    CHECK(cmp_graded_lex({1, 0}, {0, 1}) > 0);
    CHECK(cmp_graded_lex({0, 1}, {0, 0}) > 0);
    CHECK(cmp_graded_lex({1, 2}, {1, 2}) == 0);
    // Trailing zeros do not matter.
    CHECK(cmp_graded_lex({1, 0}, {1}) == 0);
    // Weights change the degree: with weights (1, 2) we get b > a^2 lex-wise
    // equal degree, so position decides.
    CHECK(cmp_graded_lex({2, 0}, {0, 1}, {1, 2}) > 0);
    CHECK(cmp_graded_lex({0, 1}, {1, 0}, {1, 2}) > 0);
}

TEST_CASE("arithmetic keeps canonical form") {
    auto al = abc();
    Polynomial a = v(al, "a");
    Polynomial b = v(al, "b");

    Polynomial p = (a - b) * (a + b);
    Polynomial q = a * a - b * b;
    CHECK(p == q);
    CHECK(p.str() == "a^2 - b^2");

    Polynomial zero = p - q;
    CHECK(zero.is_zero());
    CHECK(zero.str() == "0");
    CHECK(zero.total_degree() == -1);

    Polynomial s = (a + b).pow(3);
    CHECK(s.str() == "a^3 + 3*a^2*b + 3*a*b^2 + b^3");
    CHECK(s.total_degree() == 3);
    CHECK(s.degree_in("a") == 3);

    Polynomial t = Polynomial::constant(al, rational(1, 2)) * a - a / Rational(2);
    CHECK(t.is_zero());
}

TEST_CASE("rendering never uses decimals") {
    auto al = abc();
    Polynomial p = v(al, "a") * rational(-3, 4) + Polynomial::constant(al, rational(1, 6));
    CHECK(p.str() == "-3/4*a + 1/6");
}

TEST_CASE("mixing alphabets is rejected with the offending name") {
    auto al = abc();
    auto other = make_alphabet({"a", "b", "d"});
    Polynomial p = v(al, "a");
    Polynomial q = Polynomial::var(other, "d");
    CHECK_THROWS_WITH_AS(p + q, doctest::Contains("d"), Error);
    try {
        p * q;
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::AlphabetMismatch);
    }
}

TEST_CASE("coeff_of strips the variable") {
    auto al = abc();
    Polynomial a = v(al, "a"), b = v(al, "b"), c = v(al, "c");
    Polynomial p = a * a * b + a * a * c * Rational(2) - a + b * Rational(5);
    CHECK(p.coeff_of("a", 2) == b + c * Rational(2));
    CHECK(p.coeff_of("a", 1) == Polynomial::constant(al, Rational(-1)));
    CHECK(p.coeff_of("a", 0) == b * Rational(5));
    CHECK(p.coeff_of("a", 3).is_zero());
}

TEST_CASE("substitution and evaluation") {
    auto al = abc();
    Polynomial a = v(al, "a"), b = v(al, "b");
    Polynomial p = a * a - b * Rational(2);

    // (b + 1)^2 - 2b = b^2 + 1
    Polynomial swapped = p.substitute(std::map<std::string, Polynomial>{{"a", b + Polynomial::constant(al, Rational(1))}});
    CHECK(swapped == b * b + Polynomial::constant(al, Rational(1)));

    Rational val = p.evaluate({{"a", Rational(3)}, {"b", rational(1, 2)}});
    CHECK(val == Rational(8));

    // Partial substitution keeps the rest formal.
    Polynomial part = p.substitute(std::map<std::string, Rational>{{"a", Rational(3)}});
    CHECK(part == Polynomial::constant(al, Rational(9)) - b * Rational(2));

    // Full evaluation requires every active parameter.
    CHECK_THROWS_AS(p.evaluate({{"a", Rational(1)}}), Error);
}

TEST_CASE("content and exact division") {
    auto al = abc();
    Polynomial a = v(al, "a"), b = v(al, "b");
    Polynomial p = a * b * rational(4, 3) + a * rational(2, 3);
    CHECK(p.content() == rational(2, 3));

    Polynomial prod = (a + b) * (a - b);
    auto quot = prod.try_divide(a + b);
    REQUIRE(quot.has_value());
    CHECK(*quot == a - b);
    CHECK_FALSE(prod.try_divide(a + Polynomial::constant(al, Rational(1))).has_value());
}

TEST_CASE("unknown parameter names are rejected") {
    auto al = abc();
    CHECK_THROWS_AS(Polynomial::var(al, "zz"), Error);
    Polynomial p = v(al, "a");
    CHECK_THROWS_AS(p.substitute(std::map<std::string, Rational>{{"zz", Rational(1)}}), Error);
}
