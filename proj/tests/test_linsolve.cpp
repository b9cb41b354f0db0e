#include "doctest.h"

#include "chowcheck/linsolve.hpp"

#include <random>

using namespace chowcheck;

namespace {

AlphabetPtr full() { return make_alphabet({"a", "r", "x", "y", "z", "u", "v"}); }

Polynomial v(const AlphabetPtr& al, const std::string& n) {
    return Polynomial::var(al, n);
}

Polynomial k(const AlphabetPtr& al, const Rational& c) {
    return Polynomial::constant(al, c);
}

} // namespace

TEST_CASE("unique solve with parametric coefficients") {
    auto al = full();
    // a*x + y = 2, x - y = a   =>  x = (a + 2)/(a + 1), y = (2 - a^2)/(a + 1)
    LinearSystem sys(al, {"x", "y"});
    sys.add_equation(v(al, "a") * v(al, "x") + v(al, "y") - k(al, 2));
    sys.add_equation(v(al, "x") - v(al, "y") - v(al, "a"));

    SolveOutcome out = sys.solve();
    REQUIRE(out.kind == SolveOutcome::Kind::Unique);
    Fraction expect_x(v(al, "a") + k(al, 2), v(al, "a") + k(al, 1));
    Fraction expect_y(k(al, 2) - v(al, "a") * v(al, "a"), v(al, "a") + k(al, 1));
    CHECK(out.value("x") == expect_x);
    CHECK(out.value("y") == expect_y);

    for (const Fraction& res : sys.residuals(out)) CHECK(res.is_zero());
}

TEST_CASE("underdetermined systems keep later unknowns free") {
    auto al = full();
    // Unknown order (y, z, x): pivots land on y and z, x stays free.
    // y - 2x = 1, z - y = 3  =>  y = 2x + 1, z = 2x + 4
    LinearSystem sys(al, {"y", "z", "x"});
    sys.add_equation(v(al, "y") - k(al, 2) * v(al, "x") - k(al, 1));
    sys.add_equation(v(al, "z") - v(al, "y") - k(al, 3));

    SolveOutcome out = sys.solve();
    REQUIRE(out.kind == SolveOutcome::Kind::AffineFamily);
    REQUIRE(out.free_unknowns == std::vector<std::string>{"x"});
    CHECK(out.value("y") == Fraction(k(al, 2) * v(al, "x") + k(al, 1)));
    CHECK(out.value("z") == Fraction(k(al, 2) * v(al, "x") + k(al, 4)));
    CHECK(out.value("x") == Fraction::var(al, "x"));

    for (const Fraction& res : sys.residuals(out)) CHECK(res.is_zero());
}

TEST_CASE("inconsistent systems come with a certifying row combination") {
    auto al = full();
    // x + y = 1, 2x + 2y = 3: second minus twice the first gives 0 = 1.
    LinearSystem sys(al, {"x", "y"});
    sys.add_equation(v(al, "x") + v(al, "y") - k(al, 1));
    sys.add_equation(k(al, 2) * v(al, "x") + k(al, 2) * v(al, "y") - k(al, 3));

    SolveOutcome out = sys.solve();
    REQUIRE(out.kind == SolveOutcome::Kind::Inconsistent);
    REQUIRE(out.witness.size() == 2);

    // The witness multipliers really do cancel every unknown and leave a
    // nonzero constant: m1*(row1) + m2*(row2) with rows in coeff|rhs form.
    Fraction cx = out.witness[0] * Fraction(k(al, 1)) + out.witness[1] * Fraction(k(al, 2));
    Fraction cy = cx; // same coefficients for x and y in both rows
    Fraction rhs = out.witness[0] * Fraction(k(al, 1)) + out.witness[1] * Fraction(k(al, 3));
    CHECK(cx.is_zero());
    CHECK(cy.is_zero());
    CHECK_FALSE(rhs.is_zero());
}

TEST_CASE("nonlinear terms in the unknowns are rejected up front") {
    auto al = full();
    LinearSystem sys(al, {"x", "y"});
    try {
        sys.add_equation(v(al, "x") * v(al, "y") - k(al, 1));
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::NonlinearEntry);
        CHECK(e.detail().find("x") != std::string::npos);
    }
    CHECK_THROWS_AS(sys.add_equation(v(al, "x") * v(al, "x")), Error);
    // Parameters may appear to any degree.
    CHECK_NOTHROW(sys.add_equation(v(al, "a") * v(al, "a") * v(al, "x") - k(al, 1)));
}

TEST_CASE("unknown names must come from the alphabet") {
    auto al = full();
    CHECK_THROWS_AS(LinearSystem(al, {"x", "w"}), Error);
    CHECK_THROWS_AS(LinearSystem(al, {"x", "x"}), Error);
}

TEST_CASE("random consistent systems reproduce their planted solution") {
    auto al = full();
    std::mt19937 rng(20260822u);
    std::uniform_int_distribution<int> coeff(-6, 6);

    for (int trial = 0; trial < 25; ++trial) {
        // Plant x, y, z and build three random equations satisfied by them.
        Rational sx(coeff(rng)), sy(coeff(rng)), sz(coeff(rng), 2);
        LinearSystem sys(al, {"x", "y", "z"});
        for (int row = 0; row < 3; ++row) {
            Rational cx(coeff(rng)), cy(coeff(rng)), cz(coeff(rng));
            Polynomial lhs = k(al, cx) * v(al, "x") + k(al, cy) * v(al, "y")
                             + k(al, cz) * v(al, "z")
                             - k(al, cx * sx + cy * sy + cz * sz);
            sys.add_equation(lhs);
        }
        SolveOutcome out = sys.solve();
        for (const Fraction& res : sys.residuals(out)) CHECK(res.is_zero());
        if (out.kind == SolveOutcome::Kind::Unique) {
            CHECK(out.value("x") == Fraction(k(al, sx)));
            CHECK(out.value("y") == Fraction(k(al, sy)));
            CHECK(out.value("z") == Fraction(k(al, sz)));
        }
    }
}
