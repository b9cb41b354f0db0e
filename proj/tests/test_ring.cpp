#include "doctest.h"

#include "chowcheck/ring.hpp"

using namespace chowcheck;

namespace {

AlphabetPtr params() { return make_alphabet({"r", "x"}); }

/// Chow ring of the projective line: one degree-1 generator squaring to zero.
Ring line_ring(const AlphabetPtr& al) {
    RingPresentation pres;
    pres.name = "line";
    pres.params = al;
    pres.generators = {{"h", 1}};
    pres.rules = {{{{"h", 2}}, {}}};
    pres.top_degree = 1;
    pres.integration_table = {{{{"h", 1}}, Polynomial::constant(al, Rational(1))}};
    return make_ring(pres);
}

/// Degree-2 ring with the relation s^2 -> r*h*s - e, weighted order s^2 > h*s.
Ring bundle_ring(const AlphabetPtr& al) {
    Polynomial r = Polynomial::var(al, "r");
    Polynomial one = Polynomial::constant(al, Rational(1));
    RingPresentation pres;
    pres.name = "bundle";
    pres.params = al;
    pres.generators = {{"s", 1}, {"h", 1}, {"e", 2}};
    pres.rules = {
        {{{"s", 2}}, {{r, {{"h", 1}, {"s", 1}}}, {-one, {{"e", 1}}}}},
        {{{"h", 2}}, {}},
    };
    pres.top_degree = 2;
    pres.integration_table = {
        {{{"h", 1}, {"s", 1}}, Polynomial::constant(al, Rational(1))},
        {{{"e", 1}}, Polynomial::var(al, "x")},
    };
    return make_ring(pres);
}

} // namespace

TEST_CASE("line ring arithmetic stays in normal form") {
    auto al = params();
    Ring ring = line_ring(al);
    GradedClass one = GradedClass::one(ring);
    GradedClass h = GradedClass::generator(ring, "h");

    GradedClass u = (one + h) * (one + h);
    CHECK(u == one + h * Rational(2)); // h^2 rewrites to zero
    CHECK(u.str() == "2*h + 1");       // highest degree first, like polynomials
    CHECK(integrate_full(u).str() == "2");

    CHECK(h.degree() == 1);
    CHECK(h.is_homogeneous());
    CHECK_FALSE(u.is_homogeneous());
    CHECK(u.component(0) == one);
    CHECK(u.component(1) == h + h);
    CHECK(u.component(2).is_zero());

    CHECK(integrate(h).str() == "1");
    // Integration demands the exact top degree.
    CHECK_THROWS_AS(integrate(u), Error);
    CHECK_THROWS_AS(integrate(one), Error);
    CHECK(integrate_full(one).is_zero());
}

TEST_CASE("relation with lower-order tail reduces repeated products") {
    auto al = params();
    Ring ring = bundle_ring(al);
    Polynomial r = Polynomial::var(al, "r");
    GradedClass s = GradedClass::generator(ring, "s");
    GradedClass h = GradedClass::generator(ring, "h");
    GradedClass e = GradedClass::generator(ring, "e");

    CHECK(s * s == r * (h * s) - e);
    CHECK((s * s).str() == "r*s*h - e");

    // Every monomial of s^3 has degree 3, above the ring's top degree.
    CHECK(s.pow(3).is_zero());

    Polynomial integral = integrate_full(h * s + e * Rational(3));
    CHECK(integral == Polynomial::constant(al, Rational(1))
                          + Polynomial::var(al, "x") * Rational(3));
}

TEST_CASE("generator substitution respects degrees") {
    auto al = params();
    Ring ring = bundle_ring(al);
    GradedClass s = GradedClass::generator(ring, "s");
    GradedClass h = GradedClass::generator(ring, "h");

    // Substitution acts on the stored normal form: s*s is already r*s*h - e,
    // so sending s to h gives r*h*h - e = -e, not (h)^2 = 0.
    GradedClass e_gen = GradedClass::generator(ring, "e");
    GradedClass swapped = (s * s).substitute_generator("s", h);
    CHECK(swapped == -e_gen);

    GradedClass scaled = (h * s).substitute_generator("s", s * Rational(2));
    CHECK(scaled == h * s * Rational(2));

    CHECK_THROWS_AS(s.substitute_generator("s", e_gen), Error);
    CHECK_THROWS_AS(s.substitute_generator("nope", h), Error);
}

TEST_CASE("classes from different presentations refuse to mix") {
    auto al = params();
    Ring a = line_ring(al);
    Ring b = line_ring(al); // identical presentation, distinct ring
    GradedClass ha = GradedClass::generator(a, "h");
    GradedClass hb = GradedClass::generator(b, "h");
    try {
        ha + hb;
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::RingMismatch);
    }

    // Transport by generator name does work.
    Ring big = bundle_ring(al);
    GradedClass moved = map_to_ring(ha, big);
    CHECK(moved == GradedClass::generator(big, "h"));
}

TEST_CASE("presentations that cannot terminate are rejected") {
    auto al = params();
    Polynomial one = Polynomial::constant(al, Rational(1));

    RingPresentation cyc;
    cyc.params = al;
    cyc.generators = {{"g", 1}};
    cyc.top_degree = 2;
    // g^2 -> g^2 can never reduce anything.
    cyc.rules = {{{{"g", 2}}, {{one, {{"g", 2}}}}}};
    try {
        make_ring(cyc);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::CyclicRewrite);
    }

    RingPresentation inhom;
    inhom.params = al;
    inhom.generators = {{"g", 1}};
    inhom.top_degree = 2;
    // g^2 -> g drops degree, which silently breaks every grading argument.
    inhom.rules = {{{{"g", 2}}, {{one, {{"g", 1}}}}}};
    try {
        make_ring(inhom);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::DegreeMismatch);
    }
}

TEST_CASE("integration table entries are validated") {
    auto al = params();
    Polynomial one = Polynomial::constant(al, Rational(1));

    RingPresentation pres;
    pres.params = al;
    pres.generators = {{"h", 1}};
    pres.rules = {{{{"h", 2}}, {}}};
    pres.top_degree = 1;
    pres.integration_table = {{{{"h", 1}}, one}, {{{"h", 1}}, one}};
    CHECK_THROWS_AS(make_ring(pres), Error); // duplicate entry

    pres.integration_table = {{{}, one}};
    CHECK_THROWS_AS(make_ring(pres), Error); // degree 0 entry at top degree 1

    pres.top_degree = 2;
    pres.integration_table = {{{{"h", 2}}, one}};
    CHECK_THROWS_AS(make_ring(pres), Error); // reducible monomial is unreachable

    // A top-degree monomial without a table entry is reported by name.
    RingPresentation sparse;
    sparse.params = al;
    sparse.generators = {{"h", 1}, {"t", 1}};
    sparse.top_degree = 1;
    sparse.integration_table = {{{{"h", 1}}, one}};
    Ring ring = make_ring(sparse);
    try {
        integrate(GradedClass::generator(ring, "t"));
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::UnhousedSymbol);
        CHECK(e.detail().find("t") != std::string::npos);
    }
}

TEST_CASE("product is associative and distributes") {
    auto al = params();
    Ring ring = bundle_ring(al);
    GradedClass s = GradedClass::generator(ring, "s");
    GradedClass h = GradedClass::generator(ring, "h");
    GradedClass e = GradedClass::generator(ring, "e");
    GradedClass one = GradedClass::one(ring);

    GradedClass p = one + s + e * Rational(2);
    GradedClass q = h - s * Rational(3);
    GradedClass w = one + h + e;
    CHECK((p * q) * w == p * (q * w));
    CHECK(p * (q + w) == p * q + p * w);
    CHECK(p * q == q * p);
}
