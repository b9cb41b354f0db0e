#include "doctest.h"

#include "chowcheck/betti.hpp"

using namespace chowcheck;

namespace {

AlphabetPtr betti_al() { return make_alphabet({"m", "bb1", "q3", "q4"}); }

Polynomial num(const AlphabetPtr& al, long v) {
    return Polynomial::constant(al, Rational(v));
}

} // namespace

TEST_CASE("sequence basics") {
    auto al = betti_al();
    BettiSequence pt = BettiSequence::point(al);
    CHECK(pt.real_dim() == 0);
    CHECK(pt.at(0) == num(al, 1));
    CHECK(pt.at(1).is_zero());
    CHECK(pt.at(-2).is_zero());
    CHECK(pt.satisfies_duality());

    BettiSequence plane = BettiSequence::projective_space(al, 2);
    CHECK(plane.real_dim() == 4);
    CHECK(plane.str() == "(1, 0, 1, 0, 1)");
    CHECK(plane.satisfies_duality());

    BettiSequence s(al, 2);
    s.set(0, num(al, 1));
    s.set(1, Polynomial::var(al, "bb1"));
    CHECK_FALSE(s.satisfies_duality());
    s.set(2, num(al, 1));
    CHECK(s.satisfies_duality());
    CHECK(s.str() == "(1, bb1, 1)");
    CHECK_THROWS_AS(s.set(3, num(al, 1)), Error);
    CHECK_THROWS_AS(BettiSequence(al, -1), Error);
}

TEST_CASE("bundle formula stacks shifted copies of the base") {
    auto al = betti_al();
    BettiSequence pt = BettiSequence::point(al);

    BettiSequence line = projbundle_betti(pt, 1);
    CHECK(line == BettiSequence::projective_space(al, 1));

    // Fibering twice over a point builds the Betti numbers of the plane.
    CHECK(projbundle_betti(pt, 2) == BettiSequence::projective_space(al, 2));

    CHECK_THROWS_AS(projbundle_betti(pt, 0), Error);

    // Rank-3 fibers over a curve with unknown b1: the jump-locus shape.
    BettiSequence curve(al, 2);
    curve.set(0, num(al, 1));
    curve.set(1, Polynomial::var(al, "bb1"));
    curve.set(2, num(al, 1));
    BettiSequence locus = projbundle_betti(curve, 2);
    CHECK(locus.real_dim() == 6);
    CHECK(locus.str() == "(1, bb1, 2, bb1, 2, bb1, 1)");
    // For a rational curve the even entries read 1,2,2,1, not an alternating
    // pattern of ones.
    std::map<std::string, Rational> rational_curve{{"bb1", Rational(0)}};
    CHECK(locus.at(2).evaluate(rational_curve) == Rational(2));
    CHECK(locus.at(4).evaluate(rational_curve) == Rational(2));
    CHECK(locus.satisfies_duality());

    // Symbolic self-dual base stays self-dual upstairs.
    BettiSequence four(al, 8);
    four.set(0, num(al, 1));
    four.set(2, num(al, 1));
    four.set(3, Polynomial::var(al, "q3"));
    four.set(4, Polynomial::var(al, "q4"));
    four.set(5, Polynomial::var(al, "q3"));
    four.set(6, num(al, 1));
    four.set(8, num(al, 1));
    REQUIRE(four.satisfies_duality());
    BettiSequence total = projbundle_betti(four, 1);
    CHECK(total.real_dim() == 10);
    CHECK(total.satisfies_duality());
    CHECK(total.at(4) == Polynomial::var(al, "q4") + num(al, 1));
}

TEST_CASE("blow-up formula adds one layer per codimension step") {
    auto al = betti_al();
    BettiSequence plane = BettiSequence::projective_space(al, 2);
    BettiSequence pt = BettiSequence::point(al);

    BettiSequence once = blowup_betti(plane, {BlowupCenter{pt, 2, num(al, 1)}});
    CHECK(once.str() == "(1, 0, 2, 0, 1)");
    CHECK(once.satisfies_duality());

    // Several centers at once, still only b2 moves.
    BettiSequence thrice = blowup_betti(plane, {BlowupCenter{pt, 2, num(al, 3)}});
    CHECK(thrice.at(2) == num(al, 4));
    CHECK(thrice.at(0) == num(al, 1));
    CHECK(thrice.at(1).is_zero());

    // A point in a fourfold has codimension 4 and three correction layers.
    BettiSequence fourspace = BettiSequence::projective_space(al, 4);
    BettiSequence blown = blowup_betti(fourspace, {BlowupCenter{pt, 4, num(al, 1)}});
    CHECK(blown.str() == "(1, 0, 2, 0, 2, 0, 2, 0, 1)");
    CHECK(blown.satisfies_duality());

    // Dimensional discipline: a curve inside a fourfold has codimension 3,
    // and trying to declare it codimension 4 is rejected outright.
    BettiSequence curve = BettiSequence::projective_space(al, 1);
    CHECK_NOTHROW(blowup_betti(fourspace, {BlowupCenter{curve, 3, num(al, 1)}}));
    CHECK_THROWS_AS(blowup_betti(fourspace, {BlowupCenter{curve, 4, num(al, 1)}}),
                    Error);
    CHECK_THROWS_AS(blowup_betti(fourspace, {BlowupCenter{curve, 1, num(al, 1)}}),
                    Error);
    CHECK_THROWS_AS(
        blowup_betti(fourspace,
                     {BlowupCenter{BettiSequence::point(make_alphabet({"w"})), 4,
                                   num(al, 1)}}),
        Error);
}

TEST_CASE("the two routes to the blown-up bundle force the three relations") {
    ScrollDerivation d = derive_scroll_relations();
    const AlphabetPtr& al = d.params;
    auto sym = [&](const char* n) { return Polynomial::var(al, n); };

    CHECK(d.via_blowup.real_dim() == 10);
    CHECK(d.via_bundle.real_dim() == 10);
    CHECK(d.via_blowup.satisfies_duality());
    CHECK(d.via_bundle.satisfies_duality());

    // The only information is at k = 3, 4, 5.
    CHECK(d.via_blowup.at(3) - d.via_bundle.at(3) == sym("bx3") - sym("by3"));
    CHECK(d.via_blowup.at(4) - d.via_bundle.at(4)
          == sym("bx4") - sym("by4") - sym("m"));
    CHECK(d.via_blowup.at(5) - d.via_bundle.at(5)
          == (sym("bx3") - sym("by3")) * Rational(2) - sym("m") * sym("bb1"));
    CHECK((d.via_blowup.at(2) - d.via_bundle.at(2)).is_zero());
    CHECK((d.via_blowup.at(8) - d.via_bundle.at(8)).is_zero());

    REQUIRE(d.solution.kind == SolveOutcome::Kind::AffineFamily);
    CHECK(d.solution.free_unknowns == std::vector<std::string>{"by3", "by4"});
    CHECK(d.solution.value("bb1") == Fraction(Polynomial::zero(al)));
    CHECK(d.solution.value("bx3") == Fraction(sym("by3")));
    CHECK(d.solution.value("bx4") == Fraction(sym("by4") + sym("m")));

    REQUIRE(d.residuals.size() == 11);
    for (const Fraction& r : d.residuals) CHECK(r.is_zero());
}
