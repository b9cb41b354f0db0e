#include "chowcheck/casework.hpp"

#include <utility>

#include "chowcheck/charclass.hpp"
#include "chowcheck/diophantine.hpp"

namespace chowcheck {

namespace {

/// Affine row of one equation: coefficient of x, of y, of z, then the constant
/// part, all as exact rational functions of the remaining parameters.
std::vector<Fraction> equation_vector(const Polynomial& eq) {
    const std::map<std::string, Rational> kill{
        {"x", Rational(0)}, {"y", Rational(0)}, {"z", Rational(0)}};
    return {Fraction(eq.coeff_of("x", 1)), Fraction(eq.coeff_of("y", 1)),
            Fraction(eq.coeff_of("z", 1)), Fraction(eq.substitute(kill))};
}

struct EchelonRow {
    std::vector<Fraction> vec;
    std::vector<Fraction> combo; // the row as a combination of the originals
    std::size_t pivot = 0;
};

/// Row reduction with bookkeeping: every echelon row remembers how it is
/// assembled from the input rows, so span certificates fall out of the
/// reduction instead of being solved for separately.
std::vector<EchelonRow> echelonize(std::vector<std::vector<Fraction>> rows,
                                   const AlphabetPtr& al) {
    const std::size_t n = rows.size();
    const std::size_t width = n == 0 ? 0 : rows.front().size();
    const Fraction zero = Fraction::constant(al, Rational(0));
    const Fraction one = Fraction::constant(al, Rational(1));
    std::vector<std::vector<Fraction>> combo(n, std::vector<Fraction>(n, zero));
    for (std::size_t i = 0; i < n; ++i) combo[i][i] = one;

    std::vector<bool> used(n, false);
    std::vector<EchelonRow> out;
    for (std::size_t c = 0; c < width; ++c) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i) {
            if (!used[i] && !rows[i][c].is_zero()) p = i;
        }
        if (p == n) continue;
        used[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || rows[i][c].is_zero()) continue;
            Fraction f = rows[i][c] / rows[p][c];
            for (std::size_t j = 0; j < width; ++j) rows[i][j] -= f * rows[p][j];
            for (std::size_t j = 0; j < n; ++j) combo[i][j] -= f * combo[p][j];
        }
        out.push_back(EchelonRow{rows[p], combo[p], c});
    }
    return out;
}

/// Reduces `target` against the echelon basis.  Returns the multipliers on the
/// original rows and whether the reduction reached exactly zero, i.e. whether
/// the target lies in the span.
std::pair<std::vector<Fraction>, bool> express_in_span(
    const std::vector<EchelonRow>& basis, std::vector<Fraction> target,
    std::size_t original_count, const AlphabetPtr& al) {
    const Fraction zero = Fraction::constant(al, Rational(0));
    std::vector<Fraction> lambda(original_count, zero);
    for (const EchelonRow& row : basis) {
        const Fraction t = target[row.pivot];
        if (t.is_zero()) continue;
        Fraction f = t / row.vec[row.pivot];
        for (std::size_t j = 0; j < target.size(); ++j) target[j] -= f * row.vec[j];
        for (std::size_t j = 0; j < original_count; ++j) lambda[j] += f * row.combo[j];
    }
    bool exact = true;
    for (const Fraction& t : target) exact = exact && t.is_zero();
    return {std::move(lambda), exact};
}

Polynomial con(const AlphabetPtr& al, long v) {
    return Polynomial::constant(al, Rational(v));
}

} // namespace

QuadricDerivation quadric_derive_system() {
    Context ctx = standard_context();
    const AlphabetPtr& al = ctx.params;

    GradedClass s = ctx.scroll_class();
    GradedClass xi = ctx.xi();
    GradedClass hyper = ctx.bundle.pullback(ctx.H());

    QuadricDerivation out;
    out.params = al;
    // s^3 against the fiber square meets the quadric surface section, degree 2;
    // s^4 pairs to zero against every divisor because the image of the model
    // map has dimension four.
    out.equations = {integrate(s.pow(3) * xi.pow(2)) - con(al, 2),
                     integrate(s.pow(4) * hyper),
                     integrate(s.pow(4) * xi)};

    // Recorded reference system, transcribed term by term in the same order.
    Polynomial a = Polynomial::var(al, "a");
    Polynomial r = Polynomial::var(al, "r");
    Polynomial x = Polynomial::var(al, "x");
    Polynomial y = Polynomial::var(al, "y");
    Polynomial z = Polynomial::var(al, "z");
    out.reference = {
        (r.pow(4) * a.pow(3) - Rational(3) * r.pow(3) * a.pow(2)
         + Rational(3) * r.pow(2) * a - r) * x
            - (Rational(3) * r.pow(2) * a.pow(3) - Rational(6) * r * a.pow(2)
               + Rational(3) * a) * y
            + a.pow(3) * z - con(al, 2),
        (r.pow(3) * a.pow(4) - Rational(4) * r.pow(2) * a.pow(3)
         + Rational(6) * r * a.pow(2) - Rational(4) * a) * x
            + (Rational(4) * a.pow(3) - Rational(2) * r * a.pow(4)) * y,
        x - (r.pow(2) * a.pow(4) - Rational(4) * r * a.pow(3)
             + Rational(6) * a.pow(2)) * y
            + a.pow(4) * z,
    };

    std::vector<std::vector<Fraction>> derived_rows;
    derived_rows.reserve(out.equations.size());
    for (const Polynomial& eq : out.equations) derived_rows.push_back(equation_vector(eq));
    std::vector<EchelonRow> basis = echelonize(derived_rows, al);

    out.span_ok = true;
    for (const Polynomial& ref : out.reference) {
        auto [lambda, exact] =
            express_in_span(basis, equation_vector(ref), out.equations.size(), al);
        out.multipliers.push_back(std::move(lambda));
        out.span_ok = out.span_ok && exact;
    }
    return out;
}

SolveOutcome quadric_closed_forms() {
    QuadricDerivation d = quadric_derive_system();
    LinearSystem sys(d.params, {"x", "y", "z"});
    for (const Polynomial& eq : d.equations) sys.add_equation(eq);
    return sys.solve();
}

QuadricValues quadric_solve(const Int& a, const Int& r) {
    QuadricDerivation d = quadric_derive_system();
    const std::map<std::string, Rational> at{{"a", Rational(a)}, {"r", Rational(r)}};
    LinearSystem sys(d.params, {"x", "y", "z"});
    for (const Polynomial& eq : d.equations) sys.add_equation(eq.substitute(at));
    SolveOutcome out = sys.solve();
    if (out.kind != SolveOutcome::Kind::Unique) {
        throw Error(Error::Kind::SingularSystem,
                    "pairing system degenerates where ar = 2",
                    "a = " + a.str() + ", r = " + r.str());
    }
    return QuadricValues{out.value("x").evaluate({}), out.value("y").evaluate({}),
                         out.value("z").evaluate({})};
}

std::vector<CaseRecord> quadric_classify() {
    Context ctx = standard_context();
    const AlphabetPtr& al = ctx.params;
    Polynomial a = Polynomial::var(al, "a");

    std::vector<CaseRecord> records;
    for (long r : {1L, 3L}) {
        // x = 4a/(ar-2)^2 >= 1 bounds the grid: (ar-2)^2 <= 4a, which over the
        // integers is the strict comparison against the polynomial minus one.
        Polynomial gate = (Rational(r) * a - con(al, 2)).pow(2) - Rational(4) * a - con(al, 1);
        const std::vector<Int> candidates = integer_points_under_quadratic(
            gate, "a", {LinearBound{Rational(r), Rational(-3)}});
        for (const Int& cand : candidates) {
            CaseRecord rec;
            rec.parameters = {{"a", Rational(cand)}, {"r", Rational(r)}};
            QuadricValues q = quadric_solve(cand, Int(r));
            rec.derived["x"] = q.x;
            if (!is_integer(q.x)) {
                rec.verdict = CaseRecord::Verdict::Rejected;
                rec.reason = "x = " + to_string(q.x) + " is not an integer";
                records.push_back(std::move(rec));
                continue;
            }
            rec.derived["y"] = q.y;
            if (!is_integer(q.y)) {
                rec.verdict = CaseRecord::Verdict::Rejected;
                rec.reason = "y = " + to_string(q.y) + " is not an integer";
                records.push_back(std::move(rec));
                continue;
            }
            rec.derived["z"] = q.z;
            if (!is_integer(q.z)) {
                rec.verdict = CaseRecord::Verdict::Rejected;
                rec.reason = "z = " + to_string(q.z) + " is not an integer";
                records.push_back(std::move(rec));
                continue;
            }
            rec.verdict = CaseRecord::Verdict::Admissible;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

IdentityReport bound_expand() {
    Context ctx = standard_context();
    const AlphabetPtr& al = ctx.params;

    RingPresentation pres;
    pres.name = "rank_two_free";
    pres.params = al;
    pres.generators = {{"xi", 1}, {"P", 1}};
    pres.top_degree = 3;
    Ring free_ring = make_ring(pres);

    Polynomial a = Polynomial::var(al, "a");
    Polynomial r = Polynomial::var(al, "r");
    GradedClass xi = GradedClass::generator(free_ring, "xi");
    GradedClass plane = GradedClass::generator(free_ring, "P");

    // No relations mention P, so replacing it by a*xi is a ring map.
    GradedClass expanded =
        ((Rational(2) * xi - r * plane).pow(2) * plane).substitute_generator("P", a * xi);
    Polynomial coeff = a * (a * r - con(al, 2)).pow(2);
    GradedClass stated = GradedClass::generator(free_ring, "xi", 3) * coeff;

    const bool matches = expanded == stated;
    return IdentityReport{std::move(expanded), {std::move(stated)}, matches};
}

IdentityReport scroll_expand_ei() {
    Context ctx = standard_context();
    const AlphabetPtr& al = ctx.params;
    Polynomial a = Polynomial::var(al, "a");
    Polynomial r = Polynomial::var(al, "r");
    Polynomial ry = Polynomial::var(al, "ry");
    Polynomial d = Polynomial::var(al, "d");

    // Surface swept by the jumping fibers: zeta is the fiber class section,
    // h the fiber of the ruling, zeta^2 h the point.
    RingPresentation pres;
    pres.name = "scroll_surface";
    pres.params = al;
    pres.generators = {{"zeta", 1}, {"h", 1}};
    RuleExpr zeta_cube;
    zeta_cube.lhs = {{"zeta", 3}};
    zeta_cube.rhs = {TermExpr{d * ry - con(al, 2), {{"zeta", 2}, {"h", 1}}}};
    RuleExpr h_square;
    h_square.lhs = {{"h", 2}};
    pres.rules = {zeta_cube, h_square};
    pres.top_degree = 3;
    pres.integration_table = {{{{"zeta", 2}, {"h", 1}}, con(al, 1)}};
    Ring surface = make_ring(pres);

    GradedClass zeta = GradedClass::generator(surface, "zeta");
    GradedClass h = GradedClass::generator(surface, "h");
    GradedClass expanded = ((a * zeta + (a - d) * h)
                            * ((a * r - con(al, 2)) * zeta
                               + (a * r - d * r - con(al, 2)) * h).pow(2));

    Polynomial filter = r * ry * a.pow(2) - (Rational(3) * r + Rational(2) * ry) * a + con(al, 2);
    Polynomial factored = (r * a - con(al, 2)) * (d * filter + a * (r * a - con(al, 2)));
    Polynomial intermediate =
        (r * a - con(al, 2))
        * ((d * r * ry + r) * a.pow(2)
           - (Rational(3) * d * r + Rational(2) * d * ry + con(al, 2)) * a
           + Rational(2) * d);

    const MonomialExpr point{{"zeta", 2}, {"h", 1}};
    std::vector<GradedClass> stated{GradedClass::monomial(surface, point, factored),
                                    GradedClass::monomial(surface, point, intermediate)};
    const bool matches = expanded == stated[0] && expanded == stated[1];
    return IdentityReport{std::move(expanded), std::move(stated), matches};
}

std::vector<CaseRecord> prop_ineq_cases() {
    Context ctx = standard_context();
    const AlphabetPtr& al = ctx.params;
    Polynomial a = Polynomial::var(al, "a");

    std::vector<CaseRecord> records;
    for (long r : {1L, 3L}) {
        for (long ry = 1; ry <= 5; ++ry) {
            Polynomial gate = Rational(r * ry) * a.pow(2)
                              - Rational(3 * r + 2 * ry) * a + con(al, 2);
            const std::vector<Int> points = integer_points_under_quadratic(
                gate, "a", {LinearBound{Rational(r), Rational(-3)}});
            for (const Int& cand : points) {
                CaseRecord rec;
                rec.parameters = {{"a", Rational(cand)},
                                  {"r", Rational(r)},
                                  {"ry", Rational(ry)}};
                rec.derived["filter"] = gate.evaluate({{"a", Rational(cand)}});
                rec.verdict = CaseRecord::Verdict::Admissible;
                if (cand * r == 3 && ry >= 2) {
                    rec.group = "a*r = 3 and ry >= 2";
                } else if (r == 3 && ry == 1 && cand <= 3) {
                    rec.group = "r = 3, ry = 1, a <= 3";
                } else if (r == 1 && ry == 1 && (cand == 3 || cand == 4)) {
                    rec.group = "r = 1, ry = 1, a in {3, 4}";
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

Polynomial hrr_chi(const Context& ctx) {
    Polynomial m = ctx.p("m");
    return euler_characteristic(m * ctx.scroll_class(), ctx.todd_bundle());
}

HrrCase hrr_case_solve(const Int& a, const Int& r) {
    Context ctx = standard_context();
    const AlphabetPtr& al = ctx.params;
    const std::map<std::string, Rational> at{{"a", Rational(a)}, {"r", Rational(r)}};

    HrrCase hc;
    hc.chi = hrr_chi(ctx).substitute(at);

    // chi(m) must agree with the binomial series (m+1)(m+2)(m+3)(m+4)/24,
    // coefficient by coefficient from m^5 down to m.
    Polynomial m = Polynomial::var(al, "m");
    Polynomial series = (m + con(al, 1)) * (m + con(al, 2)) * (m + con(al, 3))
                        * (m + con(al, 4)) / Rational(24);
    for (int k = 5; k >= 1; --k) {
        hc.equations.push_back(hc.chi.coeff_of("m", k) - series.coeff_of("m", k));
    }

    // Unknowns ordered so elimination pivots on y, z, u, v and leaves x free
    // whenever the system is underdetermined; families read in terms of x.
    LinearSystem sys(al, {"y", "z", "u", "v", "x"});
    for (const Polynomial& eq : hc.equations) sys.add_equation(eq);
    hc.outcome = sys.solve();
    if (hc.outcome.kind != SolveOutcome::Kind::Inconsistent) {
        hc.residuals = sys.residuals(hc.outcome);
    }
    return hc;
}

} // namespace chowcheck
