// Acceptance gate: re-derives the headline results end to end and prints one
// pass/fail line per criterion.  Exits nonzero if any criterion fails.
//
// Every comparison is exact.  Where a stated form and the derived form differ
// by design, the criterion requires the difference to be surfaced as a
// "discrepancy-noted" row in the report rather than silently absorbed.

#include <array>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chowcheck/betti.hpp"
#include "chowcheck/casework.hpp"
#include "chowcheck/charclass.hpp"
#include "chowcheck/checks.hpp"
#include "chowcheck/context.hpp"
#include "chowcheck/error.hpp"
#include "chowcheck/schubert.hpp"

using namespace chowcheck;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << label << "\n";
    if (!ok) ++failures;
}

std::string suite_status(const SuiteReport& suite, const std::string& id) {
    for (const CheckResult& check : suite.checks)
        if (check.check_id == id) return check.status;
    return "missing";
}

long as_long(const Rational& q) { return numerator(q).convert_to<long>(); }

} // namespace

int main() {
    try {
        Context ctx = standard_context();
        const AlphabetPtr& al = ctx.params;
        auto C = [&al](long v) { return Polynomial::constant(al, Rational(v)); };
        SuiteReport suite = run_suite({"all"});

        // 1: the defining relation of the projectivization, squared form
        const RankTwo<GradedClass> bundle{ctx.scalar("r") * ctx.H(), ctx.e()};
        const GradedClass squared_difference =
            ctx.bundle.pullback(discriminant(bundle)) -
            ctx.bundle.relative_tangent_c1().pow(2);
        report(1,
               "discriminant pullback equals the squared relative divisor class",
               squared_difference.is_zero());

        // 2: quadric-bundle case
        bool quadric_ok = true;
        {
            SolveOutcome closed = quadric_closed_forms();
            const AlphabetPtr cal = closed.value("x").alphabet();
            auto QC = [&cal](long v) {
                return Polynomial::constant(cal, Rational(v));
            };
            const Polynomial qa = Polynomial::var(cal, "a");
            const Polynomial qar = qa * Polynomial::var(cal, "r");
            const Polynomial shifted = (qar - QC(2)).pow(2);
            quadric_ok =
                closed.kind == SolveOutcome::Kind::Unique &&
                closed.value("x") == Fraction(QC(4) * qa, shifted) &&
                closed.value("y") == Fraction(QC(2) * qar.pow(2) - QC(4) * qar +
                                                  QC(4),
                                              qa * shifted) &&
                closed.value("z") ==
                    Fraction(QC(2) * qar.pow(4) - QC(12) * qar.pow(3) +
                                 QC(32) * qar.pow(2) - QC(40) * qar + QC(20),
                             qa.pow(3) * shifted);

            const QuadricValues at13 = quadric_solve(Int(1), Int(3));
            quadric_ok = quadric_ok && at13.x == 4 && at13.y == 10 && at13.z == 26;

            const std::set<Rational> rejected{quadric_solve(Int(3), Int(1)).y,
                                              quadric_solve(Int(4), Int(1)).y};
            quadric_ok = quadric_ok &&
                         rejected == std::set<Rational>{rational(10, 3),
                                                        rational(5, 4)};

            std::size_t admissible = 0;
            bool admitted13 = false;
            for (const CaseRecord& rec : quadric_classify()) {
                if (rec.verdict != CaseRecord::Verdict::Admissible) continue;
                ++admissible;
                admitted13 = rec.parameters.at("a") == 1 &&
                             rec.parameters.at("r") == 3;
            }
            quadric_ok = quadric_ok && admissible == 1 && admitted13;
        }
        report(2,
               "quadric system: closed forms, (1,3) values (4, 10, 26), r = 1 "
               "rejections {10/3, 5/4}, one admissible record",
               quadric_ok);

        // 3: span equivalence of the stated and derived pairing systems
        bool span_ok = false;
        bool scaled_claim_handled = false;
        {
            QuadricDerivation der = quadric_derive_system();
            const AlphabetPtr& dal = der.params;
            span_ok = der.span_ok && der.multipliers.size() == 3;
            for (std::size_t i = 0; span_ok && i < der.reference.size(); ++i) {
                Fraction acc = Fraction::constant(dal, Rational(0));
                for (std::size_t j = 0; j < der.equations.size(); ++j)
                    acc = acc +
                          der.multipliers[i][j] * Fraction(der.equations[j]);
                span_ok = acc == Fraction(der.reference[i]);
            }
            // the stated multiplier (r/a) on the second row reproduces the third
            // stated row only on the slice a = 1; the criterion requires that
            // mismatch to be carried as a noted discrepancy, not dropped
            const Fraction scaled =
                Fraction(der.equations[2]) -
                (Fraction::var(dal, "r") / Fraction::var(dal, "a")) *
                    Fraction(der.equations[1]);
            const Fraction stated_third(der.reference[2]);
            const std::map<std::string, Rational> slice{{"a", 1}};
            const bool slice_only =
                !(scaled == stated_third) &&
                scaled.substitute(slice) == stated_third.substitute(slice);
            scaled_claim_handled =
                slice_only && suite_status(suite,
                                           "quadric.span.third-row-multiplier") ==
                                  "discrepancy-noted";
        }
        report(3,
               "stated pairing system lies in the exact rational span of the "
               "derived one; the (r/a) multiplier claim holds only at a = 1 and "
               "is reported as a noted discrepancy",
               span_ok && scaled_claim_handled);

        // 4: numerical-equivalence substitution collapses to a(ar-2)^2 xi^3
        bool bound_ok = false;
        {
            IdentityReport rep = bound_expand();
            const Ring& ring = rep.expanded.ring();
            const AlphabetPtr& bal = ring->params();
            const Polynomial ba = Polynomial::var(bal, "a");
            const Polynomial coeff =
                ba * (ba * Polynomial::var(bal, "r") -
                      Polynomial::constant(bal, Rational(2)))
                         .pow(2);
            bound_ok = rep.matches &&
                       rep.expanded == GradedClass::generator(ring, "xi", 3) * coeff;
        }
        report(4,
               "squared-discriminant expansion along the minimal lift equals "
               "a(ar-2)^2 times the cube of the tautological class",
               bound_ok);

        // 5: exceptional-divisor identity and the admissible enumeration
        bool scroll_ok = false;
        bool enumeration_ok = false;
        {
            IdentityReport rep = scroll_expand_ei();
            const AlphabetPtr& sal = rep.expanded.ring()->params();
            auto SC = [&sal](long v) {
                return Polynomial::constant(sal, Rational(v));
            };
            const Polynomial sa = Polynomial::var(sal, "a");
            const Polynomial sr = Polynomial::var(sal, "r");
            const Polynomial sry = Polynomial::var(sal, "ry");
            const Polynomial sd = Polynomial::var(sal, "d");
            const Polynomial factored =
                (sa * sr - SC(2)) *
                (sd * (sr * sry * sa.pow(2) - (SC(3) * sr + SC(2) * sry) * sa +
                       SC(2)) +
                 sa * (sa * sr - SC(2)));
            scroll_ok = rep.matches && integrate(rep.expanded) == factored;

            std::set<std::array<long, 3>> admitted; // (r, ry, a)
            std::map<std::string, std::size_t> group_sizes;
            bool all_admissible = true;
            const std::vector<CaseRecord> records = prop_ineq_cases();
            for (const CaseRecord& rec : records) {
                admitted.insert({as_long(rec.parameters.at("r")),
                                 as_long(rec.parameters.at("ry")),
                                 as_long(rec.parameters.at("a"))});
                ++group_sizes[rec.group];
                all_admissible = all_admissible &&
                                 rec.verdict == CaseRecord::Verdict::Admissible;
            }
            const std::set<std::array<long, 3>> expected{
                {1, 1, 3}, {1, 1, 4}, {1, 2, 3}, {3, 1, 1}, {3, 1, 2},
                {3, 1, 3}, {3, 2, 1}, {3, 3, 1}, {3, 4, 1}, {3, 5, 1}};
            enumeration_ok =
                records.size() == 10 && all_admissible && admitted == expected &&
                group_sizes == std::map<std::string, std::size_t>{
                                   {"a*r = 3 and ry >= 2", 5},
                                   {"r = 3, ry = 1, a <= 3", 3},
                                   {"r = 1, ry = 1, a in {3, 4}", 2}};
        }
        report(5,
               "exceptional-divisor cube matches the factored form; the "
               "admissible (r, ry, a) set splits into exactly the three stated "
               "families",
               scroll_ok && enumeration_ok);

        // 6: Betti relations forced by the two routes
        bool betti_ok = false;
        {
            ScrollDerivation towers = derive_scroll_relations();
            const AlphabetPtr& tal = towers.params;
            const Polynomial tm = Polynomial::var(tal, "m");
            const Polynomial tby3 = Polynomial::var(tal, "by3");
            const Polynomial tby4 = Polynomial::var(tal, "by4");
            bool residuals_zero = !towers.residuals.empty();
            for (const Fraction& res : towers.residuals)
                residuals_zero = residuals_zero && res.is_zero();
            betti_ok =
                towers.solution.kind == SolveOutcome::Kind::AffineFamily &&
                towers.solution.value("bb1").is_zero() &&
                towers.solution.value("bx3") == Fraction(tby3) &&
                towers.solution.value("bx4") == Fraction(tm + tby4) &&
                towers.solution.free_unknowns ==
                    std::vector<std::string>{"by3", "by4"} &&
                residuals_zero;
        }
        report(6,
               "Betti relations: b1 of every center vanishes, b3 agrees, b4 "
               "differs by the number of centers",
               betti_ok);

        // 7: Euler-characteristic coefficients, the (1,3) family, (3,1) empty
        bool hrr_ok = true;
        {
            for (const char* id :
                 {"hrr.coefficient.f1", "hrr.coefficient.f2", "hrr.coefficient.f3",
                  "hrr.coefficient.f4", "hrr.coefficient.f5"})
                hrr_ok = hrr_ok && suite_status(suite, id) == "pass";

            const Polynomial chi = hrr_chi(ctx);
            hrr_ok = hrr_ok && chi.coeff_of("m", 0) == C(1);

            HrrCase family = hrr_case_solve(Int(1), Int(3));
            hrr_ok = hrr_ok &&
                     family.outcome.kind == SolveOutcome::Kind::AffineFamily &&
                     family.outcome.free_unknowns == std::vector<std::string>{"x"};
            if (hrr_ok) {
                const AlphabetPtr fal = family.outcome.value("y").alphabet();
                auto FC = [&fal](long v) {
                    return Polynomial::constant(fal, Rational(v));
                };
                const Polynomial fx = Polynomial::var(fal, "x");
                hrr_ok =
                    family.outcome.value("y") ==
                        Fraction(FC(5) * fx - FC(1), FC(2)) &&
                    family.outcome.value("z") ==
                        Fraction(FC(13) * fx - FC(7), FC(2)) &&
                    family.outcome.value("u") == Fraction(FC(2) * fx + FC(12)) &&
                    family.outcome.value("v") ==
                        Fraction(FC(13) * fx + FC(41), FC(2)) &&
                    family.residuals.size() == 5;
                for (const Fraction& res : family.residuals)
                    hrr_ok = hrr_ok && res.is_zero();
            }
            hrr_ok = hrr_ok && hrr_case_solve(Int(3), Int(1)).outcome.kind ==
                                   SolveOutcome::Kind::Inconsistent;
        }
        report(7,
               "chi coefficients match the stated formulas with constant term 1; "
               "(1,3) gives the affine family with zero residuals; (3,1) has no "
               "solution",
               hrr_ok);

        // 8: the two independent routes to the quintic meet
        bool cross_ok = false;
        {
            DegreeForms forms = quintic_degree_forms(al);
            const std::map<std::string, Rational> unit{
                {"m", 1}, {"c", 1}, {"d", 1}};
            const bool cycle_values = forms.x.evaluate(unit) == 5 &&
                                      forms.y.evaluate(unit) == 12 &&
                                      forms.z.evaluate(unit) == 29;
            const bool top_power =
                integrate_pairing(
                    SchubertElement::cycle(al, Partition{1, 0}).pow(6)) == C(5);
            const std::vector<McdTriple> solutions =
                solve_mcd(Int(5), Int(12), Int(29));
            const bool unique_triple =
                solutions.size() == 1 &&
                solutions[0] == McdTriple{Int(1), Int(1), Int(1)};

            HrrCase family = hrr_case_solve(Int(1), Int(3));
            bool characteristic_values = false;
            if (family.outcome.kind == SolveOutcome::Kind::AffineFamily) {
                const std::map<std::string, Rational> at5{{"x", 5}};
                characteristic_values =
                    family.outcome.value("y").evaluate(at5) == 12 &&
                    family.outcome.value("z").evaluate(at5) == 29 &&
                    family.outcome.value("u").evaluate(at5) == 22 &&
                    family.outcome.value("v").evaluate(at5) == 53;
            }
            cross_ok = cycle_values && top_power && unique_triple &&
                       characteristic_values;
        }
        report(8,
               "cycle route and characteristic route agree: (x, y, z) = "
               "(5, 12, 29), (u, v) = (22, 53), unique (m, c, d) = (1, 1, 1)",
               cross_ok);

        // 9: property suites
        bool rings_ok = false, schubert_ok = true, projection_ok = false,
             duality_ok = false, residual_ok = false, determinism_ok = false;
        {
            const GradedClass H = ctx.H(), e = ctx.e(), t = ctx.t();
            rings_ok =
                (H + e) * t == H * t + e * t && (H * e) * H == H * (e * H) &&
                ctx.xi().pow(2) ==
                    ctx.bundle.pullback(ctx.scalar("r") * ctx.H()) * ctx.xi() -
                        ctx.bundle.pullback(ctx.e()) &&
                ctx.xi().pow(3) == ctx.xi().pow(2) * ctx.xi();

            Ring gr = grassmannian_ring(al);
            for (const Partition& p : box_partitions()) {
                for (const Partition& q : box_partitions()) {
                    if (p.codim() + q.codim() == 6) {
                        const Polynomial pairing = integrate_pairing(
                            SchubertElement::cycle(al, p) *
                            SchubertElement::cycle(al, q));
                        schubert_ok = schubert_ok &&
                                      pairing == C(q == complement(p) ? 1 : 0);
                    }
                    const SchubertElement product =
                        SchubertElement::cycle(al, p) *
                        SchubertElement::cycle(al, q);
                    schubert_ok =
                        schubert_ok &&
                        to_grassmannian(product, gr) ==
                            to_grassmannian(SchubertElement::cycle(al, p), gr) *
                                to_grassmannian(SchubertElement::cycle(al, q), gr);
                }
            }

            projection_ok =
                ctx.bundle.pushforward(ctx.bundle.pullback(H * e) * ctx.xi()) ==
                    H * e &&
                ctx.bundle.pushforward(ctx.bundle.pullback(H)).is_zero() &&
                ctx.bundle.pushforward(ctx.xi().pow(2)) == ctx.scalar("r") * H &&
                ctx.bundle.pushforward(ctx.xi().pow(3)) ==
                    ctx.scalar("r").pow(2) * H.pow(2) - e;

            ScrollDerivation towers = derive_scroll_relations();
            duality_ok = towers.via_blowup.satisfies_duality() &&
                         towers.via_bundle.satisfies_duality();
            residual_ok = !towers.residuals.empty();
            for (const Fraction& res : towers.residuals)
                residual_ok = residual_ok && res.is_zero();

            determinism_ok = render_json(suite) == render_json(run_suite({"all"})) &&
                             render_text(suite) == render_text(run_suite({"all"}));
        }
        report(9,
               "property suites: ring axioms, exhaustive box pairing and ring "
               "route, projection formula, tower duality, zero residuals, "
               "byte-identical reports",
               rings_ok && schubert_ok && projection_ok && duality_ok &&
                   residual_ok && determinism_ok);
    } catch (const std::exception& ex) {
        std::cout << "[FAIL] uncaught error: " << ex.what() << "\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
