#include "chowcheck/checks.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chowcheck/betti.hpp"
#include "chowcheck/casework.hpp"
#include "chowcheck/charclass.hpp"
#include "chowcheck/context.hpp"
#include "chowcheck/diophantine.hpp"
#include "chowcheck/error.hpp"
#include "chowcheck/schubert.hpp"

namespace chowcheck {
namespace {

constexpr const char* kVersion = "1.0.0";

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

/// Collects results.  Status is derived, never assigned by a check directly:
/// a plain row passes exactly when the two renderings coincide, and a noted
/// row keeps its "discrepancy-noted" status only while the recorded
/// explanation is re-verified to hold.
class Sink {
public:
    explicit Sink(std::vector<CheckResult>& out)
        : out_(out), last_(std::chrono::steady_clock::now()) {}

    void add(std::string id, std::string anchor, std::string expected,
             std::string computed) {
        const bool ok = expected == computed;
        push(std::move(id), std::move(anchor), ok ? "pass" : "fail",
             std::move(expected), std::move(computed));
    }

    void add_noted(std::string id, std::string anchor, std::string expected,
                   std::string computed, bool explanation_holds) {
        push(std::move(id), std::move(anchor),
             explanation_holds ? "discrepancy-noted" : "fail",
             std::move(expected), std::move(computed));
    }

private:
    void push(std::string id, std::string anchor, std::string status,
              std::string expected, std::string computed) {
        const auto now = std::chrono::steady_clock::now();
        CheckResult result;
        result.check_id = std::move(id);
        result.anchor = std::move(anchor);
        result.status = std::move(status);
        result.expected = std::move(expected);
        result.computed = std::move(computed);
        result.elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(now - last_);
        last_ = now;
        out_.push_back(std::move(result));
    }

    std::vector<CheckResult>& out_;
    std::chrono::steady_clock::time_point last_;
};

void check_betti(Sink& sink) {
    ScrollDerivation der = derive_scroll_relations();
    const AlphabetPtr& al = der.params;
    auto C = [&al](long v) { return Polynomial::constant(al, Rational(v)); };
    const Polynomial m = Polynomial::var(al, "m");
    const Polynomial bb1 = Polynomial::var(al, "bb1");
    const Polynomial bx3 = Polynomial::var(al, "bx3");
    const Polynomial bx4 = Polynomial::var(al, "bx4");
    const Polynomial by3 = Polynomial::var(al, "by3");
    const Polynomial by4 = Polynomial::var(al, "by4");

    const std::string expected_rel =
        "bb1 = " + Fraction::constant(al, Rational(0)).str() +
        "; bx3 = " + Fraction(by3).str() + "; bx4 = " + Fraction(m + by4).str() +
        "; free: by3, by4";
    std::string computed_rel = "no two-parameter family";
    if (der.solution.kind == SolveOutcome::Kind::AffineFamily) {
        computed_rel = "bb1 = " + der.solution.value("bb1").str() +
                       "; bx3 = " + der.solution.value("bx3").str() +
                       "; bx4 = " + der.solution.value("bx4").str() +
                       "; free: " + join(der.solution.free_unknowns, ", ");
    }
    sink.add("betti.relations",
             R"(we have $b_1(B_i)=0$, $b_3(X) =b_3(Y)$ and $b_4(Y) +m =b_4(X)$)",
             expected_rel, computed_rel);

    const bool palin_blowup = der.via_blowup.satisfies_duality();
    const bool palin_bundle = der.via_bundle.satisfies_duality();
    std::string computed_dual = "both ten-dimensional towers are palindromic";
    if (!palin_blowup || !palin_bundle) {
        computed_dual = std::string("blow-up tower palindromic: ") +
                        (palin_blowup ? "yes" : "no") +
                        "; bundle tower palindromic: " +
                        (palin_bundle ? "yes" : "no");
    }
    sink.add("betti.duality",
             R"(Note that $b_k(X) = b_{8-k}(X)$ and $b_k(Y) = b_{8-k} (Y)$ by the Poincar\'e duality, and that $b_2(X) = b_2 (Y) =1$.)",
             "both ten-dimensional towers are palindromic", computed_dual);

    sink.add("betti.system.k3", R"(b_3(X) =b_3(Y))", (bx3 - by3).str(),
             (der.via_blowup.at(3) - der.via_bundle.at(3)).str());
    const bool k4_ok = der.via_blowup.at(4) - der.via_bundle.at(4) == bx4 - by4 - m;
    sink.add("betti.system.k4",
             R"(b_4(X)+b_{2} (X) = b_4(Y)+b_{2} (Y) + \sum_{i=1}^m  b_{0}(B_i))",
             (bx4 - by4 - m).str(),
             (der.via_blowup.at(4) - der.via_bundle.at(4)).str());
    sink.add("betti.system.k5",
             R"(b_5(X)+b_{3} (X) = b_5(Y)+b_{3} (Y) + \sum_{i=1}^m  b_{1}(B_i))",
             (C(2) * bx3 - C(2) * by3 - m * bb1).str(),
             (der.via_blowup.at(5) - der.via_bundle.at(5)).str());

    std::size_t vanishing = 0;
    for (const Fraction& res : der.residuals)
        if (res.is_zero()) ++vanishing;
    sink.add("betti.residuals",
             R"(b_k(X)+b_{k-2} (X) = b_k(Y)+b_{k-2} (Y) + \sum_{i=1}^m  b_{k-4}(B_i))",
             "11 of 11 residuals vanish",
             std::to_string(vanishing) + " of " +
                 std::to_string(der.residuals.size()) + " residuals vanish");

    const bool residuals_ok = vanishing == 11 && der.residuals.size() == 11;
    sink.add_noted(
        "betti.summation-bound",
        R"(b_4(X)+b_{2} (X) = b_4(Y)+b_{2} (Y) + \sum_{i=1}^m  b_{0}(B_i))",
        R"(b_k(\widetilde{Y}) = b_k(Y)+\sum_{i=1}^m b_{k-2} (B_i)+\sum_{i=0}^m b_{k-4} (B_i))",
        "the re-derived blow-up formula sums both corrections over i = 1..m; "
        "with that bound every route residual vanishes and the k = 4 instance "
        "matches the printed one, which itself sums from i = 1",
        residuals_ok && k4_ok);
}

void check_bound(Sink& sink) {
    IdentityReport rep = bound_expand();
    sink.add("bound.identity", R"(a(ar_X-2)^2 \xi_\mathcal{E} ^3 \cdot F' \leq 0)",
             rep.stated[0].str(), rep.expanded.str());

    const Ring& ring = rep.expanded.ring();
    const AlphabetPtr& al = ring->params();
    auto C = [&al](long v) { return Polynomial::constant(al, Rational(v)); };
    const Polynomial a = Polynomial::var(al, "a");
    const Polynomial r = Polynomial::var(al, "r");
    // expanded transliteration, deliberately not the factored a(ar-2)^2 form
    const Polynomial coeff = a.pow(3) * r.pow(2) - C(4) * a.pow(2) * r + C(4) * a;
    sink.add("bound.coefficient", R"(a\xi_\mathcal{E} \equiv _\mathrm{num} \pi^*H_X)",
             (GradedClass::generator(ring, "xi", 3) * coeff).str(),
             rep.expanded.str());

    const std::vector<std::string> expected_vals{"1", "0", "0"};
    std::vector<std::string> computed_vals{
        coeff.substitute(std::map<std::string, Rational>{{"a", 1}, {"r", 3}}).str(),
        coeff.substitute(std::map<std::string, Rational>{{"a", 2}, {"r", 1}}).str(),
        coeff.substitute(std::map<std::string, Rational>{{"a", 1}, {"r", 2}}).str()};
    sink.add("bound.instances",
             R"(This contradicts the facts that $\xi_\mathcal{E}$ is ample and $ar_X \geq 3$)",
             join(expected_vals, "; "), join(computed_vals, "; "));
}

void check_cases(Sink& sink) {
    std::vector<CaseRecord> records = prop_ineq_cases();

    auto triple = [](const CaseRecord& rec) {
        return "(a = " + to_string(rec.parameters.at("a")) +
               ", r = " + to_string(rec.parameters.at("r")) +
               ", ry = " + to_string(rec.parameters.at("ry")) + ")";
    };

    const std::array<std::string, 3> labels{
        "a*r = 3 and ry >= 2", "r = 3, ry = 1, a <= 3", "r = 1, ry = 1, a in {3, 4}"};
    std::map<std::string, std::vector<std::string>> members;
    std::vector<std::string> stray;
    for (const CaseRecord& rec : records) {
        if (std::find(labels.begin(), labels.end(), rec.group) != labels.end())
            members[rec.group].push_back(triple(rec));
        else
            stray.push_back(rec.group + ": " + triple(rec));
    }
    std::string computed_tri;
    for (const std::string& label : labels) {
        if (!computed_tri.empty()) computed_tri += " | ";
        computed_tri += label + ": " + join(members[label], ", ");
    }
    if (!stray.empty()) computed_tri += " | unassigned: " + join(stray, ", ");
    sink.add(
        "cases.trichotomy",
        R"((1) $ar_X =3$ and $r_Y\geq2$; (2) $a \leq 3$, $r_X=3$ and $r_Y =1$; (3) $a \leq 4$, $r_X=1$ and $r_Y=1$)",
        "a*r = 3 and ry >= 2: (a = 3, r = 1, ry = 2), (a = 1, r = 3, ry = 2), "
        "(a = 1, r = 3, ry = 3), (a = 1, r = 3, ry = 4), (a = 1, r = 3, ry = 5)"
        " | r = 3, ry = 1, a <= 3: (a = 1, r = 3, ry = 1), (a = 2, r = 3, ry = 1), "
        "(a = 3, r = 3, ry = 1)"
        " | r = 1, ry = 1, a in {3, 4}: (a = 3, r = 1, ry = 1), (a = 4, r = 1, ry = 1)",
        computed_tri);

    AlphabetPtr al = make_alphabet({"a"});
    auto C = [&al](long v) { return Polynomial::constant(al, Rational(v)); };
    const Polynomial a = Polynomial::var(al, "a");
    auto quadratic_points = [&](long r, long ry) {
        const Polynomial gate =
            C(r * ry) * a.pow(2) - C(3 * r + 2 * ry) * a + C(2);
        std::vector<std::string> rendered;
        for (const Int& n : integer_points_under_quadratic(
                 gate, "a", {LinearBound{Rational(r), Rational(-3)}}))
            rendered.push_back(to_string(n));
        return "{" + join(rendered, ", ") + "}";
    };
    const char* quad_anchor = R"(0 > r_Xr_Ya^2-(3r_X+2r_Y)a+2)";
    sink.add("cases.quadratic.(3,1)", quad_anchor, "{1, 2, 3}", quadratic_points(3, 1));
    sink.add("cases.quadratic.(1,1)", quad_anchor, "{3, 4}", quadratic_points(1, 1));
    sink.add("cases.quadratic.(3,2)", quad_anchor, "{1}", quadratic_points(3, 2));

    std::vector<std::string> exceeding;
    for (const CaseRecord& rec : records)
        if (rec.parameters.at("a") * rec.parameters.at("r") > 3)
            exceeding.push_back(triple(rec));
    sink.add("cases.exceeding",
             R"(\varphi^*(-K_Y)\cdot \widetilde{C} = a -\frac{3}{r_X}\leq 2)",
             "(a = 4, r = 1, ry = 1); (a = 2, r = 3, ry = 1); (a = 3, r = 3, ry = 1)",
             join(exceeding, "; "));

    // the closed-form upper bound compared exactly: L < sqrt(D) iff L < 0 or L^2 < D
    std::size_t below = 0;
    for (const CaseRecord& rec : records) {
        const Rational av = rec.parameters.at("a");
        const Rational rv = rec.parameters.at("r");
        const Rational ryv = rec.parameters.at("ry");
        const Rational lhs = 2 * ryv * rv * av - 3 * rv - 2 * ryv;
        const Rational disc = 9 * rv * rv + 4 * ryv * rv + 4 * ryv * ryv;
        if (lhs < 0 || lhs * lhs < disc) ++below;
    }
    sink.add("cases.upper-bound",
             R"(a < \frac{3r_X+2r_Y+\sqrt{9r_X^2+4r_Yr_X+4r_Y^2}}{2r_Yr_X})",
             "10 of 10 admissible triples lie below the closed-form bound",
             std::to_string(below) + " of " + std::to_string(records.size()) +
                 " admissible triples lie below the closed-form bound");
}

void check_grothendieck(Sink& sink) {
    Context ctx = standard_context();
    const RankTwo<GradedClass> bundle{ctx.scalar("r") * ctx.H(), ctx.e()};
    const GradedClass delta = discriminant(bundle);
    const GradedClass upstairs = ctx.bundle.pullback(delta);
    const GradedClass relative = ctx.bundle.relative_tangent_c1();

    const GradedClass difference = upstairs - relative * relative;
    sink.add("grothendieck.relation",
             R"(\pi^*\varDelta = (2\xi_\mathcal{E}-r_X\pi^*H_X)^2)", "0",
             difference.is_zero() ? "0" : difference.str());

    const GradedClass anticanonical =
        relative + ctx.bundle.pullback(ctx.scalar("r") * ctx.H());
    sink.add("grothendieck.anticanonical", R"(-K_W = 2 \xi_{\mathcal{E}})",
             (Rational(2) * ctx.xi()).str(), anticanonical.str());

    const Polynomial downstairs_pairing = integrate(delta * ctx.H().pow(2));
    const Polynomial upstairs_pairing =
        integrate(upstairs * ctx.bundle.pullback(ctx.H()).pow(2) * ctx.xi());
    sink.add("grothendieck.pairing-pushforward",
             R"(\pi^*\varDelta \cdot \pi^*H_X \cdot F' \leq 0)",
             downstairs_pairing.str(), upstairs_pairing.str());

    sink.add("grothendieck.bogomolov.(1,3)", R"(\varDelta\cdot H_X^2 \leq0)",
             "-4",
             downstairs_pairing
                 .substitute(std::map<std::string, Rational>{
                     {"r", 3}, {"x", 4}, {"y", 10}})
                 .str());
}

void check_hrr(Sink& sink) {
    Context ctx = standard_context();
    const AlphabetPtr& al = ctx.params;
    auto C = [&al](long v) { return Polynomial::constant(al, Rational(v)); };
    auto Q = [&al](long n, long d) {
        return Polynomial::constant(al, rational(n, d));
    };
    const Polynomial a = Polynomial::var(al, "a");
    const Polynomial r = Polynomial::var(al, "r");
    const Polynomial x = Polynomial::var(al, "x");
    const Polynomial y = Polynomial::var(al, "y");
    const Polynomial z = Polynomial::var(al, "z");
    const Polynomial u = Polynomial::var(al, "u");
    const Polynomial v = Polynomial::var(al, "v");

    const Polynomial chi = hrr_chi(ctx);

    const Polynomial f1 =
        (a.pow(5) * r.pow(4) - C(5) * a.pow(4) * r.pow(3) +
         C(10) * a.pow(3) * r.pow(2) - C(10) * a.pow(2) * r + C(5) * a) *
            Q(1, 120) * x -
        (C(3) * a.pow(5) * r.pow(2) - C(10) * a.pow(4) * r + C(10) * a.pow(3)) *
            Q(1, 120) * y +
        a.pow(5) * Q(1, 120) * z;
    const Polynomial f2 =
        (a.pow(4) * r.pow(4) - C(4) * a.pow(3) * r.pow(3) +
         C(6) * a.pow(2) * r.pow(2) - C(4) * a * r + C(1)) *
            Q(1, 24) * x -
        (C(3) * a.pow(4) * r.pow(2) - C(8) * a.pow(3) * r + C(6) * a.pow(2)) *
            Q(1, 24) * y +
        a.pow(4) * Q(1, 24) * z;
    const Polynomial f3 =
        (C(5) * a.pow(3) * r.pow(4) - C(15) * a.pow(2) * r.pow(3) +
         C(15) * a * r.pow(2) - C(6) * r) *
            Q(1, 72) * x -
        (C(5) * a.pow(3) * r.pow(2) - C(10) * a.pow(2) * r + C(4) * a) *
            Q(1, 24) * y +
        a.pow(3) * Q(1, 18) * z +
        (a.pow(3) * r.pow(2) - C(3) * a.pow(2) * r + C(3) * a) * Q(1, 72) * u -
        a.pow(3) * Q(1, 72) * v;
    const Polynomial f4 =
        (a.pow(2) * r.pow(4) - C(2) * a * r.pow(3) + r.pow(2)) * Q(1, 24) * x -
        (C(3) * a.pow(2) * r.pow(2) - C(4) * a * r) * Q(1, 24) * y +
        (a.pow(2) * r.pow(2) - C(2) * a * r + C(1)) * Q(1, 24) * u -
        a.pow(2) * Q(1, 24) * v;
    const Polynomial f5 = a * r.pow(4) * Q(1, 180) * x -
                          a * r.pow(2) * Q(1, 60) * y - a * Q(1, 45) * z +
                          (C(2) * a * r.pow(2) - C(3) * r) * Q(1, 72) * u -
                          a * Q(1, 36) * v + a;

    const struct {
        const char* id;
        const char* anchor;
        const Polynomial* stated;
        int power;
    } rows[] = {
        {"hrr.coefficient.f1",
         R"(f_1= \frac{a^5 r^4-5a^4 r^3+10a^3 r^2-10a^2 r+5a}{120}x -\frac{3a^5 r^2-10a^4 r+10a^3}{120}y + \frac{a^5}{120}z)",
         &f1, 5},
        {"hrr.coefficient.f2",
         R"(f_2= \frac{a^4 r^4-4a^3r^3+6a^2r^2-4a r+1}{24}x -\frac{3a^4r^2-8a^3r+6a^2}{24}y +\frac{a^4}{24}z)",
         &f2, 4},
        {"hrr.coefficient.f3",
         R"(f_3= \frac{5 a^3 r^4-15 a^2 r^3+15 a r^2-6r}{72}x -\frac{5 a^3 r^2-10 a^2 r+4a}{24}y +\frac{a^3}{18}z +\frac{a^3 r^2-3a^2 r+3a}{72}u -\frac{a^3}{72}v)",
         &f3, 3},
        {"hrr.coefficient.f4",
         R"(f_4= \frac{a^2 r^4-2a r^3+r^2}{24}x -\frac{3a^2 r^2-4a r}{24}y +\frac{a^2 r^2-2a r+1}{24}u -\frac{a^2}{24}v)",
         &f4, 2},
        {"hrr.coefficient.f5",
         R"(f_5= \frac{a r^4}{180}x -\frac{a r^2}{60}y -\frac{a}{45}z +\frac{2a r^2-3r}{72}u -\frac{a}{36}v+a)",
         &f5, 1},
    };
    for (const auto& row : rows)
        sink.add(row.id, row.anchor, row.stated->str(),
                 chi.coeff_of("m", row.power).str());

    sink.add("hrr.constant-term",
             R"(\chi(m(a\xi_\mathcal{E}-\pi^*H_X))=\chi(mH_Y)=\binom{m+4}{m})",
             "1", chi.coeff_of("m", 0).str());

    HrrCase family = hrr_case_solve(Int(1), Int(3));
    const Fraction family_y(C(5) * x - C(1), C(2));
    const Fraction family_z(C(13) * x - C(7), C(2));
    const Fraction family_u(C(2) * x + C(12));
    const Fraction family_v(C(13) * x + C(41), C(2));
    const std::string expected_family =
        "free: x; y = " + family_y.str() + "; z = " + family_z.str() +
        "; u = " + family_u.str() + "; v = " + family_v.str();
    std::string computed_family = "no one-parameter family";
    if (family.outcome.kind == SolveOutcome::Kind::AffineFamily) {
        computed_family = "free: " + join(family.outcome.free_unknowns, ", ") +
                          "; y = " + family.outcome.value("y").str() +
                          "; z = " + family.outcome.value("z").str() +
                          "; u = " + family.outcome.value("u").str() +
                          "; v = " + family.outcome.value("v").str();
    }
    sink.add("hrr.family.(1,3)",
             R"(y= \frac{5x-1}{2}, z= \frac{13x-7}{2}, u= 2x+12, v= \frac{13x+41}{2})",
             expected_family, computed_family);

    std::size_t vanishing = 0;
    for (const Fraction& res : family.residuals)
        if (res.is_zero()) ++vanishing;
    sink.add("hrr.residuals.(1,3)",
             R"(f_1= 0, f_2= \frac{1}{24}, f_3= \frac{5}{12}, f_4= \frac{35}{24}, f_5= \frac{25}{12})",
             "5 of 5 residuals vanish",
             std::to_string(vanishing) + " of " +
                 std::to_string(family.residuals.size()) + " residuals vanish");

    std::string computed_at5 = "no one-parameter family";
    if (family.outcome.kind == SolveOutcome::Kind::AffineFamily) {
        const std::map<std::string, Rational> at5{{"x", 5}};
        computed_at5 = "(x, y, z, u, v) = (5, " +
                       to_string(family.outcome.value("y").evaluate(at5)) + ", " +
                       to_string(family.outcome.value("z").evaluate(at5)) + ", " +
                       to_string(family.outcome.value("u").evaluate(at5)) + ", " +
                       to_string(family.outcome.value("v").evaluate(at5)) + ")";
    }
    sink.add("hrr.family.at-x5",
             R"(Moreover, since $H_X^4=5$, we already know that $X$ is a quintic del Pezzo $4$-fold.)",
             "(x, y, z, u, v) = (5, 12, 29, 22, 53)", computed_at5);

    HrrCase degenerate = hrr_case_solve(Int(3), Int(1));
    const std::string expected_witness =
        "no solution; a rational combination of the five equations equals a "
        "nonzero constant";
    std::string computed_witness = "a solution exists";
    if (degenerate.outcome.kind == SolveOutcome::Kind::Inconsistent) {
        Fraction combination = Fraction::constant(al, Rational(0));
        const std::size_t n = std::min(degenerate.outcome.witness.size(),
                                       degenerate.equations.size());
        for (std::size_t i = 0; i < n; ++i)
            combination = combination + degenerate.outcome.witness[i] *
                                            Fraction(degenerate.equations[i]);
        const bool certified =
            !combination.is_zero() && combination.num().is_constant();
        computed_witness =
            certified ? expected_witness
                      : "no solution reported, but the witness fails to certify it";
    }
    sink.add("hrr.inconsistent.(3,1)",
             R"(If $a=3$ and $r_X=1$, then the above system of linear equations has no solution.)",
             expected_witness, computed_witness);
}

void check_quadric(Sink& sink) {
    QuadricDerivation der = quadric_derive_system();
    const AlphabetPtr& al = der.params;
    auto C = [&al](long v) { return Polynomial::constant(al, Rational(v)); };
    const Polynomial a = Polynomial::var(al, "a");

    sink.add("quadric.derive.first-pairing",
             R"((r_X^4a^3-3r_X^3a^2+3r_X^2a-r_X)x-(3r_X^2a^3-6r_Xa^2+3a)y+a^3z= 2)",
             der.reference[0].str(), der.equations[0].str());
    sink.add("quadric.derive.second-pairing",
             R"((r_X^3a^4-4r_X^2a^3+6r_Xa^2-4a)x+(4a^3-2r_Xa^4)y=0)",
             der.reference[1].str(), der.equations[1].str());

    auto render_row = [](const std::vector<Fraction>& row) {
        std::vector<std::string> parts;
        for (const Fraction& f : row) parts.push_back(f.str());
        return "(" + join(parts, ", ") + ")";
    };
    const Fraction zero = Fraction::constant(al, Rational(0));
    const Fraction one = Fraction::constant(al, Rational(1));
    const Fraction minus_r = -Fraction::var(al, "r");
    const std::vector<std::vector<Fraction>> stated_rows{
        {one, zero, zero}, {zero, one, zero}, {zero, minus_r, one}};
    std::vector<std::string> expected_rows, computed_rows;
    for (const auto& row : stated_rows) expected_rows.push_back(render_row(row));
    for (const auto& row : der.multipliers) computed_rows.push_back(render_row(row));
    sink.add("quadric.span.membership", R"((a\xi_\mathcal{E} -\pi^*H_X)^4=0)",
             join(expected_rows, "; "),
             der.span_ok ? join(computed_rows, "; ")
                         : "stated system is not in the span of the derived one");

    const bool multiplier_is_r =
        der.multipliers.size() == 3 && der.multipliers[2].size() == 3 &&
        der.multipliers[2][0] == zero && der.multipliers[2][1] == minus_r &&
        der.multipliers[2][2] == one;
    const Fraction second(der.equations[1]);
    const Fraction third(der.equations[2]);
    const Fraction stated_third(der.reference[2]);
    const Fraction r_over_a = Fraction::var(al, "r") / Fraction::var(al, "a");
    const Fraction scaled_combination = third - r_over_a * second;
    const std::map<std::string, Rational> slice{{"a", 1}};
    const bool scaled_everywhere = scaled_combination == stated_third;
    const bool scaled_on_slice =
        scaled_combination.substitute(slice) == stated_third.substitute(slice);
    sink.add_noted(
        "quadric.span.third-row-multiplier",
        R"(x-(r_X^2a^4-4r_Xa^3+6a^2)y+a^4z= 0)",
        "third stated row = third derived row - (r/a) * second derived row",
        multiplier_is_r && !scaled_everywhere && scaled_on_slice
            ? "third stated row = third derived row - r * second derived row; "
              "the (r/a) multiple agrees only on the slice a = 1"
            : "multiplier row: " +
                  (der.multipliers.size() == 3 ? render_row(der.multipliers[2])
                                               : std::string("missing")),
        multiplier_is_r && !scaled_everywhere && scaled_on_slice);

    SolveOutcome closed = quadric_closed_forms();
    const Polynomial ar = a * Polynomial::var(al, "r");
    const Polynomial shifted = (ar - C(2)).pow(2);
    const Fraction closed_x(C(4) * a, shifted);
    const Fraction closed_y(C(2) * ar.pow(2) - C(4) * ar + C(4), a * shifted);
    const Fraction closed_z(
        C(2) * ar.pow(4) - C(12) * ar.pow(3) + C(32) * ar.pow(2) - C(40) * ar + C(20),
        a.pow(3) * shifted);
    sink.add("quadric.closed-form.x", R"(x=\frac{4a}{(r_Xa-2)^2})",
             closed_x.str(), closed.value("x").str());
    sink.add("quadric.closed-form.y", R"(y=\frac{2r_X^2a^2-4r_Xa+4}{a(r_Xa-2)^2})",
             closed_y.str(), closed.value("y").str());
    sink.add("quadric.closed-form.z",
             R"(z=\frac{2r_X^4a^4-12r_X^3a^3+32r_X^2a^2-40r_Xa+20}{a^3(r_Xa-2)^2})",
             closed_z.str(), closed.value("z").str());

    QuadricValues at13 = quadric_solve(Int(1), Int(3));
    sink.add("quadric.solution.(1,3)",
             R"(the covering $p$ is of degree two since $H_X ^4 =4$)",
             "(4, 10, 26)",
             "(" + to_string(at13.x) + ", " + to_string(at13.y) + ", " +
                 to_string(at13.z) + ")");

    std::string degenerate = "no error";
    try {
        quadric_solve(Int(2), Int(1));
    } catch (const Error& err) {
        degenerate = err.kind() == Error::Kind::SingularSystem
                         ? "SingularSystem error"
                         : std::string("unexpected error: ") + err.what();
    }
    sink.add("quadric.singular.(2,1)",
             R"(we have $r_X=1$ or $3$, and $r_Xa \geq 3$)",
             "SingularSystem error", degenerate);

    // integer window where x = 4a/(a-2)^2 can be a positive integer, r = 1:
    // (a-2)^2 - 4a <= 0 over integers iff (a-2)^2 - 4a - 1 < 0
    const Polynomial window_gate = (a - C(2)).pow(2) - C(4) * a - C(1);
    std::vector<std::string> window;
    for (const Int& n : integer_points_under_quadratic(
             window_gate, "a", {LinearBound{Rational(1), Rational(-3)}}))
        window.push_back(to_string(n));
    sink.add("quadric.window.r1", R"(\frac{4a}{(a-2)^2} \in \mathbf{Z})",
             "{3, 4, 5, 6, 7}", "{" + join(window, ", ") + "}");

    std::vector<CaseRecord> records = quadric_classify();
    std::vector<std::string> x_integral, y_rejections;
    for (const CaseRecord& rec : records) {
        if (rec.parameters.at("r") != 1) continue;
        const std::string av = to_string(rec.parameters.at("a"));
        if (rec.verdict == CaseRecord::Verdict::Rejected &&
            rec.reason.rfind("y = ", 0) == 0) {
            x_integral.push_back(av);
            y_rejections.push_back("a = " + av + ": " + rec.reason);
        }
    }
    sink.add("quadric.prefilter.r1", R"(Thus $a = 3$ or $4$.)", "a = 3, 4",
             "a = " + join(x_integral, ", "));
    sink.add("quadric.rejection.r1",
             R"(we have $y = 5/4$ or $10/3$ respectively, which is impossible since $y= c_2(\mathcal{E})\cdot H_X^2 \in \mathbf{Z}$)",
             "a = 3: y = 10/3 is not an integer; a = 4: y = 5/4 is not an integer",
             join(y_rejections, "; "));

    const bool order_reversed = quadric_solve(Int(3), Int(1)).y == rational(10, 3) &&
                                quadric_solve(Int(4), Int(1)).y == rational(5, 4);
    sink.add_noted(
        "quadric.rejection.order",
        R"(In each case, however, we have $y = 5/4$ or $10/3$ respectively)",
        "y = 5/4 at a = 3 and y = 10/3 at a = 4, reading the list in order",
        order_reversed
            ? "y = 10/3 at a = 3 and y = 5/4 at a = 4; the stated pair lists the "
              "same two values against the opposite cases"
            : "recomputed values changed",
        order_reversed);

    std::size_t admissible = 0;
    std::vector<std::string> admitted;
    for (const CaseRecord& rec : records) {
        if (rec.verdict != CaseRecord::Verdict::Admissible) continue;
        ++admissible;
        admitted.push_back("(a, r) = (" + to_string(rec.parameters.at("a")) +
                           ", " + to_string(rec.parameters.at("r")) + ")");
    }
    sink.add("quadric.classification",
             R"(Then, since $x=\frac{4a}{(3a-2)^2} \in \mathbf{Z}$, we have $a=1$.)",
             "1 admissible pair: (a, r) = (1, 3)",
             std::to_string(admissible) + " admissible pair" +
                 (admissible == 1 ? "" : "s") + ": " + join(admitted, ", "));
}

void check_schubert(Sink& sink) {
    Context ctx = standard_context();
    const AlphabetPtr& al = ctx.params;
    auto C = [&al](long v) { return Polynomial::constant(al, Rational(v)); };
    const Polynomial m = Polynomial::var(al, "m");
    const Polynomial c = Polynomial::var(al, "c");
    const Polynomial d = Polynomial::var(al, "d");

    const SchubertElement sigma1 = SchubertElement::cycle(al, Partition{1, 0});
    const SchubertElement sigma11 = SchubertElement::cycle(al, Partition{1, 1});

    sink.add("schubert.powers",
             R"(Now it is easy to check that $V$ itself is a smooth quintic del Pezzo $4$-fold $V_5\subset \Gr(2,5)$)",
             "5", integrate_pairing(sigma1.pow(6)).str());

    DegreeForms forms = quintic_degree_forms(al);
    const Polynomial derived_x = C(2) * m * c + C(3) * m * d;
    const Polynomial derived_y = C(5) * m * c + C(7) * m * d;
    const Polynomial derived_z = C(13) * m * c + C(16) * m * d;
    sink.add("schubert.degree-forms.derived",
             R"(the class $[V]$ is written as $c\sigma_{1,1} + d\sigma _{2,0}$)",
             "x = " + derived_x.str() + "; y = " + derived_y.str() +
                 "; z = " + derived_z.str(),
             "x = " + forms.x.str() + "; y = " + forms.y.str() +
                 "; z = " + forms.z.str());

    const Polynomial printed_x = C(3) * m * c + C(2) * m * d;
    const Polynomial printed_y = C(7) * m * c + C(5) * m * d;
    const Polynomial printed_z = C(17) * m * c + C(12) * m * d;
    const std::map<std::string, Polynomial> swap_cd{{"c", d}, {"d", c}};
    const bool xy_direct = forms.x == printed_x || forms.y == printed_y;
    const bool xy_swapped = forms.x.substitute(swap_cd) == printed_x &&
                            forms.y.substitute(swap_cd) == printed_y;
    sink.add_noted(
        "schubert.degree-forms.printed-xy",
        R"(x= H_X^4 = m(3c+2d), y= c_2(\mathcal{E})\cdot H_X^2 = m(7c+5d))",
        "x = " + printed_x.str() + "; y = " + printed_y.str(),
        "x = " + forms.x.str() + "; y = " + forms.y.str() +
            (xy_swapped ? "; the stated rows are the derived rows with c and d "
                          "exchanged"
                        : "; no relabeling reconciles the rows"),
        xy_swapped && !xy_direct);

    const std::map<std::string, Rational> equal_cd{{"c", 1}, {"d", 1}};
    const bool z_direct = forms.z == printed_z;
    const bool z_swapped = forms.z.substitute(swap_cd) == printed_z;
    const bool z_totals =
        forms.z.substitute(equal_cd) == printed_z.substitute(equal_cd);
    sink.add_noted(
        "schubert.degree-forms.printed-z",
        R"(z= c_2(\mathcal{E})^2= m(17c+12d))", "z = " + printed_z.str(),
        "z = " + forms.z.str() +
            (!z_direct && !z_swapped && z_totals
                 ? "; neither labeling matches the stated row, while the totals "
                   "at c = d agree"
                 : "; relation to the stated row changed"),
        !z_direct && !z_swapped && z_totals);

    sink.add("schubert.degree-totals",
             R"(since $c=1$ and $d=1$, the subvariety $V$ is rationally equivalent to the codimension two linear section $V_5\subset \Gr(2,5)$)",
             "x = " + (C(5) * m).str() + "; y = " + (C(12) * m).str() +
                 "; z = " + (C(29) * m).str(),
             "x = " + forms.x.substitute(equal_cd).str() +
                 "; y = " + forms.y.substitute(equal_cd).str() +
                 "; z = " + forms.z.substitute(equal_cd).str());

    const std::map<std::string, Rational> unit{{"m", 1}, {"c", 1}, {"d", 1}};
    sink.add("schubert.values.(1,1,1)",
             R"(we have $m=1$, $c=1$ and $d=1$)", "(5, 12, 29)",
             "(" + to_string(forms.x.evaluate(unit)) + ", " +
                 to_string(forms.y.evaluate(unit)) + ", " +
                 to_string(forms.z.evaluate(unit)) + ")");

    std::vector<std::string> solutions;
    for (const McdTriple& sol : solve_mcd(Int(5), Int(12), Int(29)))
        solutions.push_back("(m = " + to_string(sol.m) + ", c = " +
                            to_string(sol.c) + ", d = " + to_string(sol.d) + ")");
    sink.add("schubert.solve-mcd",
             R"(Since $m=1$, the map $j$ is birational, and hence it is the normalization map of $V$.)",
             "(m = 1, c = 1, d = 1)", join(solutions, "; "));

    HrrCase family = hrr_case_solve(Int(1), Int(3));
    std::string computed_cross = "no one-parameter family";
    if (family.outcome.kind == SolveOutcome::Kind::AffineFamily) {
        const std::map<std::string, Rational> at5{{"x", 5}};
        computed_cross =
            "characteristic route (y, z) = (" +
            to_string(family.outcome.value("y").evaluate(at5)) + ", " +
            to_string(family.outcome.value("z").evaluate(at5)) +
            "); cycle route (y, z) = (" + to_string(forms.y.evaluate(unit)) +
            ", " + to_string(forms.z.evaluate(unit)) + "); (u, v) = (" +
            to_string(family.outcome.value("u").evaluate(at5)) + ", " +
            to_string(family.outcome.value("v").evaluate(at5)) + ")";
    }
    sink.add("schubert.cross-route",
             R"($ y= \frac{5x-1}{2}$ and $ z= \frac{13x-7}{2}$, and hence we have $m=1$, $c=1$ and $d=1$)",
             "characteristic route (y, z) = (12, 29); cycle route (y, z) = "
             "(12, 29); (u, v) = (22, 53)",
             computed_cross);

    const RankTwo<SchubertElement> tautological_dual{sigma1, sigma11};
    const RankTwo<SchubertElement> twisted = twist(tautological_dual, sigma1);
    sink.add("schubert.bundle-chern",
             R"(c(\mathcal{E}) =1+ 3H_X +j^*(\sigma _{1,1})+2H_X^2)",
             "c1 = " + (sigma1 * Rational(3)).str() +
                 "; c2 = " + (sigma11 + sigma1.pow(2) * Rational(2)).str(),
             "c1 = " + twisted.c1.str() + "; c2 = " + twisted.c2.str());
}

void check_scroll(Sink& sink) {
    IdentityReport rep = scroll_expand_ei();
    const Polynomial expanded = integrate(rep.expanded);
    const Polynomial factored = integrate(rep.stated[0]);
    const Polynomial intermediate = integrate(rep.stated[1]);
    sink.add("scroll-inequality.identity",
             R"((r_Xa-2)\left(d_i\left(r_Xr_Ya^2-(3r_X+2r_Y)a+2\right) +a\left(r_Xa-2\right) \right))",
             factored.str(), expanded.str());
    sink.add("scroll-inequality.intermediate",
             R"((r_Xa-2)\left((d_ir_Xr_Y+r_X)a^2-(3d_ir_X+2d_ir_Y+2)a+2d_i \right))",
             intermediate.str(), expanded.str());

    const Ring& ring = rep.expanded.ring();
    const AlphabetPtr& al = ring->params();
    const Polynomial degree =
        Polynomial::var(al, "d") * Polynomial::var(al, "ry") -
        Polynomial::constant(al, Rational(2));
    sink.add("scroll-inequality.normal-bundle-cube",
             R"(\xi_{\mathcal{N}_{B_i/Y}}^3 =d_i r_Y-2)",
             GradedClass::monomial(ring, MonomialExpr{{"zeta", 2}, {"h", 1}},
                                   degree)
                 .str(),
             GradedClass::generator(ring, "zeta", 3).str());

    const std::vector<std::map<std::string, Rational>> instances{
        {{"a", 1}, {"r", 3}, {"ry", 1}, {"d", 1}},
        {{"a", 2}, {"r", 1}, {"ry", 2}, {"d", 7}},
        {{"a", 1}, {"r", 2}, {"ry", 5}, {"d", 3}}};
    std::vector<std::string> values;
    for (const auto& point : instances)
        values.push_back(expanded.substitute(point).str());
    sink.add("scroll-inequality.instance",
             R"((a\xi_{\mathcal{N}_{B_i/Y}}+(a-d_i)H_{B_i}|_{E_i})\cdot((ar_X-2)\xi_{\mathcal{N}_{B_i/Y}}+(ar_X-d_ir_X-2)H_{B_i}|_{E_i})^2)",
             "-5; 0; 0", join(values, "; "));
}

using GroupFn = void (*)(Sink&);

const std::vector<std::pair<std::string, GroupFn>>& group_table() {
    static const std::vector<std::pair<std::string, GroupFn>> table{
        {"betti", &check_betti},
        {"bound", &check_bound},
        {"cases", &check_cases},
        {"grothendieck", &check_grothendieck},
        {"hrr", &check_hrr},
        {"quadric", &check_quadric},
        {"schubert", &check_schubert},
        {"scroll-inequality", &check_scroll},
    };
    return table;
}

} // namespace

const std::vector<std::string>& check_groups() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : group_table()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::vector<std::string>& selection) {
    std::set<std::string> wanted;
    for (const std::string& token : selection) {
        if (token == "all") {
            for (const auto& [name, fn] : group_table()) wanted.insert(name);
            continue;
        }
        const auto& table = group_table();
        const bool known =
            std::any_of(table.begin(), table.end(),
                        [&](const auto& entry) { return entry.first == token; });
        if (!known)
            throw Error(Error::Kind::BadArgument,
                        "unknown check group: " + token, token);
        wanted.insert(token);
    }

    SuiteReport report;
    report.version = kVersion;
    report.parameters = standard_context().params->names();
    Sink sink(report.checks);
    for (const auto& [name, fn] : group_table()) {
        if (!wanted.count(name)) continue;
        try {
            fn(sink);
        } catch (const std::exception& ex) {
            sink.add(name + ".abort", "", "group runs to completion",
                     std::string("uncaught error: ") + ex.what());
        }
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& lhs, const CheckResult& rhs) {
                  return lhs.check_id < rhs.check_id;
              });
    for (const CheckResult& check : report.checks) {
        if (check.status == "pass")
            ++report.passed;
        else if (check.status == "discrepancy-noted")
            ++report.noted;
        else
            ++report.failed;
    }
    return report;
}

std::string render_text(const SuiteReport& report) {
    const std::array<std::string, 5> head{"check", "status", "expected",
                                          "computed", "anchor"};
    std::vector<std::array<std::string, 5>> rows;
    for (const CheckResult& check : report.checks)
        rows.push_back({check.check_id, check.status, check.expected,
                        check.computed, check.anchor});

    std::array<std::size_t, 5> width{};
    for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());

    std::ostringstream os;
    os << "verification report " << report.version << "; parameters: "
       << join(report.parameters, ", ") << "\n\n";
    auto line = [&](const std::array<std::string, 5>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size())
                os << std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << "\n";
    };
    line(head);
    std::size_t total = 8;
    for (const std::size_t w : width) total += w;
    os << std::string(total, '-') << "\n";
    for (const auto& row : rows) line(row);
    os << "\n"
       << report.passed << " pass, " << report.failed << " fail, "
       << report.noted << " discrepancy-noted\n";
    return os.str();
}

std::string render_json(const SuiteReport& report) {
    nlohmann::ordered_json doc;
    doc["version"] = report.version;
    doc["parameters"] = report.parameters;
    auto checks = nlohmann::ordered_json::array();
    for (const CheckResult& check : report.checks) {
        nlohmann::ordered_json row;
        row["id"] = check.check_id;
        row["anchor"] = check.anchor;
        row["status"] = check.status;
        row["expected"] = check.expected;
        row["computed"] = check.computed;
        checks.push_back(std::move(row));
    }
    doc["checks"] = std::move(checks);
    nlohmann::ordered_json summary;
    summary["pass"] = report.passed;
    summary["fail"] = report.failed;
    summary["noted"] = report.noted;
    doc["summary"] = std::move(summary);
    return doc.dump(2) + "\n";
}

} // namespace chowcheck
