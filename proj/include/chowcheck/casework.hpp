#ifndef CHOWCHECK_CASEWORK_HPP
#define CHOWCHECK_CASEWORK_HPP

#include <string>
#include <vector>

#include "chowcheck/context.hpp"
#include "chowcheck/linsolve.hpp"

namespace chowcheck {

/// One parameter assignment examined during a case analysis: the values tried,
/// the quantities derived from them, and the verdict.  A rejected record names
/// the exact violated condition in `reason`; an admissible record produced by
/// a grouped enumeration carries its group label.
struct CaseRecord {
    enum class Verdict { Admissible, Rejected, Inconsistent };

    std::map<std::string, Rational> parameters;
    std::map<std::string, Rational> derived;
    Verdict verdict = Verdict::Admissible;
    std::string reason;
    std::string group;
};

/// Expansion of a closed-form identity inside a graded ring: the expanded
/// class, the stated forms it must equal, and whether they all agree.
struct IdentityReport {
    GradedClass expanded;
    std::vector<GradedClass> stated;
    bool matches = false;
};

/// Linear system in (x, y, z) obtained by pairing powers of the model
/// hyperplane class s = a*xi - H against the ring generators, plus a span
/// certificate expressing a recorded reference system through the derived
/// one.  Every equation is stored as a polynomial required to vanish.
struct QuadricDerivation {
    AlphabetPtr params;
    /// Integrals of s^3 xi^2 - 2, s^4 H, and s^4 xi, in that order.
    std::vector<Polynomial> equations;
    /// The recorded reference system, same order and convention.
    std::vector<Polynomial> reference;
    /// multipliers[i][j] is the coefficient of equations[j] in reference[i].
    std::vector<std::vector<Fraction>> multipliers;
    bool span_ok = false;
};

/// Degree parameters solved at one (a, r).
struct QuadricValues {
    Rational x, y, z;
    bool operator==(const QuadricValues&) const = default;
};

/// Derives the three pairing equations on the projectivized bundle and
/// certifies that the recorded reference system lies in their exact rational
/// span, with the combination multipliers solved rather than assumed.
QuadricDerivation quadric_derive_system();

/// Solves the derived system symbolically over (a, r); the outcome is Unique
/// and assigns x, y, z canonical rational functions of a and r.
SolveOutcome quadric_closed_forms();

/// Solves the derived system at integer (a, r).  Throws SingularSystem when
/// the system degenerates, which happens exactly at ar = 2.
QuadricValues quadric_solve(const Int& a, const Int& r);

/// Enumerates r in {1, 3} and integers a with ar >= 3, keeping only a with
/// x = 4a/(ar-2)^2 >= 1 (a closed-form bound, so the grid is finite), then
/// tests integrality of x, y, z in turn.  Returns every examined record;
/// exactly one is admissible.
std::vector<CaseRecord> quadric_classify();

/// Expands (2 xi - r P)^2 * P in a relation-free rank-two ring, substitutes
/// P -> a*xi, and compares against a(ar-2)^2 xi^3.
IdentityReport bound_expand();

/// Expands (a zeta + (a-d) h) * ((ar-2) zeta + (ar-dr-2) h)^2 on the surface
/// ring with zeta^3 -> (d*ry - 2) zeta^2 h and h^2 -> 0, and compares against
/// (ra-2)(d(r*ry*a^2 - (3r+2ry)a + 2) + a(ra-2)) together with its expanded
/// intermediate form, both as multiples of zeta^2 h.
IdentityReport scroll_expand_ei();

/// Enumerates (r, ry, a) with r in {1, 3}, ry in {1..5}, integer a, ar >= 3,
/// under the strict sign condition r*ry*a^2 - (3r+2ry)a + 2 < 0.  Each
/// admissible triple is labeled with its group in the three-way split of the
/// solution set.
std::vector<CaseRecord> prop_ineq_cases();

/// Euler characteristic of m copies of the model hyperplane class on the
/// bundle, as a polynomial in m whose coefficients are linear in the
/// integration parameters x, y, z, u, v.
Polynomial hrr_chi(const Context& ctx);

/// Outcome of matching the bundle Euler characteristic against the binomial
/// series C(m+4, 4) at one (a, r): one linear condition per power of m.
struct HrrCase {
    Polynomial chi;                    ///< instantiated at (a, r)
    std::vector<Polynomial> equations; ///< coefficient conditions, m^5 down to m
    SolveOutcome outcome;
    std::vector<Fraction> residuals;   ///< empty when the system is inconsistent
};

HrrCase hrr_case_solve(const Int& a, const Int& r);

} // namespace chowcheck

#endif
