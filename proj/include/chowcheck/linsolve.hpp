#ifndef CHOWCHECK_LINSOLVE_HPP
#define CHOWCHECK_LINSOLVE_HPP

#include <vector>

#include "chowcheck/fraction.hpp"

namespace chowcheck {

/// Result of exact elimination.  Bound unknowns map to rational functions of the
/// parameters and the free unknowns; for Unique the free list is empty.  For
/// Inconsistent, `witness` holds row multipliers combining the original
/// equations into 0 = nonzero.
struct SolveOutcome {
    enum class Kind { Unique, AffineFamily, Inconsistent };

    Kind kind = Kind::Unique;
    std::vector<std::string> unknowns;
    std::vector<std::string> free_unknowns;
    std::map<std::string, Fraction> assignment;
    std::vector<Fraction> witness;

    const Fraction& value(const std::string& unknown) const;
};

/// Linear system over the parameter field: equations are polynomials required
/// to vanish, linear in the designated unknowns with coefficients in the
/// remaining parameters.  Elimination is exact; no tolerances exist anywhere.
class LinearSystem {
public:
    LinearSystem(AlphabetPtr alphabet, std::vector<std::string> unknowns);

    /// Adds the equation expr = 0; throws NonlinearEntry if expr has a term of
    /// combined degree >= 2 in the unknowns.
    void add_equation(const Polynomial& expr);

    std::size_t equation_count() const { return rows_.size(); }
    const std::vector<std::string>& unknowns() const { return unknowns_; }

    SolveOutcome solve() const;

    /// Substitutes an outcome back into every equation; all residuals must be
    /// exactly zero for a consistent solve (free unknowns stay symbolic).
    std::vector<Fraction> residuals(const SolveOutcome& outcome) const;

private:
    struct Row {
        std::vector<Polynomial> coeff; // one per unknown
        Polynomial rhs;                // equation reads sum coeff*u = rhs
    };

    AlphabetPtr alphabet_;
    std::vector<std::string> unknowns_;
    std::vector<Row> rows_;
};

} // namespace chowcheck

#endif
