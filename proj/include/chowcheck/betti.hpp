#ifndef CHOWCHECK_BETTI_HPP
#define CHOWCHECK_BETTI_HPP

#include <vector>

#include "chowcheck/linsolve.hpp"
#include "chowcheck/polynomial.hpp"

namespace chowcheck {

/// Betti numbers b_0..b_n of a compact manifold of real dimension n.  Entries
/// are polynomials so a sequence can carry named unknowns through the
/// additive bundle and blow-up formulas; everywhere outside 0..n reads zero.
class BettiSequence {
public:
    BettiSequence(AlphabetPtr params, int real_dim);

    static BettiSequence point(AlphabetPtr params);
    /// Complex projective space of the given complex dimension.
    static BettiSequence projective_space(AlphabetPtr params, int cplx_dim);

    const AlphabetPtr& params() const { return params_; }
    int real_dim() const { return real_dim_; }
    /// b_k, zero for k outside 0..real_dim.
    Polynomial at(int k) const;
    void set(int k, const Polynomial& value);

    /// b_k == b_{n-k} as polynomials, for every k.
    bool satisfies_duality() const;

    bool operator==(const BettiSequence& rhs) const;
    bool operator!=(const BettiSequence& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    AlphabetPtr params_;
    int real_dim_;
    std::vector<Polynomial> entries_;
};

/// Betti numbers of a projectivized bundle with the given complex fiber
/// dimension: b_k(total) = sum of b_{k-2j}(base) over j = 0..fiber_dim.
BettiSequence projbundle_betti(const BettiSequence& base, int fiber_dim);

/// Smooth center to blow up: its Betti numbers, its complex codimension in
/// the ambient manifold, and how many disjoint copies of it there are (a
/// polynomial, so the count may stay symbolic).
struct BlowupCenter {
    BettiSequence betti;
    int codim = 2;
    Polynomial multiplicity;
};

/// Blow-up formula: b_k(ambient) + for each center, multiplicity times
/// b_{k-2j}(center) summed over j = 1..codim-1.  Centers must have codim >= 2
/// and real dimension ambient_dim - 2*codim; a curve in a fourfold, for
/// instance, is forced to codimension 3.
BettiSequence blowup_betti(const BettiSequence& base,
                           const std::vector<BlowupCenter>& centers);

/// The double computation of the Betti numbers of the blown-up bundle: once
/// as a blow-up of the bundle over X along the jump loci, once as a bundle
/// over the blow-up of Y along the jumping curves.  Equating the two at
/// k = 3, 4, 5 pins b1 of the curves to 0, b3(X) to b3(Y), and b4(X) to
/// b4(Y) + m; every other k is then an identity, witnessed by the residuals.
struct ScrollDerivation {
    AlphabetPtr params;              ///< local unknowns m, bb1, bx3, bx4, by3, by4
    BettiSequence via_blowup;        ///< route through the bundle over X
    BettiSequence via_bundle;        ///< route through the blow-up of Y
    SolveOutcome solution;           ///< relations forced by k = 3, 4, 5
    std::vector<Fraction> residuals; ///< route difference at k = 0..10 under solution
};

ScrollDerivation derive_scroll_relations();

} // namespace chowcheck

#endif
