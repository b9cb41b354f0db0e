#ifndef CHOWCHECK_CHARCLASS_HPP
#define CHOWCHECK_CHARCLASS_HPP

#include "chowcheck/ring.hpp"

namespace chowcheck {

/// Exponential of a degree-1 class, truncated at the ring's top degree.  This
/// is the Chern character of the line class with first Chern class d.
GradedClass chern_character_line(const GradedClass& d);

/// Todd series d / (1 - exp(-d)) of a degree-1 class, truncated at the ring's
/// top degree.  Coefficients are carried through degree 6, which covers every
/// ring this engine builds.
GradedClass todd_line(const GradedClass& d);

/// Todd class of a fourfold with Chern roots summarized by c1 (degree 1) and
/// c2 (degree 2), whose structure sheaf has Euler characteristic 1:
/// 1 + c1/2 + (c1^2 + c2)/12 + c1*c2/24 + point.  The degree-4 piece enters
/// every downstream product only through its integral, which the unit Euler
/// characteristic pins to 1; `point` must be a degree-4 class of integral 1.
GradedClass todd_fourfold_chi_one(const GradedClass& c1, const GradedClass& c2,
                                  const GradedClass& point);

/// Integral of exp(first_chern) * todd: by Hirzebruch-Riemann-Roch this is the
/// Euler characteristic of the line class with that first Chern class.  With a
/// symbolic parameter in first_chern the result is a polynomial in it, ready to
/// be split by powers.
Polynomial euler_characteristic(const GradedClass& first_chern,
                                const GradedClass& todd);

/// First and second Chern classes of a rank-2 bundle, over any class type with
/// ring operations.
template <class C>
struct RankTwo {
    C c1;
    C c2;
};

/// Chern classes of the tensor product with a line class of first Chern class
/// `line`: c1 picks up twice the line, c2 picks up c1*line + line^2.
template <class C>
RankTwo<C> twist(const RankTwo<C>& e, const C& line) {
    return RankTwo<C>{e.c1 + line + line, e.c2 + e.c1 * line + line * line};
}

/// Discriminant c1^2 - 4*c2; vanishes exactly when the bundle is a twist of
/// its determinant square root.
template <class C>
C discriminant(const RankTwo<C>& e) {
    return e.c1 * e.c1 - (e.c2 + e.c2 + e.c2 + e.c2);
}

} // namespace chowcheck

#endif
