#ifndef CHOWCHECK_CONTEXT_HPP
#define CHOWCHECK_CONTEXT_HPP

#include "chowcheck/projbundle.hpp"

namespace chowcheck {

/// Shared symbolic setup used by every verification: the parameter alphabet,
/// the abstract ring of the polarized fourfold, and the projectivized rank-2
/// bundle over it.
///
/// Fourfold ring generators: H (hyperplane, degree 1), e and t (degree 2,
/// standing for the second Chern classes of the bundle and of the tangent
/// sheaf), pt (point, degree 4).  Integrals of the top-degree monomials are
/// the parameters x = H^4, y = H^2 e, z = e^2, u = H^2 t, v = e t, with
/// pt = 1; the monomial t^2 deliberately has no entry, so any computation
/// that produces it fails loudly instead of silently inventing a value.
///
/// The bundle relation is xi^2 = r*H*xi - e, i.e. c1 = r*H and c2 = e.
struct Context {
    AlphabetPtr params;
    Ring fourfold;
    ProjBundle bundle;

    /// Parameter as a polynomial.
    Polynomial p(const std::string& name) const {
        return Polynomial::var(params, name);
    }
    /// Parameter as a degree-0 class of the fourfold ring.
    GradedClass scalar(const std::string& name) const {
        return GradedClass::scalar(fourfold, p(name));
    }

    GradedClass H() const { return GradedClass::generator(fourfold, "H"); }
    GradedClass e() const { return GradedClass::generator(fourfold, "e"); }
    GradedClass t() const { return GradedClass::generator(fourfold, "t"); }
    GradedClass pt() const { return GradedClass::generator(fourfold, "pt"); }
    GradedClass xi() const { return bundle.xi(); }

    /// Hyperplane class of the model embedding, a*xi - H upstairs.
    GradedClass scroll_class() const;
    /// Todd class of the fourfold (index r, c2 = t, unit Euler characteristic).
    GradedClass todd_fourfold() const;
    /// Todd class of the total space of the bundle.
    GradedClass todd_bundle() const;
};

Context standard_context();

} // namespace chowcheck

#endif
