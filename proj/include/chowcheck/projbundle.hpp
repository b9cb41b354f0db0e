#ifndef CHOWCHECK_PROJBUNDLE_HPP
#define CHOWCHECK_PROJBUNDLE_HPP

#include "chowcheck/ring.hpp"

namespace chowcheck {

/// Projectivization of a rank-2 bundle with Chern classes c1, c2 over a base
/// ring.  The total ring adds one degree-1 generator (declared first, so its
/// square outranks every mixed monomial) subject to xi^2 = c1*xi - c2, kills
/// the base monomials one degree above the base top, and integrates top-degree
/// classes through xi against the base table.
class ProjBundle {
public:
    const Ring& base() const { return base_; }
    const Ring& total() const { return total_; }
    const std::string& fiber_name() const { return fiber_; }

    /// The relative hyperplane class.
    GradedClass xi() const;
    /// Base class moved up along the bundle projection, matching generators
    /// by name.
    GradedClass pullback(const GradedClass& cls) const;
    /// Fiber integration: keeps the xi-linear part and drops pulled-back
    /// classes, lowering degree by one.
    GradedClass pushforward(const GradedClass& cls) const;
    /// First Chern class of the relative tangent sheaf, 2*xi - c1.
    GradedClass relative_tangent_c1() const;

private:
    ProjBundle(Ring base, Ring total, std::string fiber, GradedClass c1_base)
        : base_(std::move(base)), total_(std::move(total)),
          fiber_(std::move(fiber)), c1_base_(std::move(c1_base)) {}
    friend ProjBundle projectivize(const std::string&, Ring, const std::string&,
                                   const GradedClass&, const GradedClass&);

    Ring base_;
    Ring total_;
    std::string fiber_;
    GradedClass c1_base_;
};

/// Builds the total ring of P(E) for rank-2 E with the given Chern classes
/// (c1 of degree 1, c2 of degree 2, both living in the base ring).
ProjBundle projectivize(const std::string& name, Ring base,
                        const std::string& fiber, const GradedClass& c1,
                        const GradedClass& c2);

} // namespace chowcheck

#endif
