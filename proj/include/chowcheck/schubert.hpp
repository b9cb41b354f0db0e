#ifndef CHOWCHECK_SCHUBERT_HPP
#define CHOWCHECK_SCHUBERT_HPP

#include <compare>
#include <vector>

#include "chowcheck/ring.hpp"

namespace chowcheck {

/// Two-row partition inside the 2x3 box, indexing a Schubert cycle on the
/// Grassmannian of lines in P^4.  Codimension of the cycle is a1 + a2.
struct Partition {
    int a1 = 0;
    int a2 = 0;

    int codim() const { return a1 + a2; }
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// True iff 3 >= a1 >= a2 >= 0.
bool in_box(const Partition& p);

/// The ten box partitions, by codimension then lexicographically.
const std::vector<Partition>& box_partitions();

/// Box complement (3 - a2, 3 - a1), the dual partner under the top pairing.
Partition complement(const Partition& p);

/// Formal combination of Schubert cycles with polynomial coefficients, the
/// working representation of cycle classes on the Grassmannian.
class SchubertElement {
public:
    using TermMap = std::map<Partition, Polynomial>;

    static SchubertElement zero(AlphabetPtr params);
    static SchubertElement one(AlphabetPtr params);
    static SchubertElement cycle(AlphabetPtr params, const Partition& p);

    const AlphabetPtr& params() const { return params_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of a cycle, zero when absent.
    Polynomial coefficient(const Partition& p) const;

    SchubertElement operator-() const;
    SchubertElement operator+(const SchubertElement& rhs) const;
    SchubertElement operator-(const SchubertElement& rhs) const;
    SchubertElement operator*(const SchubertElement& rhs) const;
    SchubertElement operator*(const Polynomial& s) const;
    SchubertElement operator*(const Rational& s) const;
    SchubertElement pow(int e) const;

    bool operator==(const SchubertElement& rhs) const;
    bool operator!=(const SchubertElement& rhs) const { return !(*this == rhs); }

    /// Largest codimension present; -1 for zero.
    int codim() const;
    bool is_homogeneous() const;

    std::string str() const;

private:
    explicit SchubertElement(AlphabetPtr params) : params_(std::move(params)) {}
    void add_term(const Partition& p, const Polynomial& coeff);
    static void require_same_params(const SchubertElement& a,
                                    const SchubertElement& b);

    AlphabetPtr params_;
    TermMap terms_;
};

SchubertElement operator*(const Polynomial& s, const SchubertElement& c);
SchubertElement operator*(const Rational& s, const SchubertElement& c);

/// Product with the special cycle of a single row of p boxes: adds p boxes,
/// no two in one column, staying inside the box.  Requires 1 <= p <= 3.
SchubertElement pieri(const SchubertElement& s, int p);

/// Coefficient of the point cycle (3,3).  The input must be homogeneous of
/// codimension 6 (zero counts); anything else is a degree error.
Polynomial integrate_pairing(const SchubertElement& s);

/// The three degree forms of a quintic linear section: a surface class is
/// written c*s[1,1] + d*s[2,0] and paired against powers of the hyperplane
/// and of c2 of the twisted subbundle, all scaled by a multiplier m.
struct DegreeForms {
    Polynomial x;
    Polynomial y;
    Polynomial z;
};

/// Computes the forms x = m*(2c+3d), y = m*(5c+7d), z = m*(13c+16d) from
/// scratch: c(E) = 1 + 3*s1 + (s[1,1] + 2*s1^2) and the pairing table.
/// The alphabet must contain m, c, d.
DegreeForms quintic_degree_forms(const AlphabetPtr& params);

/// One positive solution of the degree-form equations.
struct McdTriple {
    Int m;
    Int c;
    Int d;
    friend bool operator==(const McdTriple&, const McdTriple&) = default;
};

/// All positive integer triples (m,c,d) whose degree forms hit (x,y,z)
/// exactly, in increasing m.  Complete: for each admissible m the remaining
/// 2x2 system is unimodular, so (c,d) is forced and checked.  Empty result
/// means no solution.
std::vector<McdTriple> solve_mcd(const Int& x, const Int& y, const Int& z);

/// The Grassmannian ring in the hyperplane cycle s1 and the codim-2 cycle e
/// (the second Chern class of the dual subbundle), an independent
/// presentation used to cross-check the cycle arithmetic.
Ring grassmannian_ring(const AlphabetPtr& params);

/// Transports a cycle combination into the two-generator presentation.
GradedClass to_grassmannian(const SchubertElement& s, Ring gr);

} // namespace chowcheck

#endif
