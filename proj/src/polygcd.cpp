#include "chowcheck/polygcd.hpp"

#include <optional>

namespace chowcheck {
namespace {

// Highest-index parameter appearing in either polynomial; recursing on it keeps
// coefficient polynomials confined to lower-index parameters.
std::optional<std::string> main_variable(const Polynomial& a, const Polynomial& b) {
    const auto& names = a.alphabet()->names();
    for (std::size_t i = names.size(); i-- > 0;) {
        if (a.degree_in(names[i]) > 0 || b.degree_in(names[i]) > 0) return names[i];
    }
    return std::nullopt;
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, const std::string& v) {
    std::vector<Polynomial> cs;
    for (int k = 0; k <= p.degree_in(v); ++k) cs.push_back(p.coeff_of(v, k));
    return cs;
}

Polynomial coefficient_gcd(const std::vector<Polynomial>& cs) {
    Polynomial g = Polynomial::zero(cs.front().alphabet());
    for (const auto& c : cs) g = poly_gcd(g, c);
    return g;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
    auto q = p.try_divide(d);
    if (!q)
        throw Error(Error::Kind::BadArgument, "inexact division in gcd computation");
    return *q;
}

// Pseudo-remainder of a by b with respect to v: lc(b)^k * a reduced below deg_v(b).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, const std::string& v) {
    int db = b.degree_in(v);
    Polynomial lcb = b.coeff_of(v, db);
    const AlphabetPtr& alpha = a.alphabet();
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        Polynomial lca = a.coeff_of(v, da);
        a = a * lcb - lca * Polynomial::var(alpha, v, da - db) * b;
    }
    return a;
}

Polynomial primitive_part(const Polynomial& p, const std::string& v) {
    if (p.is_zero()) return p;
    Polynomial cont = coefficient_gcd(coefficients_in(p, v));
    return exact_divide(p, cont);
}

} // namespace

Polynomial poly_normalize(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial r = p / p.content();
    if (r.leading_coefficient() < 0) r = -r;
    return r;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return poly_normalize(b);
    if (b.is_zero()) return poly_normalize(a);
    auto v = main_variable(a, b);
    if (!v) return Polynomial::constant(a.alphabet(), 1); // both nonzero constants
    if (a.degree_in(*v) == 0 || b.degree_in(*v) == 0) {
        // One side is "content only" with respect to v.
        Polynomial ca = coefficient_gcd(coefficients_in(a, *v));
        Polynomial cb = coefficient_gcd(coefficients_in(b, *v));
        return poly_gcd(ca, cb);
    }
    Polynomial ca = coefficient_gcd(coefficients_in(a, *v));
    Polynomial cb = coefficient_gcd(coefficients_in(b, *v));
    Polynomial c = poly_gcd(ca, cb);
    Polynomial pa = exact_divide(a, ca);
    Polynomial pb = exact_divide(b, cb);
    if (pa.degree_in(*v) < pb.degree_in(*v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Polynomial r = pseudo_remainder(pa, pb, *v);
        pa = pb;
        pb = r.is_zero() ? r : primitive_part(r, *v);
    }
    return poly_normalize(c * primitive_part(pa, *v));
}

} // namespace chowcheck
