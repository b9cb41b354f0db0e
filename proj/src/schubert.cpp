#include "chowcheck/schubert.hpp"

#include <algorithm>
#include <sstream>

#include "chowcheck/charclass.hpp"
#include "chowcheck/error.hpp"

namespace chowcheck {

namespace {

constexpr int kBoxCols = 3;
constexpr int kTopCodim = 2 * kBoxCols;

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << "s[" << p.a1 << "," << p.a2 << "]";
    return os.str();
}

/// Integer cycle combination, the working type for the structure table.
using IntCombo = std::map<Partition, long>;

void combo_add(IntCombo& dst, const Partition& p, long c) {
    if (c == 0) return;
    auto [it, fresh] = dst.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) dst.erase(it);
    }
}

/// Single-cycle product with the one-row cycle of p boxes: every way of
/// adding p boxes with no two in one column keeps m1 >= a1 >= m2 >= a2.
IntCombo pieri_cycle(const Partition& lam, int p) {
    IntCombo out;
    for (int m1 = lam.a1; m1 <= kBoxCols; ++m1) {
        int m2 = lam.codim() + p - m1;
        if (m2 < lam.a2 || m2 > lam.a1 || m2 > m1) continue;
        combo_add(out, Partition{m1, m2}, 1);
    }
    return out;
}

IntCombo pieri_combo(const IntCombo& s, int p) {
    if (p == 0) return s;
    IntCombo out;
    for (const auto& [lam, c] : s) {
        for (const auto& [nu, k] : pieri_cycle(lam, p)) combo_add(out, nu, c * k);
    }
    return out;
}

/// Cycle product by the two-row determinantal expansion into one-row
/// products: s[b1,b2] = s[b1]*s[b2] - s[b1+1]*s[b2-1], with one-row cycles
/// above the box width vanishing.
IntCombo cycle_product(const Partition& lam, const Partition& mu) {
    IntCombo start{{lam, 1}};
    IntCombo out = pieri_combo(pieri_combo(start, mu.a1), mu.a2);
    if (mu.a2 >= 1 && mu.a1 + 1 <= kBoxCols) {
        IntCombo corr = pieri_combo(pieri_combo(start, mu.a1 + 1), mu.a2 - 1);
        for (const auto& [nu, k] : corr) combo_add(out, nu, -k);
    }
    return out;
}

using ProductTable = std::map<std::pair<Partition, Partition>, IntCombo>;

/// Full 10x10 product table.  Construction cross-checks itself: the table
/// must be symmetric, codimension-additive, and must agree with direct
/// box-addition products against every one-row cycle.
ProductTable build_table() {
    ProductTable table;
    const auto& box = box_partitions();
    for (const Partition& lam : box) {
        for (const Partition& mu : box) {
            IntCombo prod = cycle_product(lam, mu);
            for (const auto& [nu, k] : prod) {
                (void)k;
                if (!in_box(nu) || nu.codim() != lam.codim() + mu.codim()) {
                    throw Error(Error::Kind::BadArgument,
                                "cycle table: product left the box",
                                partition_str(nu));
                }
            }
            table[{lam, mu}] = std::move(prod);
        }
    }
    for (const Partition& lam : box) {
        for (const Partition& mu : box) {
            if (table[{lam, mu}] != table[{mu, lam}]) {
                throw Error(Error::Kind::BadArgument,
                            "cycle table: asymmetric product",
                            partition_str(lam) + "*" + partition_str(mu));
            }
            if (mu.a2 == 0 && mu.a1 >= 1) {
                if (table[{lam, mu}] != pieri_cycle(lam, mu.a1)) {
                    throw Error(Error::Kind::BadArgument,
                                "cycle table: disagrees with box addition",
                                partition_str(lam) + "*" + partition_str(mu));
                }
            }
        }
    }
    return table;
}

const ProductTable& product_table() {
    static const ProductTable table = build_table();
    return table;
}

} // namespace

bool in_box(const Partition& p) {
    return kBoxCols >= p.a1 && p.a1 >= p.a2 && p.a2 >= 0;
}

const std::vector<Partition>& box_partitions() {
    static const std::vector<Partition> box = [] {
        std::vector<Partition> out;
        for (int k = 0; k <= kTopCodim; ++k) {
            for (int a1 = 0; a1 <= kBoxCols; ++a1) {
                Partition p{a1, k - a1};
                if (in_box(p)) out.push_back(p);
            }
        }
        return out;
    }();
    return box;
}

Partition complement(const Partition& p) {
    if (!in_box(p)) {
        throw Error(Error::Kind::BadArgument, "complement: partition outside the box",
                    partition_str(p));
    }
    return Partition{kBoxCols - p.a2, kBoxCols - p.a1};
}

SchubertElement SchubertElement::zero(AlphabetPtr params) {
    return SchubertElement(std::move(params));
}

SchubertElement SchubertElement::one(AlphabetPtr params) {
    SchubertElement out(params);
    out.add_term(Partition{0, 0}, Polynomial::constant(out.params_, 1));
    return out;
}

SchubertElement SchubertElement::cycle(AlphabetPtr params, const Partition& p) {
    if (!in_box(p)) {
        throw Error(Error::Kind::BadArgument, "cycle: partition outside the box",
                    partition_str(p));
    }
    SchubertElement out(params);
    out.add_term(p, Polynomial::constant(out.params_, 1));
    return out;
}

Polynomial SchubertElement::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    if (it == terms_.end()) return Polynomial::zero(params_);
    return it->second;
}

void SchubertElement::add_term(const Partition& p, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(p, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SchubertElement::require_same_params(const SchubertElement& a,
                                          const SchubertElement& b) {
    if (!(*a.params_ == *b.params_)) {
        throw Error(Error::Kind::AlphabetMismatch,
                    "cycle operands use different parameter alphabets");
    }
}

SchubertElement SchubertElement::operator-() const {
    SchubertElement out(params_);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
    return out;
}

SchubertElement SchubertElement::operator+(const SchubertElement& rhs) const {
    require_same_params(*this, rhs);
    SchubertElement out = *this;
    for (const auto& [p, c] : rhs.terms_) out.add_term(p, c);
    return out;
}

SchubertElement SchubertElement::operator-(const SchubertElement& rhs) const {
    return *this + (-rhs);
}

SchubertElement SchubertElement::operator*(const SchubertElement& rhs) const {
    require_same_params(*this, rhs);
    SchubertElement out(params_);
    const ProductTable& table = product_table();
    for (const auto& [lam, cl] : terms_) {
        for (const auto& [mu, cm] : rhs.terms_) {
            Polynomial c = cl * cm;
            for (const auto& [nu, k] : table.at({lam, mu})) {
                out.add_term(nu, c * Rational(k));
            }
        }
    }
    return out;
}

SchubertElement SchubertElement::operator*(const Polynomial& s) const {
    SchubertElement out(params_);
    for (const auto& [p, c] : terms_) out.add_term(p, c * s);
    return out;
}

SchubertElement SchubertElement::operator*(const Rational& s) const {
    return *this * Polynomial::constant(params_, s);
}

SchubertElement SchubertElement::pow(int e) const {
    if (e < 0) throw Error(Error::Kind::BadArgument, "pow: negative exponent");
    SchubertElement acc = SchubertElement::one(params_);
    SchubertElement base = *this;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

bool SchubertElement::operator==(const SchubertElement& rhs) const {
    require_same_params(*this, rhs);
    return terms_ == rhs.terms_;
}

int SchubertElement::codim() const {
    int top = -1;
    for (const auto& [p, c] : terms_) {
        (void)c;
        top = std::max(top, p.codim());
    }
    return top;
}

bool SchubertElement::is_homogeneous() const {
    int seen = -1;
    for (const auto& [p, c] : terms_) {
        (void)c;
        if (seen >= 0 && p.codim() != seen) return false;
        seen = p.codim();
    }
    return true;
}

std::string SchubertElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        std::string cs = c.str();
        bool negated = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos
            && cs.find(" - ") == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool constant_cycle = (p == Partition{0, 0});
        bool unit = (cs == "1");
        if (constant_cycle) {
            os << cs;
        } else if (unit) {
            os << partition_str(p);
        } else {
            if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos) {
                os << "(" << cs << ")";
            } else {
                os << cs;
            }
            os << "*" << partition_str(p);
        }
    }
    return os.str();
}

SchubertElement operator*(const Polynomial& s, const SchubertElement& c) {
    return c * s;
}

SchubertElement operator*(const Rational& s, const SchubertElement& c) {
    return c * s;
}

SchubertElement pieri(const SchubertElement& s, int p) {
    if (p < 1 || p > kBoxCols) {
        throw Error(Error::Kind::BadArgument,
                    "pieri: row length must be between 1 and 3",
                    std::to_string(p));
    }
    SchubertElement out = SchubertElement::zero(s.params());
    for (const auto& [lam, c] : s.terms()) {
        for (const auto& [nu, k] : pieri_cycle(lam, p)) {
            out = out + SchubertElement::cycle(s.params(), nu) * (c * Rational(k));
        }
    }
    return out;
}

Polynomial integrate_pairing(const SchubertElement& s) {
    if (!s.is_zero() && (!s.is_homogeneous() || s.codim() != kTopCodim)) {
        throw Error(Error::Kind::DegreeMismatch,
                    "integrate_pairing: element is not a top-codimension cycle");
    }
    return s.coefficient(Partition{kBoxCols, kBoxCols});
}

DegreeForms quintic_degree_forms(const AlphabetPtr& params) {
    for (const char* need : {"m", "c", "d"}) {
        if (!params->has(need)) {
            throw Error(Error::Kind::UnknownSymbol,
                        "quintic_degree_forms: alphabet lacks a required parameter",
                        need);
        }
    }
    SchubertElement s1 = SchubertElement::cycle(params, {1, 0});
    SchubertElement s11 = SchubertElement::cycle(params, {1, 1});
    // Dual universal subbundle, then a hyperplane twist.
    RankTwo<SchubertElement> sub{s1, s11};
    RankTwo<SchubertElement> tw = twist(sub, s1);

    Polynomial m = Polynomial::var(params, "m");
    SchubertElement v = SchubertElement::cycle(params, {1, 1}) * Polynomial::var(params, "c")
                        + SchubertElement::cycle(params, {2, 0}) * Polynomial::var(params, "d");

    // The hyperplane cycle of the ambient embedding is s1 itself; only the
    // second Chern class of the twist enters the y and z forms.
    DegreeForms out;
    out.x = integrate_pairing(s1.pow(4) * v) * m;
    out.y = integrate_pairing(tw.c2 * s1.pow(2) * v) * m;
    out.z = integrate_pairing(tw.c2.pow(2) * v) * m;
    return out;
}

std::vector<McdTriple> solve_mcd(const Int& x, const Int& y, const Int& z) {
    if (x <= 0 || y <= 0 || z <= 0) {
        throw Error(Error::Kind::BadArgument, "solve_mcd: degrees must be positive");
    }
    std::vector<McdTriple> out;
    // c,d >= 1 force 2c+3d >= 5, so m runs only up to x/5; for each m the
    // (c,d) system has determinant -1 and pins the unique candidate.
    for (Int m = 1; m * 5 <= x; ++m) {
        if (x % m != 0 || y % m != 0 || z % m != 0) continue;
        Int xs = x / m, ys = y / m, zs = z / m;
        Int c = Int(3) * ys - Int(7) * xs;
        Int d = Int(5) * xs - Int(2) * ys;
        if (c < 1 || d < 1) continue;
        if (Int(13) * c + Int(16) * d != zs) continue;
        out.push_back(McdTriple{m, c, d});
    }
    return out;
}

Ring grassmannian_ring(const AlphabetPtr& params) {
    RingPresentation pres;
    pres.name = "grassmannian";
    pres.params = params;
    pres.generators = {{"s1", 1}, {"e", 2}};
    auto one = Polynomial::constant(params, 1);
    auto num = [&](long v) { return Polynomial::constant(params, Rational(v)); };
    pres.rules = {
        // s1^4 = 3 s1^2 e - e^2
        {{{"s1", 4}}, {{num(3), {{"s1", 2}, {"e", 1}}}, {num(-1), {{"e", 2}}}}},
        // s1^3 e = 2 s1 e^2
        {{{"s1", 3}, {"e", 1}}, {{num(2), {{"s1", 1}, {"e", 2}}}}},
        // s1^2 e^2 = e^3
        {{{"s1", 2}, {"e", 2}}, {{one, {{"e", 3}}}}},
    };
    pres.top_degree = kTopCodim;
    pres.integration_table = {{{{"e", 3}}, one}};
    return make_ring(pres);
}

GradedClass to_grassmannian(const SchubertElement& s, Ring gr) {
    GradedClass s1 = GradedClass::generator(gr, "s1");
    GradedClass e = GradedClass::generator(gr, "e");
    GradedClass out = GradedClass::zero(gr);
    // One-row cycles are s1, s1^2 - e, s1^3 - 2 s1 e; out-of-range rows are
    // zero, which also covers the a2 = 0 and a1 = 3 edges of the
    // determinantal expansion below.
    auto row = [&](int k) {
        switch (k) {
            case 0: return GradedClass::one(gr);
            case 1: return s1;
            case 2: return s1 * s1 - e;
            case 3: return s1.pow(3) - s1 * e - s1 * e;
            default: return GradedClass::zero(gr);
        }
    };
    for (const auto& [p, c] : s.terms()) {
        GradedClass cls = row(p.a1) * row(p.a2) - row(p.a1 + 1) * row(p.a2 - 1);
        out += cls * c;
    }
    return out;
}

} // namespace chowcheck
