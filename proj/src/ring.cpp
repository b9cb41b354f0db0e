#include "chowcheck/ring.hpp"

#include <algorithm>
#include <deque>

namespace chowcheck {

namespace {

std::vector<int> to_exponents(const RingData& ring, const MonomialExpr& mono) {
    std::vector<int> exps(ring.generator_count(), 0);
    for (const auto& [name, e] : mono) {
        if (e < 0) {
            throw Error(Error::Kind::BadArgument,
                        ring.name() + ": negative exponent on generator '" + name + "'");
        }
        exps[ring.generator_index(name)] += e;
    }
    return exps;
}

bool divides(const std::vector<int>& lhs, const std::vector<int>& mono) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] > mono[i]) return false;
    }
    return true;
}

std::vector<int> quotient(const std::vector<int>& mono, const std::vector<int>& lhs) {
    std::vector<int> q(mono.size());
    for (std::size_t i = 0; i < mono.size(); ++i) q[i] = mono[i] - lhs[i];
    return q;
}

std::vector<int> product(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
    return m;
}

} // namespace

std::size_t RingData::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gen_names_.size(); ++i) {
        if (gen_names_[i] == name) return i;
    }
    throw Error(Error::Kind::UnknownSymbol,
                name_ + ": no generator named '" + name + "'");
}

bool RingData::has_generator(const std::string& name) const {
    return std::find(gen_names_.begin(), gen_names_.end(), name) != gen_names_.end();
}

int RingData::weighted_degree(const std::vector<int>& mono) const {
    int d = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) d += mono[i] * weights_[i];
    return d;
}

Ring make_ring(const RingPresentation& pres) {
    auto data = std::shared_ptr<RingData>(new RingData());
    data->name_ = pres.name.empty() ? std::string("ring") : pres.name;
    data->params_ = pres.params ? pres.params : make_alphabet({});
    if (pres.generators.empty()) {
        throw Error(Error::Kind::BadArgument, data->name_ + ": no generators");
    }
    for (const auto& [name, deg] : pres.generators) {
        if (name.empty()) {
            throw Error(Error::Kind::BadArgument, data->name_ + ": empty generator name");
        }
        if (std::find(data->gen_names_.begin(), data->gen_names_.end(), name)
            != data->gen_names_.end()) {
            throw Error(Error::Kind::BadArgument,
                        data->name_ + ": duplicate generator '" + name + "'");
        }
        if (deg < 1) {
            throw Error(Error::Kind::BadArgument,
                        data->name_ + ": generator '" + name + "' must have positive degree");
        }
        data->gen_names_.push_back(name);
        data->weights_.push_back(deg);
    }
    if (pres.top_degree < 1) {
        throw Error(Error::Kind::BadArgument, data->name_ + ": top degree must be positive");
    }
    data->top_degree_ = pres.top_degree;

    for (const auto& rule : pres.rules) {
        RingData::Rule compiled;
        compiled.lhs = to_exponents(*data, rule.lhs);
        if (std::all_of(compiled.lhs.begin(), compiled.lhs.end(),
                        [](int e) { return e == 0; })) {
            throw Error(Error::Kind::BadArgument,
                        data->name_ + ": rewrite rule with empty left-hand side");
        }
        compiled.degree = data->weighted_degree(compiled.lhs);
        const std::string lhs_str = monomial_str(compiled.lhs, data->gen_names_);
        for (const auto& existing : data->rules_) {
            if (existing.lhs == compiled.lhs) {
                throw Error(Error::Kind::BadArgument,
                            data->name_ + ": duplicate rewrite rule for " + lhs_str);
            }
        }
        for (const auto& term : rule.rhs) {
            if (!term.coeff.alphabet() || !(*term.coeff.alphabet() == *data->params_)) {
                throw Error(Error::Kind::AlphabetMismatch,
                            data->name_ + ": rule for " + lhs_str
                                + " has a coefficient over a different alphabet");
            }
            if (term.coeff.is_zero()) continue;
            std::vector<int> mono = to_exponents(*data, term.mono);
            if (cmp_graded_lex(mono, compiled.lhs, data->weights_) >= 0) {
                throw Error(Error::Kind::CyclicRewrite,
                            data->name_ + ": rule for " + lhs_str
                                + " does not strictly decrease at "
                                + monomial_str(mono, data->gen_names_));
            }
            if (data->weighted_degree(mono) != compiled.degree) {
                throw Error(Error::Kind::DegreeMismatch,
                            data->name_ + ": rule for " + lhs_str + " (degree "
                                + std::to_string(compiled.degree) + ") produces "
                                + monomial_str(mono, data->gen_names_) + " of degree "
                                + std::to_string(data->weighted_degree(mono)));
            }
            bool merged = false;
            for (auto& [m, c] : compiled.rhs) {
                if (m == mono) {
                    c += term.coeff;
                    merged = true;
                    break;
                }
            }
            if (!merged) compiled.rhs.emplace_back(std::move(mono), term.coeff);
        }
        compiled.rhs.erase(std::remove_if(compiled.rhs.begin(), compiled.rhs.end(),
                                          [](const auto& t) { return t.second.is_zero(); }),
                           compiled.rhs.end());
        data->rules_.push_back(std::move(compiled));
    }

    data->table_ = decltype(data->table_)(WeightedGreater{data->weights_});
    for (const auto& [mono_expr, value] : pres.integration_table) {
        std::vector<int> mono = to_exponents(*data, mono_expr);
        const std::string mono_name = monomial_str(mono, data->gen_names_);
        if (data->weighted_degree(mono) != data->top_degree_) {
            throw Error(Error::Kind::DegreeMismatch,
                        data->name_ + ": integration entry " + mono_name + " has degree "
                            + std::to_string(data->weighted_degree(mono)) + ", top degree is "
                            + std::to_string(data->top_degree_));
        }
        for (const auto& rule : data->rules_) {
            if (divides(rule.lhs, mono)) {
                throw Error(Error::Kind::BadArgument,
                            data->name_ + ": integration entry " + mono_name
                                + " is reducible and can never be reached");
            }
        }
        if (!value.alphabet() || !(*value.alphabet() == *data->params_)) {
            throw Error(Error::Kind::AlphabetMismatch,
                        data->name_ + ": integration entry " + mono_name
                            + " has a value over a different alphabet");
        }
        if (!data->table_.emplace(std::move(mono), value).second) {
            throw Error(Error::Kind::BadArgument,
                        data->name_ + ": duplicate integration entry for " + mono_name);
        }
    }
    return data;
}

GradedClass::GradedClass(Ring ring)
    : ring_(std::move(ring)), terms_(WeightedGreater{ring_->weights()}) {}

GradedClass GradedClass::zero(Ring ring) { return GradedClass(std::move(ring)); }

GradedClass GradedClass::one(Ring ring) {
    return scalar(std::move(ring), Rational(1));
}

GradedClass GradedClass::scalar(Ring ring, const Polynomial& value) {
    if (!value.alphabet() || !(*value.alphabet() == *ring->params())) {
        throw Error(Error::Kind::AlphabetMismatch,
                    ring->name() + ": scalar over a different alphabet");
    }
    GradedClass c(std::move(ring));
    c.insert_reduced(std::vector<int>(c.ring_->generator_count(), 0), value);
    return c;
}

GradedClass GradedClass::scalar(Ring ring, const Rational& value) {
    auto params = ring->params();
    return scalar(std::move(ring), Polynomial::constant(params, value));
}

GradedClass GradedClass::generator(Ring ring, const std::string& name, int power) {
    if (power < 0) {
        throw Error(Error::Kind::BadArgument,
                    ring->name() + ": negative power of generator '" + name + "'");
    }
    GradedClass c(ring);
    std::vector<int> mono(ring->generator_count(), 0);
    mono[ring->generator_index(name)] = power;
    c.insert_reduced(mono, Polynomial::constant(ring->params(), Rational(1)));
    return c;
}

GradedClass GradedClass::monomial(Ring ring, const MonomialExpr& mono,
                                  const Polynomial& coeff) {
    if (!coeff.alphabet() || !(*coeff.alphabet() == *ring->params())) {
        throw Error(Error::Kind::AlphabetMismatch,
                    ring->name() + ": coefficient over a different alphabet");
    }
    GradedClass c(ring);
    c.insert_reduced(to_exponents(*ring, mono), coeff);
    return c;
}

void GradedClass::require_same_ring(const GradedClass& a, const GradedClass& b) {
    if (a.ring_ != b.ring_) {
        throw Error(Error::Kind::RingMismatch,
                    "classes live in different rings ('" + a.ring_->name() + "' vs '"
                        + b.ring_->name() + "')");
    }
}

/// Worklist reduction: each rewrite replaces a monomial by strictly smaller
/// ones in the weighted order, so the loop terminates.
void GradedClass::insert_reduced(const std::vector<int>& mono, const Polynomial& coeff) {
    std::deque<std::pair<std::vector<int>, Polynomial>> work;
    work.emplace_back(mono, coeff);
    while (!work.empty()) {
        auto [m, c] = std::move(work.front());
        work.pop_front();
        if (c.is_zero()) continue;
        if (ring_->weighted_degree(m) > ring_->top_degree()) continue;
        const RingData::Rule* hit = nullptr;
        for (const auto& rule : ring_->rules()) {
            if (divides(rule.lhs, m)) {
                hit = &rule;
                break;
            }
        }
        if (hit == nullptr) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
            continue;
        }
        const std::vector<int> q = quotient(m, hit->lhs);
        for (const auto& [rm, rc] : hit->rhs) {
            work.emplace_back(product(q, rm), c * rc);
        }
    }
}

GradedClass GradedClass::operator-() const {
    GradedClass out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

GradedClass GradedClass::operator+(const GradedClass& rhs) const {
    require_same_ring(*this, rhs);
    GradedClass out = *this;
    for (const auto& [m, c] : rhs.terms_) {
        auto it = out.terms_.find(m);
        if (it == out.terms_.end()) {
            out.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

GradedClass GradedClass::operator-(const GradedClass& rhs) const {
    return *this + (-rhs);
}

GradedClass GradedClass::operator*(const GradedClass& rhs) const {
    require_same_ring(*this, rhs);
    GradedClass out(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.insert_reduced(product(ma, mb), ca * cb);
        }
    }
    return out;
}

GradedClass GradedClass::operator*(const Polynomial& s) const {
    GradedClass out(ring_);
    for (const auto& [m, c] : terms_) {
        const Polynomial p = c * s;
        if (!p.is_zero()) out.terms_.emplace(m, p);
    }
    return out;
}

GradedClass GradedClass::operator*(const Rational& s) const {
    return *this * Polynomial::constant(ring_->params(), s);
}

GradedClass GradedClass::pow(int e) const {
    if (e < 0) {
        throw Error(Error::Kind::BadArgument, "negative power of a graded class");
    }
    GradedClass acc = one(ring_);
    GradedClass base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base = (e >>= 1) > 0 ? base * base : base;
    }
    return acc;
}

bool GradedClass::operator==(const GradedClass& rhs) const {
    require_same_ring(*this, rhs);
    return terms_ == rhs.terms_;
}

int GradedClass::degree() const {
    if (terms_.empty()) return -1;
    return ring_->weighted_degree(terms_.begin()->first);
}

bool GradedClass::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [m, c] : terms_) {
        if (ring_->weighted_degree(m) != d) return false;
    }
    return true;
}

GradedClass GradedClass::component(int k) const {
    GradedClass out(ring_);
    for (const auto& [m, c] : terms_) {
        if (ring_->weighted_degree(m) == k) out.terms_.emplace(m, c);
    }
    return out;
}

GradedClass GradedClass::substitute_generator(const std::string& name,
                                              const GradedClass& replacement) const {
    require_same_ring(*this, replacement);
    const std::size_t idx = ring_->generator_index(name);
    const int weight = ring_->weights()[idx];
    if (!replacement.is_homogeneous()
        || (!replacement.is_zero() && replacement.degree() != weight)) {
        throw Error(Error::Kind::DegreeMismatch,
                    ring_->name() + ": replacement for generator '" + name
                        + "' is not homogeneous of degree " + std::to_string(weight));
    }
    GradedClass out = zero(ring_);
    for (const auto& [m, c] : terms_) {
        const int k = m[idx];
        std::vector<int> rest = m;
        rest[idx] = 0;
        GradedClass piece(ring_);
        piece.insert_reduced(rest, c);
        out += piece * replacement.pow(k);
    }
    return out;
}

std::string GradedClass::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Polynomial coeff = c;
        bool neg = false;
        if (coeff.terms().size() == 1 && coeff.leading_coefficient() < 0) {
            neg = true;
            coeff = -coeff;
        }
        const std::string ms = monomial_str(m, ring_->generator_names());
        std::string piece;
        if (ms == "1") {
            piece = coeff.terms().size() > 1 ? "(" + coeff.str() + ")" : coeff.str();
        } else if (coeff.is_constant() && coeff.constant_value() == 1) {
            piece = ms;
        } else if (coeff.terms().size() > 1) {
            piece = "(" + coeff.str() + ")*" + ms;
        } else {
            piece = coeff.str() + "*" + ms;
        }
        if (first) {
            out += (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

GradedClass operator*(const Polynomial& s, const GradedClass& c) { return c * s; }
GradedClass operator*(const Rational& s, const GradedClass& c) { return c * s; }

Polynomial integrate(const GradedClass& cls) {
    const Ring& ring = cls.ring();
    Polynomial total = Polynomial::zero(ring->params());
    if (cls.is_zero()) return total;
    if (!cls.is_homogeneous() || cls.degree() != ring->top_degree()) {
        throw Error(Error::Kind::DegreeMismatch,
                    ring->name() + ": integrand must be homogeneous of degree "
                        + std::to_string(ring->top_degree()));
    }
    const auto& table = ring->integration_table();
    for (const auto& [m, c] : cls.terms()) {
        auto it = table.find(m);
        if (it == table.end()) {
            throw Error(Error::Kind::UnhousedSymbol,
                        ring->name() + ": no integration entry for "
                            + monomial_str(m, ring->generator_names()),
                        monomial_str(m, ring->generator_names()));
        }
        total += c * it->second;
    }
    return total;
}

Polynomial integrate_full(const GradedClass& cls) {
    const GradedClass top = cls.component(cls.ring()->top_degree());
    if (top.is_zero()) return Polynomial::zero(cls.ring()->params());
    return integrate(top);
}

GradedClass map_to_ring(const GradedClass& src, Ring target) {
    const Ring& from = src.ring();
    GradedClass out = GradedClass::zero(target);
    for (const auto& [m, c] : src.terms()) {
        MonomialExpr expr;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            const std::string& name = from->generator_names()[i];
            if (!target->has_generator(name)) {
                throw Error(Error::Kind::UnknownSymbol,
                            target->name() + ": no generator named '" + name
                                + "' to receive a class from " + from->name());
            }
            if (target->weights()[target->generator_index(name)]
                != from->weights()[i]) {
                throw Error(Error::Kind::DegreeMismatch,
                            target->name() + ": generator '" + name
                                + "' has a different degree than in " + from->name());
            }
            expr[name] = m[i];
        }
        out += GradedClass::monomial(target, expr, c);
    }
    return out;
}

} // namespace chowcheck
