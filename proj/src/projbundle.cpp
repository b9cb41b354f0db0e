#include "chowcheck/projbundle.hpp"

namespace chowcheck {

namespace {

void require_homogeneous(const GradedClass& cls, int degree, const char* what) {
    if (!cls.is_homogeneous() || (!cls.is_zero() && cls.degree() != degree)) {
        throw Error(Error::Kind::DegreeMismatch,
                    std::string(what) + " must be homogeneous of degree "
                        + std::to_string(degree));
    }
}

/// All exponent vectors over the base generators with the given weighted
/// degree, in no particular order.
void enumerate_monomials(const std::vector<int>& weights, int target,
                         std::size_t from, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
    if (target == 0) {
        out.push_back(current);
        return;
    }
    if (from == weights.size()) return;
    const int max_e = target / weights[from];
    for (int e = max_e; e >= 0; --e) {
        current[from] = e;
        enumerate_monomials(weights, target - e * weights[from], from + 1, current, out);
    }
    current[from] = 0;
}

MonomialExpr to_expr(const std::vector<int>& exps, const std::vector<std::string>& names) {
    MonomialExpr expr;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > 0) expr[names[i]] = exps[i];
    }
    return expr;
}

bool divisible(const std::vector<int>& lhs, const std::vector<int>& mono) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] > mono[i]) return false;
    }
    return true;
}

} // namespace

ProjBundle projectivize(const std::string& name, Ring base,
                        const std::string& fiber, const GradedClass& c1,
                        const GradedClass& c2) {
    if (base->has_generator(fiber)) {
        throw Error(Error::Kind::BadArgument,
                    name + ": fiber generator '" + fiber + "' already exists in "
                        + base->name());
    }
    if (c1.ring() != base || c2.ring() != base) {
        throw Error(Error::Kind::RingMismatch,
                    name + ": Chern classes must live in the base ring");
    }
    require_homogeneous(c1, 1, "c1");
    require_homogeneous(c2, 2, "c2");

    const auto& base_names = base->generator_names();
    RingPresentation pres;
    pres.name = name;
    pres.params = base->params();
    pres.generators.emplace_back(fiber, 1);
    for (std::size_t i = 0; i < base_names.size(); ++i) {
        pres.generators.emplace_back(base_names[i], base->weights()[i]);
    }
    pres.top_degree = base->top_degree() + 1;

    // The defining relation: xi^2 = c1*xi - c2.
    RuleExpr defining;
    defining.lhs = {{fiber, 2}};
    for (const auto& [m, c] : c1.terms()) {
        MonomialExpr expr = to_expr(m, base_names);
        expr[fiber] = 1;
        defining.rhs.push_back({c, std::move(expr)});
    }
    for (const auto& [m, c] : c2.terms()) {
        defining.rhs.push_back({-c, to_expr(m, base_names)});
    }
    pres.rules.push_back(std::move(defining));

    // Base relations carry over verbatim.
    for (const auto& rule : base->rules()) {
        RuleExpr lifted;
        lifted.lhs = to_expr(rule.lhs, base_names);
        for (const auto& [m, c] : rule.rhs) {
            lifted.rhs.push_back({c, to_expr(m, base_names)});
        }
        pres.rules.push_back(std::move(lifted));
    }

    // Base classes one degree above the base top vanish; deeper ones exceed
    // the total top degree and truncate on their own.
    std::vector<std::vector<int>> overtop;
    std::vector<int> scratch(base_names.size(), 0);
    enumerate_monomials(base->weights(), base->top_degree() + 1, 0, scratch, overtop);
    for (const auto& mono : overtop) {
        bool reducible = false;
        for (const auto& rule : base->rules()) {
            if (divisible(rule.lhs, mono)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) pres.rules.push_back({to_expr(mono, base_names), {}});
    }

    // Fiber integration against the base table: the entry for m*xi is the base
    // entry for m.
    for (const auto& [mono, value] : base->integration_table()) {
        MonomialExpr expr = to_expr(mono, base_names);
        expr[fiber] = 1;
        pres.integration_table.emplace_back(std::move(expr), value);
    }

    Ring total = make_ring(pres);
    return ProjBundle(std::move(base), total, fiber, c1);
}

GradedClass ProjBundle::xi() const {
    return GradedClass::generator(total_, fiber_);
}

GradedClass ProjBundle::pullback(const GradedClass& cls) const {
    if (cls.ring() != base_) {
        throw Error(Error::Kind::RingMismatch,
                    total_->name() + ": pullback expects a class in " + base_->name());
    }
    return map_to_ring(cls, total_);
}

GradedClass ProjBundle::pushforward(const GradedClass& cls) const {
    if (cls.ring() != total_) {
        throw Error(Error::Kind::RingMismatch,
                    total_->name() + ": pushforward expects a class in " + total_->name());
    }
    const std::size_t fiber_idx = total_->generator_index(fiber_);
    GradedClass out = GradedClass::zero(base_);
    for (const auto& [m, c] : cls.terms()) {
        if (m[fiber_idx] == 0) continue; // pulled back from the base
        MonomialExpr expr;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == fiber_idx || m[i] == 0) continue;
            expr[total_->generator_names()[i]] = m[i];
        }
        out += GradedClass::monomial(base_, expr, c);
    }
    return out;
}

GradedClass ProjBundle::relative_tangent_c1() const {
    return xi() * Rational(2) - pullback(c1_base_);
}

} // namespace chowcheck
