#include "chowcheck/context.hpp"

#include "chowcheck/charclass.hpp"

namespace chowcheck {

namespace {

Ring make_fourfold(const AlphabetPtr& params) {
    auto var = [&](const std::string& n) { return Polynomial::var(params, n); };
    RingPresentation pres;
    pres.name = "fourfold";
    pres.params = params;
    pres.generators = {{"H", 1}, {"e", 2}, {"t", 2}, {"pt", 4}};
    pres.top_degree = 4;
    pres.integration_table = {
        {{{"H", 4}}, var("x")},
        {{{"H", 2}, {"e", 1}}, var("y")},
        {{{"e", 2}}, var("z")},
        {{{"H", 2}, {"t", 1}}, var("u")},
        {{{"e", 1}, {"t", 1}}, var("v")},
        {{{"pt", 1}}, Polynomial::constant(params, Rational(1))},
    };
    return make_ring(pres);
}

} // namespace

Context standard_context() {
    AlphabetPtr params =
        make_alphabet({"a", "r", "ry", "d", "m", "c", "x", "y", "z", "u", "v"});
    Ring fourfold = make_fourfold(params);
    GradedClass H = GradedClass::generator(fourfold, "H");
    GradedClass c1 = H * Polynomial::var(params, "r");
    GradedClass c2 = GradedClass::generator(fourfold, "e");
    ProjBundle bundle = projectivize("bundle", fourfold, "xi", c1, c2);
    return Context{params, fourfold, std::move(bundle)};
}

GradedClass Context::scroll_class() const {
    return xi() * p("a") - bundle.pullback(H());
}

GradedClass Context::todd_fourfold() const {
    return todd_fourfold_chi_one(H() * p("r"), t(), pt());
}

GradedClass Context::todd_bundle() const {
    return bundle.pullback(todd_fourfold())
           * todd_line(bundle.relative_tangent_c1());
}

} // namespace chowcheck
