#include "chowcheck/betti.hpp"

#include <sstream>

#include "chowcheck/error.hpp"

namespace chowcheck {

BettiSequence::BettiSequence(AlphabetPtr params, int real_dim)
    : params_(std::move(params)), real_dim_(real_dim) {
    if (real_dim < 0) {
        throw Error(Error::Kind::BadArgument, "betti: negative dimension");
    }
    entries_.assign(static_cast<std::size_t>(real_dim) + 1, Polynomial::zero(params_));
}

BettiSequence BettiSequence::point(AlphabetPtr params) {
    BettiSequence out(std::move(params), 0);
    out.set(0, Polynomial::constant(out.params_, 1));
    return out;
}

BettiSequence BettiSequence::projective_space(AlphabetPtr params, int cplx_dim) {
    if (cplx_dim < 0) {
        throw Error(Error::Kind::BadArgument, "betti: negative dimension");
    }
    BettiSequence out(std::move(params), 2 * cplx_dim);
    for (int j = 0; j <= cplx_dim; ++j) {
        out.set(2 * j, Polynomial::constant(out.params_, 1));
    }
    return out;
}

Polynomial BettiSequence::at(int k) const {
    if (k < 0 || k > real_dim_) return Polynomial::zero(params_);
    return entries_[static_cast<std::size_t>(k)];
}

void BettiSequence::set(int k, const Polynomial& value) {
    if (k < 0 || k > real_dim_) {
        throw Error(Error::Kind::BadArgument, "betti: index outside 0..dimension",
                    std::to_string(k));
    }
    entries_[static_cast<std::size_t>(k)] = value;
}

bool BettiSequence::satisfies_duality() const {
    for (int k = 0; k <= real_dim_; ++k) {
        if (at(k) != at(real_dim_ - k)) return false;
    }
    return true;
}

bool BettiSequence::operator==(const BettiSequence& rhs) const {
    return real_dim_ == rhs.real_dim_ && entries_ == rhs.entries_;
}

std::string BettiSequence::str() const {
    std::ostringstream os;
    os << "(";
    for (int k = 0; k <= real_dim_; ++k) {
        if (k) os << ", ";
        os << at(k).str();
    }
    os << ")";
    return os.str();
}

BettiSequence projbundle_betti(const BettiSequence& base, int fiber_dim) {
    if (fiber_dim < 1) {
        throw Error(Error::Kind::BadArgument,
                    "projbundle_betti: fiber dimension must be at least 1");
    }
    BettiSequence out(base.params(), base.real_dim() + 2 * fiber_dim);
    for (int k = 0; k <= out.real_dim(); ++k) {
        Polynomial acc = Polynomial::zero(base.params());
        for (int j = 0; j <= fiber_dim; ++j) acc += base.at(k - 2 * j);
        out.set(k, acc);
    }
    return out;
}

BettiSequence blowup_betti(const BettiSequence& base,
                           const std::vector<BlowupCenter>& centers) {
    BettiSequence out = base;
    for (const auto& center : centers) {
        if (!(*center.betti.params() == *base.params())) {
            throw Error(Error::Kind::AlphabetMismatch,
                        "blowup_betti: center uses a different alphabet");
        }
        if (center.codim < 2) {
            throw Error(Error::Kind::BadArgument,
                        "blowup_betti: center codimension must be at least 2");
        }
        // A center of complex codim c inside real dimension n is a manifold
        // of real dimension n - 2c; anything else is a modeling error.
        if (center.betti.real_dim() != base.real_dim() - 2 * center.codim) {
            throw Error(Error::Kind::BadArgument,
                        "blowup_betti: center dimension does not match its codimension",
                        center.betti.str());
        }
        for (int k = 0; k <= out.real_dim(); ++k) {
            Polynomial acc = Polynomial::zero(base.params());
            for (int j = 1; j < center.codim; ++j) acc += center.betti.at(k - 2 * j);
            out.set(k, out.at(k) + center.multiplicity * acc);
        }
    }
    return out;
}

ScrollDerivation derive_scroll_relations() {
    AlphabetPtr al = make_alphabet({"m", "bb1", "bx3", "bx4", "by3", "by4"});
    auto one = Polynomial::constant(al, 1);
    auto sym = [&](const char* n) { return Polynomial::var(al, n); };

    // Both fourfolds: b0 = 1, b1 = 0 and b2 = 1 are known, the middle is
    // unknown, the upper half is filled in by duality.
    auto fourfold = [&](const char* b3, const char* b4) {
        BettiSequence s(al, 8);
        s.set(0, one);
        s.set(2, one);
        s.set(3, sym(b3));
        s.set(4, sym(b4));
        s.set(5, sym(b3));
        s.set(6, one);
        s.set(8, one);
        return s;
    };
    BettiSequence x_side = fourfold("bx3", "bx4");
    BettiSequence y_side = fourfold("by3", "by4");

    // The jumping curves: connected, so only b1 is unknown.
    BettiSequence curve(al, 2);
    curve.set(0, one);
    curve.set(1, sym("bb1"));
    curve.set(2, one);

    // The jump loci upstairs are 2-dimensional fiber bundles over the curves.
    BettiSequence jump_locus = projbundle_betti(curve, 2);

    ScrollDerivation out{
        al,
        blowup_betti(projbundle_betti(x_side, 1),
                     {BlowupCenter{jump_locus, 2, sym("m")}}),
        projbundle_betti(
            blowup_betti(y_side, {BlowupCenter{curve, 3, sym("m")}}), 1),
        SolveOutcome{},
        {},
    };

    std::vector<std::string> unknowns{"bb1", "bx3", "bx4", "by3", "by4"};
    LinearSystem key(al, unknowns);
    for (int k = 3; k <= 5; ++k) {
        key.add_equation(out.via_blowup.at(k) - out.via_bundle.at(k));
    }
    out.solution = key.solve();

    LinearSystem every_k(al, unknowns);
    for (int k = 0; k <= 10; ++k) {
        every_k.add_equation(out.via_blowup.at(k) - out.via_bundle.at(k));
    }
    out.residuals = every_k.residuals(out.solution);
    return out;
}

} // namespace chowcheck
