#include "chowcheck/linsolve.hpp"

#include <algorithm>

namespace chowcheck {

const Fraction& SolveOutcome::value(const std::string& unknown) const {
    auto it = assignment.find(unknown);
    if (it == assignment.end())
        throw Error(Error::Kind::BadArgument, "no bound value for unknown: " + unknown, unknown);
    return it->second;
}

LinearSystem::LinearSystem(AlphabetPtr alphabet, std::vector<std::string> unknowns)
    : alphabet_(std::move(alphabet)), unknowns_(std::move(unknowns)) {
    for (std::size_t i = 0; i < unknowns_.size(); ++i) {
        alphabet_->index_of(unknowns_[i]);
        for (std::size_t j = i + 1; j < unknowns_.size(); ++j)
            if (unknowns_[i] == unknowns_[j])
                throw Error(Error::Kind::BadArgument,
                            "duplicate unknown: " + unknowns_[i], unknowns_[i]);
    }
}

void LinearSystem::add_equation(const Polynomial& expr) {
    std::vector<std::size_t> uidx;
    for (const auto& u : unknowns_) uidx.push_back(alphabet_->index_of(u));

    Row row;
    row.coeff.assign(unknowns_.size(), Polynomial::zero(alphabet_));
    row.rhs = Polynomial::zero(alphabet_);
    for (const auto& [e, c] : expr.terms()) {
        int unknown_degree = 0;
        std::size_t which = 0;
        for (std::size_t k = 0; k < uidx.size(); ++k) {
            unknown_degree += e[uidx[k]];
            if (e[uidx[k]] > 0) which = k;
        }
        if (unknown_degree > 1)
            throw Error(Error::Kind::NonlinearEntry,
                        "term not linear in the unknowns: " +
                            monomial_str(e, alphabet_->names()),
                        monomial_str(e, alphabet_->names()));
        if (unknown_degree == 0) {
            row.rhs.add_term(e, -c); // constants move to the right-hand side
        } else {
            std::vector<int> stripped = e;
            stripped[uidx[which]] = 0;
            row.coeff[which].add_term(stripped, c);
        }
    }
    rows_.push_back(std::move(row));
}

SolveOutcome LinearSystem::solve() const {
    const std::size_t m = rows_.size(), n = unknowns_.size();
    std::vector<std::vector<Fraction>> a(m, std::vector<Fraction>(n));
    std::vector<Fraction> rhs(m);
    // Multiplier matrix: t[i] expresses the current row i over the original rows.
    std::vector<std::vector<Fraction>> t(m, std::vector<Fraction>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Fraction(rows_[i].coeff[j]);
        rhs[i] = Fraction(rows_[i].rhs);
        for (std::size_t k = 0; k < m; ++k)
            t[i][k] = Fraction::constant(alphabet_, i == k ? 1 : 0);
    }

    std::vector<bool> row_used(m, false);
    std::vector<long> pivot_row_of(n, -1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = m;
        for (std::size_t i = 0; i < m; ++i)
            if (!row_used[i] && !a[i][col].is_zero()) { pivot = i; break; }
        if (pivot == m) continue; // free unknown
        row_used[pivot] = true;
        pivot_row_of[col] = static_cast<long>(pivot);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pivot || a[i][col].is_zero()) continue;
            Fraction f = a[i][col] / a[pivot][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[pivot][j];
            rhs[i] -= f * rhs[pivot];
            for (std::size_t k = 0; k < m; ++k) t[i][k] -= f * t[pivot][k];
        }
    }

    SolveOutcome out;
    out.unknowns = unknowns_;
    for (std::size_t i = 0; i < m; ++i) {
        if (row_used[i] || rhs[i].is_zero()) continue;
        out.kind = SolveOutcome::Kind::Inconsistent;
        out.witness = t[i];
        return out;
    }

    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_row_of[col] < 0) {
            out.free_unknowns.push_back(unknowns_[col]);
            out.assignment.emplace(unknowns_[col], Fraction::var(alphabet_, unknowns_[col]));
        }
    }
    out.kind = out.free_unknowns.empty() ? SolveOutcome::Kind::Unique
                                         : SolveOutcome::Kind::AffineFamily;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_row_of[col] < 0) continue;
        std::size_t p = static_cast<std::size_t>(pivot_row_of[col]);
        Fraction value = rhs[p];
        for (std::size_t f = 0; f < n; ++f) {
            if (pivot_row_of[f] >= 0 || a[p][f].is_zero()) continue;
            value -= a[p][f] * Fraction::var(alphabet_, unknowns_[f]);
        }
        out.assignment.emplace(unknowns_[col], value / a[p][col]);
    }
    return out;
}

std::vector<Fraction> LinearSystem::residuals(const SolveOutcome& outcome) const {
    if (outcome.kind == SolveOutcome::Kind::Inconsistent)
        throw Error(Error::Kind::BadArgument, "no residuals for an inconsistent system");
    std::vector<Fraction> rs;
    for (const auto& row : rows_) {
        Fraction acc = Fraction(-row.rhs);
        for (std::size_t j = 0; j < unknowns_.size(); ++j) {
            auto it = outcome.assignment.find(unknowns_[j]);
            Fraction value = it != outcome.assignment.end()
                                 ? it->second
                                 : Fraction::var(alphabet_, unknowns_[j]);
            acc += Fraction(row.coeff[j]) * value;
        }
        rs.push_back(acc);
    }
    return rs;
}

} // namespace chowcheck
