#ifndef CHOWCHECK_RING_HPP
#define CHOWCHECK_RING_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chowcheck/polynomial.hpp"

namespace chowcheck {

/// Monomial in the ring generators, written as name -> exponent.
using MonomialExpr = std::map<std::string, int>;

/// One additive term of a rewrite target: scalar coefficient times a monomial.
struct TermExpr {
    Polynomial coeff;
    MonomialExpr mono;
};

/// Rewrite rule lhs -> sum of terms.  An empty rhs sends lhs to zero.
struct RuleExpr {
    MonomialExpr lhs;
    std::vector<TermExpr> rhs;
};

/// Finite presentation of a graded ring: generators with degrees, rewrite
/// rules, a top degree above which everything vanishes, and an integration
/// table assigning scalars to the top-degree normal-form monomials.
struct RingPresentation {
    std::string name;
    AlphabetPtr params;
    std::vector<std::pair<std::string, int>> generators;
    std::vector<RuleExpr> rules;
    int top_degree = 0;
    std::vector<std::pair<MonomialExpr, Polynomial>> integration_table;
};

class RingData;
using Ring = std::shared_ptr<const RingData>;

/// Validates a presentation and freezes it.  Every rule must strictly decrease
/// the weighted graded-lex order (this is what guarantees the rewriting
/// terminates) and must preserve degree; violations are rejected up front.
Ring make_ring(const RingPresentation& pres);

/// Comparator over generator exponent vectors, descending weighted graded-lex.
struct WeightedGreater {
    std::vector<int> weights;
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return cmp_graded_lex(a, b, weights) > 0;
    }
};

class RingData {
public:
    struct Rule {
        std::vector<int> lhs;
        int degree;
        std::vector<std::pair<std::vector<int>, Polynomial>> rhs;
    };

    const std::string& name() const { return name_; }
    const AlphabetPtr& params() const { return params_; }
    std::size_t generator_count() const { return gen_names_.size(); }
    const std::vector<std::string>& generator_names() const { return gen_names_; }
    const std::vector<int>& weights() const { return weights_; }
    int top_degree() const { return top_degree_; }
    std::size_t generator_index(const std::string& name) const;
    bool has_generator(const std::string& name) const;
    int weighted_degree(const std::vector<int>& mono) const;
    const std::vector<Rule>& rules() const { return rules_; }
    const std::map<std::vector<int>, Polynomial, WeightedGreater>& integration_table() const {
        return table_;
    }

private:
    friend Ring make_ring(const RingPresentation&);
    RingData() = default;

    std::string name_;
    AlphabetPtr params_;
    std::vector<std::string> gen_names_;
    std::vector<int> weights_;
    int top_degree_ = 0;
    std::vector<Rule> rules_;
    std::map<std::vector<int>, Polynomial, WeightedGreater> table_;
};

/// Element of a graded ring, always held in normal form: no monomial divisible
/// by a rule left-hand side, nothing above the top degree, no zero scalars.
class GradedClass {
public:
    using TermMap = std::map<std::vector<int>, Polynomial, WeightedGreater>;

    static GradedClass zero(Ring ring);
    static GradedClass one(Ring ring);
    static GradedClass scalar(Ring ring, const Polynomial& value);
    static GradedClass scalar(Ring ring, const Rational& value);
    static GradedClass generator(Ring ring, const std::string& name, int power = 1);
    static GradedClass monomial(Ring ring, const MonomialExpr& mono,
                                const Polynomial& coeff);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GradedClass operator-() const;
    GradedClass operator+(const GradedClass& rhs) const;
    GradedClass operator-(const GradedClass& rhs) const;
    GradedClass operator*(const GradedClass& rhs) const;
    GradedClass& operator+=(const GradedClass& rhs) { return *this = *this + rhs; }
    GradedClass& operator-=(const GradedClass& rhs) { return *this = *this - rhs; }
    GradedClass& operator*=(const GradedClass& rhs) { return *this = *this * rhs; }
    GradedClass operator*(const Polynomial& s) const;
    GradedClass operator*(const Rational& s) const;
    GradedClass pow(int e) const;

    bool operator==(const GradedClass& rhs) const;
    bool operator!=(const GradedClass& rhs) const { return !(*this == rhs); }

    /// Largest weighted degree present; -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    /// Sum of the terms of weighted degree k.
    GradedClass component(int k) const;

    /// Replaces every occurrence of a generator in the stored normal form by a
    /// class of the same degree.  This is a ring map only when the replacement
    /// satisfies the relations that mention the generator; the caller owns that
    /// obligation (trivially met in rings without rewrite rules).
    GradedClass substitute_generator(const std::string& name,
                                     const GradedClass& replacement) const;

    std::string str() const;

private:
    explicit GradedClass(Ring ring);
    void insert_reduced(const std::vector<int>& mono, const Polynomial& coeff);
    static void require_same_ring(const GradedClass& a, const GradedClass& b);

    Ring ring_;
    TermMap terms_;
};

GradedClass operator*(const Polynomial& s, const GradedClass& c);
GradedClass operator*(const Rational& s, const GradedClass& c);

/// Integral of a homogeneous top-degree class via the integration table.
/// A top-degree monomial missing from the table is a hard error naming it.
Polynomial integrate(const GradedClass& cls);

/// Integral of the top-degree component; lower components contribute zero.
Polynomial integrate_full(const GradedClass& cls);

/// Transports a class to another ring that declares (at least) the same
/// generators with the same degrees, matching generators by name.
GradedClass map_to_ring(const GradedClass& src, Ring target);

} // namespace chowcheck

#endif
