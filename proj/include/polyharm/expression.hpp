#ifndef POLYHARM_EXPRESSION_HPP
#define POLYHARM_EXPRESSION_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "polyharm/errors.hpp"
#include "polyharm/term.hpp"

namespace polyharm {

namespace limits {
/// Global term-count cap (default 100000). Read on every operation that
/// can grow an expression; set once at startup, never during computation.
std::size_t term_cap();
void set_term_cap(std::size_t cap);
} // namespace limits

/// Canonical finite sum of Terms: an ordered map from term key to a
/// nonzero GaussianRational coefficient. The empty map is the zero
/// function. The represented basis functions u^a v^b t^d e^(pu+qv+st)
/// are linearly independent, so structural zero coincides with
/// functional zero. Immutable value type; all operations are pure.
class Expression {
public:
    using TermMap = std::map<TermKey, GaussianRational>;
    using const_iterator = TermMap::const_iterator;

    Expression() = default;

    static Expression zero() { return {}; }
    static Expression constant(GaussianRational c);
    static Expression variable(Var v, std::uint32_t power = 1);
    static Expression monomial(GaussianRational c, std::uint32_t a, std::uint32_t b, std::uint32_t d);
    /// e^(p·u + q·v + s·t)
    static Expression exponential(GaussianRational p, GaussianRational q, GaussianRational s);
    static Expression from_term(Term t);
    /// Merges, sorts and drops zero coefficients.
    static Expression normalize(const std::vector<Term>& raw);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the exact basis function with this key (0 if absent).
    GaussianRational coefficient(const TermKey& k) const;

    Expression neg() const;
    Expression scalar_mul(const GaussianRational& c) const;
    /// Exact partial derivative; power and weight rule per term:
    /// d/du (u^a e^{pu}) = a u^{a-1} e^{pu} + p u^a e^{pu}.
    Expression diff(Var v) const;
    Expression pow(std::uint32_t e) const;

    bool depends_on(Var v) const;

    friend Expression operator+(const Expression& a, const Expression& b);
    friend Expression operator-(const Expression& a, const Expression& b);
    friend Expression operator*(const Expression& a, const Expression& b);
    friend bool operator==(const Expression& a, const Expression& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Expression& a, const Expression& b) { return !(a == b); }

private:
    friend class ExpressionBuilder;
    TermMap terms_;
};

Expression add(const Expression& a, const Expression& b);
Expression sub(const Expression& a, const Expression& b);
Expression mul(const Expression& a, const Expression& b);

/// Mutable accumulator used by the kernels; folds terms into canonical
/// form and enforces the term cap. finish() yields the Expression.
class ExpressionBuilder {
public:
    ExpressionBuilder() = default;

    void add_term(const TermKey& k, const GaussianRational& c);
    void add_expression(const Expression& e);
    void merge(ExpressionBuilder&& other);
    std::size_t size() const { return acc_.size(); }
    Expression finish();

private:
    void check_cap() const;
    Expression::TermMap acc_;
};

} // namespace polyharm

#endif
