#include "polyharm/expression.hpp"

#include <atomic>

#include "polyharm/kernels.hpp"

namespace polyharm {

namespace limits {

namespace {
std::atomic<std::size_t> g_term_cap{100000};
}

std::size_t term_cap() { return g_term_cap.load(std::memory_order_relaxed); }

void set_term_cap(std::size_t cap) {
    g_term_cap.store(cap == 0 ? 1 : cap, std::memory_order_relaxed);
}

} // namespace limits

Expression Expression::constant(GaussianRational c) {
    Expression e;
    if (!c.is_zero()) e.terms_.emplace(TermKey{}, std::move(c));
    return e;
}

Expression Expression::variable(Var v, std::uint32_t power) {
    TermKey k;
    switch (v) {
    case Var::U: k.u_pow = power; break;
    case Var::V: k.v_pow = power; break;
    case Var::T: k.t_pow = power; break;
    }
    Expression e;
    e.terms_.emplace(k, GaussianRational(1));
    return e;
}

Expression Expression::monomial(GaussianRational c, std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    Expression e;
    if (!c.is_zero()) e.terms_.emplace(monomial_key(a, b, d), std::move(c));
    return e;
}

Expression Expression::exponential(GaussianRational p, GaussianRational q, GaussianRational s) {
    TermKey k;
    k.u_weight = std::move(p);
    k.v_weight = std::move(q);
    k.t_weight = std::move(s);
    Expression e;
    e.terms_.emplace(k, GaussianRational(1));
    return e;
}

Expression Expression::from_term(Term t) {
    Expression e;
    if (!t.coeff.is_zero()) e.terms_.emplace(std::move(t.key), std::move(t.coeff));
    return e;
}

Expression Expression::normalize(const std::vector<Term>& raw) {
    ExpressionBuilder b;
    for (const Term& t : raw) b.add_term(t.key, t.coeff);
    return b.finish();
}

GaussianRational Expression::coefficient(const TermKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GaussianRational() : it->second;
}

Expression Expression::neg() const {
    Expression r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Expression Expression::scalar_mul(const GaussianRational& c) const {
    if (c.is_zero()) return {};
    Expression r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

Expression Expression::diff(Var v) const {
    ExpressionBuilder b;
    for (const auto& [k, c] : terms_) {
        std::uint32_t p = k.pow(v);
        if (p > 0) {
            TermKey dk = k;
            switch (v) {
            case Var::U: dk.u_pow = p - 1; break;
            case Var::V: dk.v_pow = p - 1; break;
            case Var::T: dk.t_pow = p - 1; break;
            }
            b.add_term(dk, c * GaussianRational(static_cast<long>(p)));
        }
        const GaussianRational& w = k.weight(v);
        if (!w.is_zero()) b.add_term(k, c * w);
    }
    return b.finish();
}

Expression Expression::pow(std::uint32_t e) const {
    Expression result = Expression::constant(GaussianRational(1));
    Expression base = *this;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1u;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

bool Expression::depends_on(Var v) const {
    for (const auto& [k, c] : terms_) {
        (void)c;
        if (k.pow(v) != 0 || !k.weight(v).is_zero()) return true;
    }
    return false;
}

Expression add(const Expression& a, const Expression& b) {
    ExpressionBuilder acc;
    acc.add_expression(a);
    acc.add_expression(b);
    return acc.finish();
}

Expression sub(const Expression& a, const Expression& b) { return add(a, b.neg()); }

Expression mul(const Expression& a, const Expression& b) {
    return kernels::multiply(a, b, kernels::ExecMode::Auto);
}

Expression operator+(const Expression& a, const Expression& b) { return add(a, b); }
Expression operator-(const Expression& a, const Expression& b) { return sub(a, b); }
Expression operator*(const Expression& a, const Expression& b) { return mul(a, b); }

void ExpressionBuilder::add_term(const TermKey& k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc_.erase(it);
    }
    if (inserted) check_cap();
}

void ExpressionBuilder::add_expression(const Expression& e) {
    for (const auto& [k, c] : e.terms()) add_term(k, c);
}

void ExpressionBuilder::merge(ExpressionBuilder&& other) {
    if (acc_.empty()) {
        acc_ = std::move(other.acc_);
        check_cap();
        return;
    }
    for (auto& [k, c] : other.acc_) add_term(k, c);
    other.acc_.clear();
}

Expression ExpressionBuilder::finish() {
    Expression e;
    e.terms_ = std::move(acc_);
    acc_.clear();
    return e;
}

void ExpressionBuilder::check_cap() const {
    std::size_t cap = limits::term_cap();
    if (acc_.size() > cap) throw ExpressionTooLarge(acc_.size(), cap);
}

} // namespace polyharm
