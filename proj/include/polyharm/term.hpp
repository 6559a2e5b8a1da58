#ifndef POLYHARM_TERM_HPP
#define POLYHARM_TERM_HPP

#include <cstdint>

#include "polyharm/rational.hpp"

namespace polyharm {

/// Abstract coordinate variables. Geometries interpret (U, V) as (x, y)
/// on the real-coordinate spaces and as the conjugate pair (z, z̄) on the
/// complex-coordinate ones; T is always the last coordinate.
enum class Var : std::uint8_t { U = 0, V = 1, T = 2 };

/// Basis-function identity of a term: the monomial exponents of u, v, t
/// together with the exponential weights of e^(p·u + q·v + s·t).
/// Two terms with equal keys always denote the same basis function and
/// are merged on normalization.
struct TermKey {
    std::uint32_t u_pow = 0;
    std::uint32_t v_pow = 0;
    std::uint32_t t_pow = 0;
    GaussianRational u_weight;
    GaussianRational v_weight;
    GaussianRational t_weight;

    bool is_constant() const {
        return u_pow == 0 && v_pow == 0 && t_pow == 0 && u_weight.is_zero() &&
               v_weight.is_zero() && t_weight.is_zero();
    }

    std::uint32_t pow(Var v) const {
        switch (v) {
        case Var::U: return u_pow;
        case Var::V: return v_pow;
        default: return t_pow;
        }
    }
    const GaussianRational& weight(Var v) const {
        switch (v) {
        case Var::U: return u_weight;
        case Var::V: return v_weight;
        default: return t_weight;
        }
    }

    friend bool operator==(const TermKey& a, const TermKey& b) {
        return a.u_pow == b.u_pow && a.v_pow == b.v_pow && a.t_pow == b.t_pow &&
               a.u_weight == b.u_weight && a.v_weight == b.v_weight && a.t_weight == b.t_weight;
    }
    friend bool operator!=(const TermKey& a, const TermKey& b) { return !(a == b); }

    // Canonical order key (s, p, q, d, a, b): arbitrary but fixed, so that
    // rendering is bit-reproducible.
    friend bool operator<(const TermKey& a, const TermKey& b) {
        int c = GaussianRational::cmp(a.t_weight, b.t_weight);
        if (c != 0) return c < 0;
        c = GaussianRational::cmp(a.u_weight, b.u_weight);
        if (c != 0) return c < 0;
        c = GaussianRational::cmp(a.v_weight, b.v_weight);
        if (c != 0) return c < 0;
        if (a.t_pow != b.t_pow) return a.t_pow < b.t_pow;
        if (a.u_pow != b.u_pow) return a.u_pow < b.u_pow;
        return a.v_pow < b.v_pow;
    }
};

/// One atomic summand  coeff · u^a v^b t^d · e^(p·u + q·v + s·t).
struct Term {
    GaussianRational coeff;
    TermKey key;
};

inline TermKey monomial_key(std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    TermKey k;
    k.u_pow = a;
    k.v_pow = b;
    k.t_pow = d;
    return k;
}

} // namespace polyharm

#endif
