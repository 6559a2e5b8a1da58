#include "polyharm/kernels.hpp"

#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyharm::kernels {

namespace {

constexpr std::size_t kApplyThreshold = 256;     // terms
constexpr std::size_t kMultiplyThreshold = 8192; // term pairs

struct Summand {
    TermKey key;
    GaussianRational coeff;
};

void term_product_into(std::vector<Summand>& out, const TermKey& ka, const GaussianRational& ca,
                       const TermKey& kb, const GaussianRational& cb) {
    Summand s;
    s.key.u_pow = ka.u_pow + kb.u_pow;
    s.key.v_pow = ka.v_pow + kb.v_pow;
    s.key.t_pow = ka.t_pow + kb.t_pow;
    s.key.u_weight = ka.u_weight + kb.u_weight;
    s.key.v_weight = ka.v_weight + kb.v_weight;
    s.key.t_weight = ka.t_weight + kb.t_weight;
    s.coeff = ca * cb;
    out.push_back(std::move(s));
}

// One differentiation pass over a small summand list (no merging; the
// accumulating builder merges duplicates).
std::vector<Summand> diff_summands(const std::vector<Summand>& in, Var v) {
    std::vector<Summand> out;
    out.reserve(in.size() * 2);
    for (const Summand& s : in) {
        std::uint32_t p = s.key.pow(v);
        if (p > 0) {
            Summand d;
            d.key = s.key;
            switch (v) {
            case Var::U: d.key.u_pow = p - 1; break;
            case Var::V: d.key.v_pow = p - 1; break;
            case Var::T: d.key.t_pow = p - 1; break;
            }
            d.coeff = s.coeff * GaussianRational(static_cast<long>(p));
            out.push_back(std::move(d));
        }
        const GaussianRational& w = s.key.weight(v);
        if (!w.is_zero()) {
            Summand d;
            d.key = s.key;
            d.coeff = s.coeff * w;
            out.push_back(std::move(d));
        }
    }
    return out;
}

void term_image_into(ExpressionBuilder& acc, const TermKey& key, const GaussianRational& coeff,
                     std::span<const DerivRule> rules) {
    for (const DerivRule& rule : rules) {
        std::vector<Summand> cur{{key, coeff}};
        for (int axis = 0; axis < 3 && !cur.empty(); ++axis) {
            for (std::uint8_t n = 0; n < rule.order[static_cast<std::size_t>(axis)]; ++n) {
                cur = diff_summands(cur, static_cast<Var>(axis));
                if (cur.empty()) break;
            }
        }
        if (cur.empty()) continue;
        if (rule.prefactor.is_zero()) continue;
        std::vector<Summand> scaled;
        scaled.reserve(cur.size() * rule.prefactor.size());
        for (const Summand& s : cur)
            for (const auto& [pk, pc] : rule.prefactor.terms())
                term_product_into(scaled, s.key, s.coeff, pk, pc);
        for (const Summand& s : scaled) acc.add_term(s.key, s.coeff);
    }
}

std::vector<Summand> snapshot(const Expression& e) {
    std::vector<Summand> v;
    v.reserve(e.size());
    for (const auto& [k, c] : e.terms()) v.push_back({k, c});
    return v;
}

#ifdef _OPENMP
// Runs body(i, local_builder) over [0, n) on the OpenMP thread team and
// merges the per-thread partial sums. Exceptions (the term cap, mainly)
// are captured inside the region and rethrown after it ends.
template <typename Body>
Expression parallel_accumulate(std::size_t n, Body&& body) {
    int max_threads = omp_get_max_threads();
    std::vector<ExpressionBuilder> parts(static_cast<std::size_t>(max_threads));
    std::exception_ptr error = nullptr;
    bool failed = false;

#pragma omp parallel num_threads(max_threads)
    {
        ExpressionBuilder local;
        int tid = omp_get_thread_num();
#pragma omp for schedule(static) nowait
        for (long i = 0; i < static_cast<long>(n); ++i) {
            bool skip;
#pragma omp atomic read
            skip = failed;
            if (skip) continue;
            try {
                body(static_cast<std::size_t>(i), local);
            } catch (...) {
#pragma omp critical(polyharm_kernel_error)
                {
                    if (!error) error = std::current_exception();
                }
#pragma omp atomic write
                failed = true;
            }
        }
        parts[static_cast<std::size_t>(tid)] = std::move(local);
    }

    if (error) std::rethrow_exception(error);
    ExpressionBuilder acc;
    for (ExpressionBuilder& p : parts) acc.merge(std::move(p));
    return acc.finish();
}
#endif

} // namespace

bool parallel_available() {
#ifdef _OPENMP
    return omp_get_max_threads() > 1;
#else
    return false;
#endif
}

std::size_t apply_parallel_threshold() { return kApplyThreshold; }
std::size_t multiply_parallel_threshold() { return kMultiplyThreshold; }

Expression term_image(const TermKey& key, const GaussianRational& coeff,
                      std::span<const DerivRule> rules) {
    ExpressionBuilder acc;
    term_image_into(acc, key, coeff, rules);
    return acc.finish();
}

Expression apply_rules_serial(const Expression& f, std::span<const DerivRule> rules) {
    ExpressionBuilder acc;
    for (const auto& [k, c] : f.terms()) term_image_into(acc, k, c, rules);
    return acc.finish();
}

Expression apply_rules_parallel(const Expression& f, std::span<const DerivRule> rules) {
#ifdef _OPENMP
    std::vector<Summand> terms = snapshot(f);
    return parallel_accumulate(terms.size(), [&](std::size_t i, ExpressionBuilder& local) {
        term_image_into(local, terms[i].key, terms[i].coeff, rules);
    });
#else
    return apply_rules_serial(f, rules);
#endif
}

Expression apply_rules(const Expression& f, std::span<const DerivRule> rules, ExecMode mode) {
    bool parallel = false;
    switch (mode) {
    case ExecMode::Serial: break;
    case ExecMode::Parallel: parallel = parallel_available(); break;
    case ExecMode::Auto:
        parallel = parallel_available() && f.size() >= kApplyThreshold;
        break;
    }
    return parallel ? apply_rules_parallel(f, rules) : apply_rules_serial(f, rules);
}

Expression multiply_serial(const Expression& a, const Expression& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ExpressionBuilder acc;
    std::vector<Summand> prods;
    for (const auto& [ka, ca] : a.terms()) {
        prods.clear();
        for (const auto& [kb, cb] : b.terms()) term_product_into(prods, ka, ca, kb, cb);
        for (const Summand& s : prods) acc.add_term(s.key, s.coeff);
    }
    return acc.finish();
}

Expression multiply_parallel(const Expression& a, const Expression& b) {
#ifdef _OPENMP
    if (a.is_zero() || b.is_zero()) return {};
    // Iterate the larger factor on the outside so the loop splits well.
    const Expression& outer = a.size() >= b.size() ? a : b;
    const Expression& inner = a.size() >= b.size() ? b : a;
    std::vector<Summand> outer_terms = snapshot(outer);
    return parallel_accumulate(outer_terms.size(), [&](std::size_t i, ExpressionBuilder& local) {
        std::vector<Summand> prods;
        prods.reserve(inner.size());
        for (const auto& [kb, cb] : inner.terms())
            term_product_into(prods, outer_terms[i].key, outer_terms[i].coeff, kb, cb);
        for (const Summand& s : prods) local.add_term(s.key, s.coeff);
    });
#else
    return multiply_serial(a, b);
#endif
}

Expression multiply(const Expression& a, const Expression& b, ExecMode mode) {
    bool parallel = false;
    switch (mode) {
    case ExecMode::Serial: break;
    case ExecMode::Parallel: parallel = parallel_available(); break;
    case ExecMode::Auto:
        parallel = parallel_available() && a.size() * b.size() >= kMultiplyThreshold;
        break;
    }
    return parallel ? multiply_parallel(a, b) : multiply_serial(a, b);
}

} // namespace polyharm::kernels
