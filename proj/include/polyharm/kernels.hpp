#ifndef POLYHARM_KERNELS_HPP
#define POLYHARM_KERNELS_HPP

#include <array>
#include <cstdint>
#include <span>

#include "polyharm/expression.hpp"

namespace polyharm::kernels {

/// Execution mode for the bulk expression kernels. Auto switches to the
/// OpenMP path when the input is large enough to amortize thread startup;
/// Serial is the reference implementation the parallel path is tested
/// against. Both produce structurally identical results: the arithmetic
/// is exact, so the merge order of partial sums cannot change the
/// canonical form.
enum class ExecMode : std::uint8_t { Auto, Serial, Parallel };

/// One summand of a linear differential operator in the term algebra:
/// prefactor · ∂^{order[0]}_u ∂^{order[1]}_v ∂^{order[2]}_t.
struct DerivRule {
    Expression prefactor;
    std::array<std::uint8_t, 3> order{0, 0, 0};
};

bool parallel_available();
std::size_t apply_parallel_threshold();
std::size_t multiply_parallel_threshold();

/// Image of a single term under the whole rule list (small expression).
Expression term_image(const TermKey& key, const GaussianRational& coeff,
                      std::span<const DerivRule> rules);

Expression apply_rules_serial(const Expression& f, std::span<const DerivRule> rules);
Expression apply_rules_parallel(const Expression& f, std::span<const DerivRule> rules);
Expression apply_rules(const Expression& f, std::span<const DerivRule> rules,
                       ExecMode mode = ExecMode::Auto);

Expression multiply_serial(const Expression& a, const Expression& b);
Expression multiply_parallel(const Expression& a, const Expression& b);
Expression multiply(const Expression& a, const Expression& b, ExecMode mode = ExecMode::Auto);

} // namespace polyharm::kernels

#endif
