#ifndef POLYHARM_ANALYSIS_HPP
#define POLYHARM_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polyharm/geometry.hpp"

namespace polyharm {

/// Result of iterating τ on an expression. A function is r-harmonic when
/// τ^r(f) = 0 and proper r-harmonic when additionally τ^{r-1}(f) does not
/// vanish identically; both tests here are exact structural zero tests.
struct DegreeReport {
    /// Smallest r with τ^r(f) = 0, or nullopt when max_r was reached
    /// without hitting zero. Degree 0 is reserved for the zero function.
    std::optional<std::uint32_t> degree;
    std::uint32_t max_r = 0;
    bool proper = false;
    /// Term counts of τ^1(f), τ^2(f), ... up to min(degree, max_r) entries.
    std::vector<std::size_t> chain;
    /// The last nonzero iterate τ^{degree-1}(f); certifies properness.
    Expression witness;

    bool exceeded() const { return !degree.has_value(); }
};

constexpr std::uint32_t kDefaultMaxDegree = 64;

DegreeReport harmonicity_degree(GeometryId g, const Expression& f,
                                std::uint32_t max_r = kDefaultMaxDegree);

/// True iff τ^r(f) = 0 exactly (r >= 1).
bool is_r_harmonic(GeometryId g, const Expression& f, std::uint32_t r);

} // namespace polyharm

#endif
