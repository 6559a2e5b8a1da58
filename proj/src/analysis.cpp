#include "polyharm/analysis.hpp"

#include <stdexcept>

namespace polyharm {

DegreeReport harmonicity_degree(GeometryId g, const Expression& f, std::uint32_t max_r) {
    DegreeReport report;
    report.max_r = max_r;
    if (f.is_zero()) {
        report.degree = 0;
        report.proper = false;
        return report;
    }

    Expression current = f;
    for (std::uint32_t r = 1; r <= max_r; ++r) {
        Expression next;
        try {
            next = tau(g, current);
        } catch (const ExpressionTooLarge& e) {
            throw ExpressionTooLarge(e.count(), e.cap(),
                                     "while computing iterate " + std::to_string(r));
        }
        report.chain.push_back(next.size());
        if (next.is_zero()) {
            report.degree = r;
            report.proper = true;
            report.witness = std::move(current);
            return report;
        }
        current = std::move(next);
    }
    // Cap reached; the last computed iterate is kept as a diagnostic.
    report.witness = std::move(current);
    return report;
}

bool is_r_harmonic(GeometryId g, const Expression& f, std::uint32_t r) {
    if (r == 0) throw std::invalid_argument("is_r_harmonic requires r >= 1");
    Expression current = f;
    for (std::uint32_t k = 0; k < r; ++k) {
        if (current.is_zero()) return true;
        current = tau(g, current);
    }
    return current.is_zero();
}

} // namespace polyharm
