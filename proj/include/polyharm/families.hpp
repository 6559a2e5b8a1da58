#ifndef POLYHARM_FAMILIES_HPP
#define POLYHARM_FAMILIES_HPP

#include <array>
#include <string>
#include <vector>

#include "polyharm/exact_matrix.hpp"
#include "polyharm/geometry.hpp"

namespace polyharm::families {

/// How a constructor's predicted degree relates to ground truth.
///   Certified        — the construction guarantees the exact proper degree.
///   UpperBound       — the construction only guarantees τ^predicted = 0;
///                      special parameter choices may drop the degree.
///   PaperInconsistent — the published degree statement conflicts with its
///                      own worked examples; the engine's computed degree
///                      is the ground truth and the flag records the clash.
enum class PredictionStatus : std::uint8_t { Certified, UpperBound, PaperInconsistent };

const char* status_name(PredictionStatus s);

struct FamilyResult {
    Expression expr;
    GeometryId geometry;
    std::uint32_t predicted_degree = 0;
    PredictionStatus status = PredictionStatus::Certified;
    std::string prediction_source;
};

enum class SolAxis : std::uint8_t { YMajor, XMajor };
enum class Sl2Axis : std::uint8_t { X, Y };

/// Harmonic series on Sol: Σ_k c_k y^{n-2k} e^{2kt} with c_0 = 1 and
/// c_k = (-1)^k / (4^k (k!)²) · n!/(n-2k)!. XMajor mirrors the roles of
/// x and y and substitutes t by -t; linear_factor multiplies by the
/// complementary first-power variable.
FamilyResult sol_harmonic(std::uint32_t n, SolAxis axis, bool linear_factor);

/// The closed-form coefficient of the series above.
GaussianRational sol_harmonic_coefficient(std::uint32_t n, std::uint32_t k);

/// The ansatz basis x^{m-2i} y^{n-2j} e^{2t(j-i)}, 0 <= i <= m/2,
/// 0 <= j <= n/2, indexed by (i,j) in lexicographic order.
std::vector<Term> sol_ansatz_basis(std::uint32_t m, std::uint32_t n);

/// Proper polyharmonic polynomial family on Sol with leading term x^m y^n:
/// built as an exact nullspace vector of M^r on the ansatz basis, where M
/// is the matrix of τ and r = min(⌊m/2⌋, ⌊n/2⌋) + 1. The published
/// statement claims r = min + 2, which contradicts its own worked
/// examples and base cases; the result is flagged PaperInconsistent and
/// the computed degree is the ground truth.
FamilyResult sol_polyharmonic(std::uint32_t m, std::uint32_t n);

/// t^{2r}(a1 + a2 x + a3 y + a4 xy) + t^{2r+1}(b1 + b2 x + b3 y + b4 xy);
/// proper (r+1)-harmonic on Sol for every nonzero (a, b).
FamilyResult sol_t_polynomial(std::uint32_t r, const std::array<GaussianRational, 4>& a,
                              const std::array<GaussianRational, 4>& b);

/// Product of the two harmonic cubic series
/// (a2(2x²-e^{-2t}) + a3(2x³-3xe^{-2t})) · (b2(2y²-e^{2t}) + b3(2y³-3ye^{2t}));
/// proper biharmonic on Sol.
FamilyResult sol_product(const GaussianRational& a2, const GaussianRational& a3,
                         const GaussianRational& b2, const GaussianRational& b3);

/// H1(x,y) · x^d · t^alpha on Nil for a proper harmonic H1 on flat R²;
/// proper (2·alpha + d + 1)-harmonic provided no x- or y-derivative of H1
/// up to order 2(2·alpha + d + 1) vanishes identically (derivatives beyond
/// that order cannot appear in the finitely many τ applications the
/// certificate performs).
FamilyResult nil_product(const Expression& h1, std::uint32_t d, std::uint32_t alpha);

/// x^m y^n t^alpha on Nil with the parity-split degree formula
///   alpha even: ⌊(m+alpha)/2⌋ + ⌊n/2⌋ + 1 + ⌊alpha/2⌋
///   alpha odd:  ⌊(m+alpha)/2⌋ + ⌊(n+1)/2⌋ + 1 + ⌊alpha/2⌋
/// as an upper bound; properness is certified per instance.
FamilyResult nil_monomial(std::uint32_t m, std::uint32_t n, std::uint32_t alpha);

std::uint32_t nil_monomial_degree_bound(std::uint32_t m, std::uint32_t n, std::uint32_t alpha);

/// The 12-parameter polynomial family
/// b1 x² + b2 y² + b3 yt + b4 x³ + b5 x²y + b6 x²t + b7 xy² + b8 y³
///  + b9 x³y + b10 xy³ + b11 y²t + b12 x³t on Nil; τ² = 0 for every b,
/// degree exactly 2 for generic b (upper bound: some rays are harmonic).
FamilyResult nil_biharmonic(const std::array<GaussianRational, 12>& b);

/// p(t)·y (axis Y, degree ⌊d/2⌋+1) or p(t)·x (axis X, degree ⌈d/2⌉+1)
/// on SL2~, where d = deg p and the leading coefficient is nonzero.
FamilyResult sl2_axis(const std::vector<GaussianRational>& p_coeffs, Sl2Axis axis);

/// b1 xt + b2 t² + b3 xt² + b4 yt² + b5 t³ + b6 yt³ on SL2~; τ² = 0 for
/// every b, degree 2 for generic b (upper bound: e.g. 2xt + yt² is
/// harmonic).
FamilyResult sl2_biharmonic(const std::array<GaussianRational, 6>& b);

/// (f(z) + g(z̄)) · P(t) on H²×R or S²×R, with f, g polynomial and
/// P(t) = Σ_{k<2r} p_k t^k, (p_{2r-2}, p_{2r-1}) ≠ 0; proper r-harmonic.
FamilyResult product_space_family(GeometryId g, const std::vector<GaussianRational>& f_coeffs,
                                  const std::vector<GaussianRational>& g_coeffs,
                                  const std::vector<GaussianRational>& p_coeffs, std::uint32_t r);

/// The proper harmonic e^x·cos y written in the term algebra as
/// (1/2)e^{u+iv} + (1/2)e^{u-iv}; every x- and y-derivative is nonzero.
Expression exp_cos_harmonic();

} // namespace polyharm::families

#endif
