#ifndef POLYHARM_GEOMETRY_HPP
#define POLYHARM_GEOMETRY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polyharm/expression.hpp"
#include "polyharm/kernels.hpp"

namespace polyharm {

/// The five non-constant-curvature Thurston geometries handled here.
/// Sol, Nil and SL2R use real coordinates (u,v) = (x,y); H2xR and S2xR
/// use the conjugate pair (u,v) = (z, z̄) with Wirtinger derivatives.
enum class GeometryId : std::uint8_t { Sol, Nil, SL2R, H2xR, S2xR };

constexpr std::array<GeometryId, 5> all_geometries{
    GeometryId::Sol, GeometryId::Nil, GeometryId::SL2R, GeometryId::H2xR, GeometryId::S2xR};

bool uses_complex_coordinates(GeometryId g);
const char* geometry_name(GeometryId g);
std::optional<GeometryId> parse_geometry(const std::string& name);

/// One summand of the conformality operator:
/// prefactor · (D^left f) · (D^right h).
struct KappaRule {
    Expression prefactor;
    std::array<std::uint8_t, 3> left{0, 0, 0};
    std::array<std::uint8_t, 3> right{0, 0, 0};
};

/// A geometry's Laplace-Beltrami operator τ and conformality operator κ
/// as finite term-rewriting rule lists. Data-driven so that one generic
/// applier serves all five geometries and the closure/product-rule tests
/// exercise a single code path.
///
/// The τ rules in coordinates:
///   Sol:   e^{-2t} f_xx + e^{2t} f_yy + f_tt
///   Nil:   f_xx + f_yy + 2x f_yt + (1+x²) f_tt
///   SL2R:  y² (f_xx + f_yy) + 2 f_tt - 2y f_xt
///   H2xR:  4(1-z z̄)² f_{z z̄} + f_tt
///   S2xR:  (1+z z̄)² f_{z z̄} + f_tt
///
/// The S2xR pair is derived from the round metric 4/(1+x²+y²)² (dx²+dy²)
/// on the punctured sphere, and the SL2R κ from the inverse of its metric;
/// both derived tables are validated against the product rule
/// τ(fh) = τ(f)h + 2κ(f,h) + fτ(h), which pins them uniquely given τ.
struct OperatorTable {
    GeometryId id;
    std::vector<kernels::DerivRule> tau_rule;
    std::vector<KappaRule> kappa_rule;
};

const OperatorTable& operator_table(GeometryId g);

/// Exact Laplace-Beltrami operator.
Expression tau(GeometryId g, const Expression& f,
               kernels::ExecMode mode = kernels::ExecMode::Auto);

/// Exact conformality operator κ(f,h) = g(∇f, ∇h); symmetric, bilinear.
Expression kappa(GeometryId g, const Expression& f, const Expression& h);

/// f_uu + f_vv for t-independent f (the flat R² Laplacian in the real
/// interpretation of (u,v)). Throws DependsOnT otherwise.
Expression euclidean_laplacian_2d(const Expression& f);

} // namespace polyharm

#endif
