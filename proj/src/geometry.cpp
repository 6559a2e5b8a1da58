#include "polyharm/geometry.hpp"

namespace polyharm {

namespace {

using kernels::DerivRule;

Expression gr_const(long n) { return Expression::constant(GaussianRational(n)); }

Expression exp_t(long weight) {
    return Expression::exponential(GaussianRational(0), GaussianRational(0),
                                   GaussianRational(weight));
}

// c · (1 + sign·uv)²  expanded in the term algebra
Expression conformal_square(long c, long sign) {
    Expression uv = mul(Expression::variable(Var::U), Expression::variable(Var::V));
    Expression base = add(gr_const(1), uv.scalar_mul(GaussianRational(sign)));
    return mul(base, base).scalar_mul(GaussianRational(c));
}

OperatorTable make_sol() {
    OperatorTable t;
    t.id = GeometryId::Sol;
    t.tau_rule = {{exp_t(-2), {2, 0, 0}}, {exp_t(2), {0, 2, 0}}, {gr_const(1), {0, 0, 2}}};
    t.kappa_rule = {{exp_t(-2), {1, 0, 0}, {1, 0, 0}},
                    {exp_t(2), {0, 1, 0}, {0, 1, 0}},
                    {gr_const(1), {0, 0, 1}, {0, 0, 1}}};
    return t;
}

OperatorTable make_nil() {
    Expression x = Expression::variable(Var::U);
    Expression one_plus_x2 = add(gr_const(1), Expression::variable(Var::U, 2));
    OperatorTable t;
    t.id = GeometryId::Nil;
    t.tau_rule = {{gr_const(1), {2, 0, 0}},
                  {gr_const(1), {0, 2, 0}},
                  {x.scalar_mul(GaussianRational(2)), {0, 1, 1}},
                  {one_plus_x2, {0, 0, 2}}};
    t.kappa_rule = {{gr_const(1), {1, 0, 0}, {1, 0, 0}},
                    {gr_const(1), {0, 1, 0}, {0, 1, 0}},
                    {x, {0, 1, 0}, {0, 0, 1}},
                    {x, {0, 0, 1}, {0, 1, 0}},
                    {one_plus_x2, {0, 0, 1}, {0, 0, 1}}};
    return t;
}

OperatorTable make_sl2() {
    Expression y2 = Expression::variable(Var::V, 2);
    Expression minus_y = Expression::variable(Var::V).scalar_mul(GaussianRational(-1));
    OperatorTable t;
    t.id = GeometryId::SL2R;
    t.tau_rule = {{y2, {2, 0, 0}},
                  {y2, {0, 2, 0}},
                  {gr_const(2), {0, 0, 2}},
                  {minus_y.scalar_mul(GaussianRational(2)), {1, 0, 1}}};
    // κ read off from the inverse metric: g^xx = g^yy = y², g^tt = 2,
    // g^xt = -y. Validated by the product-rule identity.
    t.kappa_rule = {{y2, {1, 0, 0}, {1, 0, 0}},
                    {y2, {0, 1, 0}, {0, 1, 0}},
                    {gr_const(2), {0, 0, 1}, {0, 0, 1}},
                    {minus_y, {1, 0, 0}, {0, 0, 1}},
                    {minus_y, {0, 0, 1}, {1, 0, 0}}};
    return t;
}

OperatorTable make_h2xr() {
    OperatorTable t;
    t.id = GeometryId::H2xR;
    t.tau_rule = {{conformal_square(4, -1), {1, 1, 0}}, {gr_const(1), {0, 0, 2}}};
    t.kappa_rule = {{conformal_square(2, -1), {1, 0, 0}, {0, 1, 0}},
                    {conformal_square(2, -1), {0, 1, 0}, {1, 0, 0}},
                    {gr_const(1), {0, 0, 1}, {0, 0, 1}}};
    return t;
}

OperatorTable make_s2xr() {
    OperatorTable t;
    t.id = GeometryId::S2xR;
    t.tau_rule = {{conformal_square(1, 1), {1, 1, 0}}, {gr_const(1), {0, 0, 2}}};
    // Half the τ prefactor on each of the two symmetric slots, so that
    // τ(fh) = τ(f)h + 2κ(f,h) + fτ(h) holds exactly.
    Expression half_sq = conformal_square(1, 1).scalar_mul(GaussianRational(1, 2));
    t.kappa_rule = {{half_sq, {1, 0, 0}, {0, 1, 0}},
                    {half_sq, {0, 1, 0}, {1, 0, 0}},
                    {gr_const(1), {0, 0, 1}, {0, 0, 1}}};
    return t;
}

} // namespace

bool uses_complex_coordinates(GeometryId g) {
    return g == GeometryId::H2xR || g == GeometryId::S2xR;
}

const char* geometry_name(GeometryId g) {
    switch (g) {
    case GeometryId::Sol: return "sol";
    case GeometryId::Nil: return "nil";
    case GeometryId::SL2R: return "sl2";
    case GeometryId::H2xR: return "h2xr";
    case GeometryId::S2xR: return "s2xr";
    }
    return "?";
}

std::optional<GeometryId> parse_geometry(const std::string& name) {
    for (GeometryId g : all_geometries)
        if (name == geometry_name(g)) return g;
    return std::nullopt;
}

const OperatorTable& operator_table(GeometryId g) {
    static const OperatorTable sol = make_sol();
    static const OperatorTable nil = make_nil();
    static const OperatorTable sl2 = make_sl2();
    static const OperatorTable h2xr = make_h2xr();
    static const OperatorTable s2xr = make_s2xr();
    switch (g) {
    case GeometryId::Sol: return sol;
    case GeometryId::Nil: return nil;
    case GeometryId::SL2R: return sl2;
    case GeometryId::H2xR: return h2xr;
    case GeometryId::S2xR: return s2xr;
    }
    return sol;
}

Expression tau(GeometryId g, const Expression& f, kernels::ExecMode mode) {
    const OperatorTable& table = operator_table(g);
    return kernels::apply_rules(f, table.tau_rule, mode);
}

Expression kappa(GeometryId g, const Expression& f, const Expression& h) {
    const OperatorTable& table = operator_table(g);
    ExpressionBuilder acc;
    for (const KappaRule& rule : table.kappa_rule) {
        Expression df = f;
        for (int axis = 0; axis < 3; ++axis)
            for (std::uint8_t n = 0; n < rule.left[static_cast<std::size_t>(axis)]; ++n)
                df = df.diff(static_cast<Var>(axis));
        if (df.is_zero()) continue;
        Expression dh = h;
        for (int axis = 0; axis < 3; ++axis)
            for (std::uint8_t n = 0; n < rule.right[static_cast<std::size_t>(axis)]; ++n)
                dh = dh.diff(static_cast<Var>(axis));
        if (dh.is_zero()) continue;
        acc.add_expression(mul(rule.prefactor, mul(df, dh)));
    }
    return acc.finish();
}

Expression euclidean_laplacian_2d(const Expression& f) {
    if (f.depends_on(Var::T)) throw DependsOnT();
    return add(f.diff(Var::U).diff(Var::U), f.diff(Var::V).diff(Var::V));
}

} // namespace polyharm
