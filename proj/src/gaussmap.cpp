#include "hgauss/gaussmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgauss::gaussmap {

namespace {

// First-order jet in (x, y).
struct Dual2 {
    double v = 0.0, dx = 0.0, dy = 0.0;
};

Dual2 operator+(Dual2 a, Dual2 b) { return {a.v + b.v, a.dx + b.dx, a.dy + b.dy}; }
Dual2 operator-(Dual2 a, Dual2 b) { return {a.v - b.v, a.dx - b.dx, a.dy - b.dy}; }
Dual2 operator+(double s, Dual2 a) { return {s + a.v, a.dx, a.dy}; }
Dual2 operator*(double s, Dual2 a) { return {s * a.v, s * a.dx, s * a.dy}; }
Dual2 operator*(Dual2 a, Dual2 b) { return {a.v * b.v, a.dx * b.v + a.v * b.dx, a.dy * b.v + a.v * b.dy}; }
Dual2 operator/(Dual2 a, Dual2 b)
{
    const double i = 1.0 / b.v;
    return {a.v * i, (a.dx * b.v - a.v * b.dx) * i * i, (a.dy * b.v - a.v * b.dy) * i * i};
}
Dual2 sqrt(Dual2 a)
{
    const double s = std::sqrt(a.v);
    return {s, a.dx / (2.0 * s), a.dy / (2.0 * s)};
}

struct GraphDuals {
    Dual2 p, q;
    Dual2 fxx, fxy, fyy;
};

GraphDuals graph_duals(const GraphPointData &d)
{
    const auto &j = d.jet;
    return {
        {d.p, j.fxx, j.fxy + 0.5},
        {d.q, j.fxy - 0.5, j.fyy},
        {j.fxx, j.fxxx, j.fxxy},
        {j.fxy, j.fxxy, j.fxyy},
        {j.fyy, j.fxyy, j.fyyy},
    };
}

// (1/sqrt g) d_i (sqrt g g^{ij} d_j h) with d_j h supplied as first-order jets.
double divergence_form(const GraphDuals &g, Dual2 hx, Dual2 hy)
{
    const Dual2 g11 = 1.0 + g.p * g.p;
    const Dual2 g12 = g.p * g.q;
    const Dual2 g22 = 1.0 + g.q * g.q;
    const Dual2 det = g11 * g22 - g12 * g12;
    const Dual2 sq = sqrt(det);
    const Dual2 v1 = sq * (g22 * hx - g12 * hy) / det;
    const Dual2 v2 = sq * (g11 * hy - g12 * hx) / det;
    return (v1.dx + v2.dy) / sq.v;
}

std::array<std::array<double, 2>, 2> inverse_metric(const GraphPointData &d)
{
    const double g11 = 1.0 + d.p * d.p, g12 = d.p * d.q, g22 = 1.0 + d.q * d.q;
    const double det = g11 * g22 - g12 * g12;
    return {{{g22 / det, -g12 / det}, {-g12 / det, g11 / det}}};
}

} // namespace

GansPoint gauss_map(const GraphPointData &d) { return {-d.p, -d.q}; }

Jacobian2 gauss_jacobian(const GraphPointData &d)
{
    const auto &j = d.jet;
    return {{{{-j.fxx, -j.fxy - 0.5}, {-j.fxy + 0.5, -j.fyy}}}};
}

double gauss_det(const GraphPointData &d)
{
    const auto &j = d.jet;
    return j.fxx * j.fyy - j.fxy * j.fxy + 0.25;
}

double laplace_beltrami(const GraphPointData &d, const ScalarDerivatives &h)
{
    return divergence_form(graph_duals(d), {h.hx, h.hxx, h.hxy}, {h.hy, h.hxy, h.hyy});
}

double laplace_beltrami(Component c, const GraphPointData &d)
{
    const auto &j = d.jet;
    if (c == Component::U) {
        return laplace_beltrami(d, {-j.fxx, -j.fxy - 0.5, -j.fxxx, -j.fxxy, -j.fxyy});
    }
    return laplace_beltrami(d, {-j.fxy + 0.5, -j.fyy, -j.fxxy, -j.fxyy, -j.fyyy});
}

TensionValue tension_field(const GraphPointData &d)
{
    const auto ginv = inverse_metric(d);
    const auto J = gauss_jacobian(d).m;
    const gans::Christoffel2 gamma = gans::christoffel_at(gauss_map(d));

    std::array<double, 2> tau{laplace_beltrami(Component::U, d), laplace_beltrami(Component::V, d)};
    for (int a = 0; a < 2; ++a) {
        for (int i = 0; i < 2; ++i) {
            for (int k = 0; k < 2; ++k) {
                for (int b = 0; b < 2; ++b) {
                    for (int c = 0; c < 2; ++c) tau[a] += ginv[i][k] * gamma(a, b, c) * J[b][i] * J[c][k];
                }
            }
        }
    }
    return {tau[0], tau[1]};
}

MeanCurvatureGradient mean_curvature_gradient(const GraphPointData &d)
{
    const GraphDuals g = graph_duals(d);
    const Dual2 num = (1.0 + g.q * g.q) * g.fxx - 2.0 * (g.p * g.q * g.fxy) + (1.0 + g.p * g.p) * g.fyy;
    const Dual2 w = sqrt(1.0 + (g.p * g.p + g.q * g.q));
    const Dual2 H = num / (2.0 * (w * w * w));
    return {H.v, H.dx, H.dy, w.v, w.dx, w.dy};
}

ResidualPair hg_residual(const GraphPointData &d)
{
    const TensionValue tau = tension_field(d);
    const auto m = mean_curvature_gradient(d);
    const double p = d.p, q = d.q, w = m.w, H = m.H;
    const double rhs1 = H * (2.0 * q / w - 4.0 * m.wx + 4.0 * p * H * w * w);
    const double rhs2 = H * (-2.0 * p / w - 4.0 * m.wy + 4.0 * q * H * w * w);
    return {tau.t1 + 2.0 * w * m.Hx - rhs1, tau.t2 + 2.0 * w * m.Hy - rhs2};
}

ResidualPair tension_plus_mean_gradient(const GraphPointData &d)
{
    const TensionValue tau = tension_field(d);
    const auto m = mean_curvature_gradient(d);
    return {tau.t1 + 2.0 * (m.Hx * m.w + m.H * m.wx), tau.t2 + 2.0 * (m.Hy * m.w + m.H * m.wy)};
}

ResidualPair appendix_numerators(const GraphPointData &d)
{
    const auto &j = d.jet;
    const double u = d.x, v = d.y;
    const double fx = j.fx, fy = j.fy, fxx = j.fxx, fxy = j.fxy, fyy = j.fyy;
    const double a = v + 2.0 * fx; // 2p
    const double b = u - 2.0 * fy; // -2q
    const double mean = fxx * (4.0 + u * u + 4.0 * fy * (-u + fy)) + 4.0 * fyy + a * (2.0 * fxy * b + a * fyy);

    const double t1 = mean * ((-6.0 + 4.0 * fxy + a * (2.0 * a * fxy + fxx * b)) * b
                              + a * (4.0 + v * v + 4.0 * fx * (v + fx)) * fyy);
    const double t2 = -mean * (2.0 * v * (3.0 + 2.0 * fxy) + 4.0 * fx * fx * b * fyy
                               + 4.0 * fx * (3.0 + fxy * (2.0 + u * u + 4.0 * fy * (-u + fy)) + v * b * fyy)
                               + b * (fxx * (4.0 + u * u + 4.0 * fy * (-u + fy)) + v * (2.0 * fxy * b + v * fyy)));
    const double den = 32.0 * std::pow(d.w, 4);
    return {t1 / den, t2 / den};
}

ResidualPair appendix_numerator_check(const GraphPointData &d)
{
    const ResidualPair lhs = tension_plus_mean_gradient(d);
    const ResidualPair num = appendix_numerators(d);
    return {lhs.r1 - kNumeratorSign * num.r1, lhs.r2 - kNumeratorSign * num.r2};
}

std::array<double, 2> barred_point(const heis::HeisIsometry &iso, double x, double y)
{
    const heis::HeisPoint img = heis::apply_isometry(iso, {x, y, 0.0});
    return {img.x, img.y};
}

surface::GraphSurface equivariant_graph(const surface::GraphSurface &spec, const heis::HeisIsometry &iso)
{
    using expr::Expression;
    const expr::Expression f = expr::bind(spec.f, spec.params);
    if (!f.parameters().empty()) throw std::invalid_argument("equivariant_graph: unbound parameters remain");
    if (f.variables().size() != 2) throw std::invalid_argument("equivariant_graph: f must have two variables");

    const auto &vars = f.variables();
    auto k = [&](double c) { return Expression::constant(c, vars); };
    const Expression xb = Expression::variable(0, vars);
    const Expression yb = Expression::variable(1, vars);
    const double a = iso.translation.x, b = iso.translation.y, c = iso.translation.z;
    const double cs = std::cos(iso.theta), sn = std::sin(iso.theta);

    // Undo the translation, then the orthogonal part.
    const Expression X = xb - k(a);
    const Expression Y = yb - k(b);
    const bool rotation = iso.kind == heis::HeisIsometry::Kind::Rotation;
    const std::array<Expression, 2> args{
        cs * X + sn * Y,
        rotation ? (-sn) * X + cs * Y : sn * X - cs * Y,
    };
    Expression composed = expr::substitute(f, args);
    if (!rotation) composed = -composed;
    Expression h = composed + k(c) + (0.5 * a) * yb - (0.5 * b) * xb;

    // Bounding box of the mapped parameter rectangle.
    const auto &dom = spec.domain;
    surface::Domain out{1e300, -1e300, 1e300, -1e300};
    for (double x : {dom.x0, dom.x1}) {
        for (double y : {dom.y0, dom.y1}) {
            const auto q = barred_point(iso, x, y);
            out.x0 = std::min(out.x0, q[0]);
            out.x1 = std::max(out.x1, q[0]);
            out.y0 = std::min(out.y0, q[1]);
            out.y1 = std::max(out.y1, q[1]);
        }
    }
    return {std::move(h), {}, out};
}

GansPoint predicted_gauss_map(const heis::HeisIsometry &iso, GansPoint phi, ReflectionConvention convention)
{
    if (iso.kind == heis::HeisIsometry::Kind::Rotation) {
        return gans::apply_isometry(gans::Rotation{iso.theta}, phi);
    }
    // The orthogonal part reflects (x, y) across the line through the origin
    // with direction (cos(theta/2), sin(theta/2)), i.e. a x + b y = 0 with
    // (a, b) = (-sin(theta/2), cos(theta/2)); tau reflects across -b u + a v = 0.
    const double ha = -std::sin(iso.theta / 2.0), hb = std::cos(iso.theta / 2.0);
    const GansPoint r = gans::apply_isometry(gans::Reflection{-hb, ha}, phi);
    if (convention == ReflectionConvention::Reflect) return r;
    return {-r.u, -r.v};
}

ConformalityDefect conformality_defect(const GraphPointData &d)
{
    const auto forms = surface::forms_graph(d);
    const double I[2][2] = {{forms.E, forms.F}, {forms.F, forms.G}};
    if (!(forms.detI() > 0.0)) throw std::domain_error("conformality_defect: degenerate first fundamental form");

    const auto J = gauss_jacobian(d).m;
    const gans::Metric2 h = gans::metric_at(gauss_map(d));
    double P[2][2];
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) P[i][k] = h.inner({J[0][i], J[1][i]}, {J[0][k], J[1][k]});
    }
    double pi = 0.0, ii = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            pi += P[i][k] * I[i][k];
            ii += I[i][k] * I[i][k];
        }
    }
    const double lambda = pi / ii;
    double defect = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) defect = std::max(defect, std::abs(P[i][k] - lambda * I[i][k]));
    }
    return {defect, lambda};
}

} // namespace hgauss::gaussmap
