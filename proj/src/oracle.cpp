#include "hgauss/oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hgauss::oracle {

namespace {

double sample(const ScalarFn &fn, double x, double y)
{
    double v = 0.0;
    try {
        v = fn(x, y);
    } catch (const std::exception &e) {
        throw std::domain_error(std::string("finite-difference stencil leaves the domain: ") + e.what());
    }
    if (!std::isfinite(v)) throw std::domain_error("finite-difference stencil hit a non-finite value");
    return v;
}

// Second-order stencils at (x, y) with step h.
struct Second {
    double xx, xy, yy;
};

Second second_stencil(const ScalarFn &fn, double x, double y, double h)
{
    const double c = sample(fn, x, y);
    return {
        (sample(fn, x + h, y) - 2.0 * c + sample(fn, x - h, y)) / (h * h),
        (sample(fn, x + h, y + h) - sample(fn, x + h, y - h) - sample(fn, x - h, y + h) + sample(fn, x - h, y - h))
            / (4.0 * h * h),
        (sample(fn, x, y + h) - 2.0 * c + sample(fn, x, y - h)) / (h * h),
    };
}

// Derivative along dir of a vector-valued function, fourth order.
template <std::size_t N, typename F>
std::array<double, N> d1_vec(const F &fn, double x, double y, int dir, double h)
{
    auto at = [&](double k) { return dir == 0 ? fn(x + k * h, y) : fn(x, y + k * h); };
    const auto m2 = at(-2.0), m1 = at(-1.0), p1 = at(1.0), p2 = at(2.0);
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = (m2[i] - 8.0 * m1[i] + 8.0 * p1[i] - p2[i]) / (12.0 * h);
    return out;
}

std::array<double, 2> gauss_vec(const ScalarFn &fn, double x, double y, double h)
{
    return {-(d1(fn, x, y, 0, h) + y / 2.0), -(d1(fn, x, y, 1, h) - x / 2.0)};
}

// Divergence-form fluxes sqrt(g) g^{ij} d_j phi^a for both components,
// ordered (a=1,i=1), (a=1,i=2), (a=2,i=1), (a=2,i=2); the last entry is sqrt(g).
std::array<double, 5> fluxes(const ScalarFn &fn, double x, double y, double h)
{
    auto phi = [&](double a, double b) { return gauss_vec(fn, a, b, h); };
    const auto c = phi(x, y);
    const auto dx = d1_vec<2>(phi, x, y, 0, h);
    const auto dy = d1_vec<2>(phi, x, y, 1, h);
    const double p = -c[0], q = -c[1];
    const double g11 = 1.0 + p * p, g12 = p * q, g22 = 1.0 + q * q;
    const double det = g11 * g22 - g12 * g12;
    const double sq = std::sqrt(det);
    const double i11 = g22 / det, i12 = -g12 / det, i22 = g11 / det;
    return {
        sq * (i11 * dx[0] + i12 * dy[0]),
        sq * (i12 * dx[0] + i22 * dy[0]),
        sq * (i11 * dx[1] + i12 * dy[1]),
        sq * (i12 * dx[1] + i22 * dy[1]),
        sq,
    };
}

// p, q, f_xx, f_xy, f_yy by fourth-order differences.
struct Local {
    double p, q, fxx, fxy, fyy;
};

Local local_second(const ScalarFn &fn, double x, double y, double h)
{
    auto grad = [&](double a, double b) {
        return std::array<double, 2>{d1(fn, a, b, 0, h), d1(fn, a, b, 1, h)};
    };
    const auto g = grad(x, y);
    const auto gx = d1_vec<2>(grad, x, y, 0, h);
    const auto gy = d1_vec<2>(grad, x, y, 1, h);
    return {g[0] + y / 2.0, g[1] - x / 2.0, gx[0], 0.5 * (gx[1] + gy[0]), gy[1]};
}

// (H, w) by differences.
std::array<double, 2> mean_and_w(const ScalarFn &fn, double x, double y, double h)
{
    const Local l = local_second(fn, x, y, h);
    const double w2 = 1.0 + l.p * l.p + l.q * l.q;
    const double num = (1.0 + l.q * l.q) * l.fxx - 2.0 * l.p * l.q * l.fxy + (1.0 + l.p * l.p) * l.fyy;
    const double w = std::sqrt(w2);
    return {num / (2.0 * w2 * w), w};
}

} // namespace

expr::Jet3 fd_jet3(const ScalarFn &fn, double x, double y, double h)
{
    if (!(h > 0.0)) throw std::invalid_argument("fd_jet3: step must be positive");
    expr::Jet3 j;
    j.f = sample(fn, x, y);
    j.fx = (sample(fn, x + h, y) - sample(fn, x - h, y)) / (2.0 * h);
    j.fy = (sample(fn, x, y + h) - sample(fn, x, y - h)) / (2.0 * h);
    const Second c = second_stencil(fn, x, y, h);
    j.fxx = c.xx;
    j.fxy = c.xy;
    j.fyy = c.yy;
    const Second xp = second_stencil(fn, x + h, y, h), xm = second_stencil(fn, x - h, y, h);
    const Second yp = second_stencil(fn, x, y + h, h), ym = second_stencil(fn, x, y - h, h);
    j.fxxx = (xp.xx - xm.xx) / (2.0 * h);
    j.fxxy = (yp.xx - ym.xx) / (2.0 * h);
    j.fxyy = (xp.yy - xm.yy) / (2.0 * h);
    j.fyyy = (yp.yy - ym.yy) / (2.0 * h);
    return j;
}

expr::Jet3 fd_jet3_richardson(const ScalarFn &fn, double x, double y, double h)
{
    auto level = [&](double step) {
        return (4.0 / 3.0) * fd_jet3(fn, x, y, step / 2.0) + (-1.0 / 3.0) * fd_jet3(fn, x, y, step);
    };
    return (16.0 / 15.0) * level(h / 2.0) + (-1.0 / 15.0) * level(h);
}

double d1(const ScalarFn &fn, double x, double y, int dir, double h)
{
    auto at = [&](double k) { return dir == 0 ? sample(fn, x + k * h, y) : sample(fn, x, y + k * h); };
    return (at(-2.0) - 8.0 * at(-1.0) + 8.0 * at(1.0) - at(2.0)) / (12.0 * h);
}

ScalarFn graph_function(const surface::GraphSurface &spec)
{
    return [spec](double x, double y) { return expr::eval_value(spec.f, x, y, spec.params); };
}

gans::Christoffel2 fd_christoffel(gans::GansPoint p, double h)
{
    auto metric = [](double u, double v) {
        const gans::Metric2 m = gans::metric_at({u, v});
        return std::array<double, 3>{m.h11, m.h12, m.h22};
    };
    const auto du = d1_vec<3>(metric, p.u, p.v, 0, h);
    const auto dv = d1_vec<3>(metric, p.u, p.v, 1, h);
    const auto m = metric(p.u, p.v);
    auto g = [&](int i, int j) { return i + j == 0 ? m[0] : i + j == 1 ? m[1] : m[2]; };
    auto dg = [&](int k, int i, int j) {
        const auto &d = k == 0 ? du : dv;
        return i + j == 0 ? d[0] : i + j == 1 ? d[1] : d[2];
    };
    const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1);
    const double inv[2][2] = {{g(1, 1) / det, -g(0, 1) / det}, {-g(0, 1) / det, g(0, 0) / det}};

    gans::Christoffel2 c;
    for (int l = 0; l < 2; ++l) {
        for (int m_ = 0; m_ < 2; ++m_) {
            for (int n = 0; n < 2; ++n) {
                double acc = 0.0;
                for (int s = 0; s < 2; ++s) acc += inv[l][s] * (dg(m_, s, n) + dg(n, s, m_) - dg(s, m_, n));
                c.gamma[l][m_][n] = 0.5 * acc;
            }
        }
    }
    return c;
}

gans::GansPoint fd_gauss_map(const ScalarFn &fn, double x, double y, double h)
{
    const auto g = gauss_vec(fn, x, y, h);
    return {g[0], g[1]};
}

gaussmap::Jacobian2 fd_gauss_jacobian(const ScalarFn &fn, double x, double y, double h)
{
    auto phi = [&](double a, double b) { return gauss_vec(fn, a, b, h); };
    const auto dx = d1_vec<2>(phi, x, y, 0, h);
    const auto dy = d1_vec<2>(phi, x, y, 1, h);
    return {{{{dx[0], dy[0]}, {dx[1], dy[1]}}}};
}

gaussmap::TensionValue fd_tension(const ScalarFn &fn, double x, double y, double h)
{
    auto flux = [&](double a, double b) { return fluxes(fn, a, b, h); };
    const auto c = flux(x, y);
    const auto dx = d1_vec<5>(flux, x, y, 0, h);
    const auto dy = d1_vec<5>(flux, x, y, 1, h);
    const double sq = c[4];
    std::array<double, 2> tau{(dx[0] + dy[1]) / sq, (dx[2] + dy[3]) / sq};

    const gans::GansPoint phi = fd_gauss_map(fn, x, y, h);
    const gaussmap::Jacobian2 J = fd_gauss_jacobian(fn, x, y, h);
    const gans::Christoffel2 gamma = fd_christoffel(phi);
    const double p = -phi.u, q = -phi.v;
    const double g11 = 1.0 + p * p, g12 = p * q, g22 = 1.0 + q * q;
    const double det = g11 * g22 - g12 * g12;
    const double ginv[2][2] = {{g22 / det, -g12 / det}, {-g12 / det, g11 / det}};
    for (int a = 0; a < 2; ++a) {
        for (int i = 0; i < 2; ++i) {
            for (int k = 0; k < 2; ++k) {
                for (int b = 0; b < 2; ++b) {
                    for (int e = 0; e < 2; ++e) tau[a] += ginv[i][k] * gamma(a, b, e) * J.m[b][i] * J.m[e][k];
                }
            }
        }
    }
    return {tau[0], tau[1]};
}

double fd_mean_curvature(const ScalarFn &fn, double x, double y, double h) { return mean_and_w(fn, x, y, h)[0]; }

gaussmap::ResidualPair fd_hg_residual(const ScalarFn &fn, double x, double y, double h)
{
    const gaussmap::TensionValue tau = fd_tension(fn, x, y, h);
    auto hw = [&](double a, double b) { return mean_and_w(fn, a, b, h); };
    const auto c = hw(x, y);
    const auto dx = d1_vec<2>(hw, x, y, 0, h);
    const auto dy = d1_vec<2>(hw, x, y, 1, h);
    const double H = c[0], w = c[1];
    const gans::GansPoint phi = fd_gauss_map(fn, x, y, h);
    const double p = -phi.u, q = -phi.v;
    const double rhs1 = H * (2.0 * q / w - 4.0 * dx[1] + 4.0 * p * H * w * w);
    const double rhs2 = H * (-2.0 * p / w - 4.0 * dy[1] + 4.0 * q * H * w * w);
    return {tau.t1 + 2.0 * w * dx[0] - rhs1, tau.t2 + 2.0 * w * dy[0] - rhs2};
}

gaussmap::ResidualPair fd_tension_plus_mean_gradient(const ScalarFn &fn, double x, double y, double h)
{
    const gaussmap::TensionValue tau = fd_tension(fn, x, y, h);
    auto two_hw = [&](double a, double b) {
        const auto m = mean_and_w(fn, a, b, h);
        return std::array<double, 1>{2.0 * m[0] * m[1]};
    };
    return {tau.t1 + d1_vec<1>(two_hw, x, y, 0, h)[0], tau.t2 + d1_vec<1>(two_hw, x, y, 1, h)[0]};
}

} // namespace hgauss::oracle
