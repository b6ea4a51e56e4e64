#include "hgauss/gans.hpp"

#include <cmath>
#include <stdexcept>

namespace hgauss::gans {

GansPoint hemisphere_to_plane(double x, double y, double z)
{
    if (std::abs(x * x + y * y + z * z - 1.0) > 1e-9) {
        throw std::domain_error("hemisphere_to_plane: point is not on the unit sphere");
    }
    if (z <= 0.0) throw std::domain_error("hemisphere_to_plane: point is not on the upper hemisphere");
    return {x / z, y / z};
}

DiskPoint gans_to_disk(GansPoint p)
{
    const double s = 1.0 + std::sqrt(1.0 + p.u * p.u + p.v * p.v);
    return {p.u / s, p.v / s};
}

GansPoint disk_to_gans(DiskPoint d)
{
    const double r2 = d.x * d.x + d.y * d.y;
    if (r2 >= 1.0) throw std::domain_error("disk_to_gans: point is outside the open unit disk");
    const double s = 1.0 - r2;
    return {2.0 * d.x / s, 2.0 * d.y / s};
}

Metric2 metric_at(GansPoint p)
{
    const double D = 1.0 + p.u * p.u + p.v * p.v;
    return {(1.0 + p.v * p.v) / D, -p.u * p.v / D, (1.0 + p.u * p.u) / D};
}

Christoffel2 christoffel_at(GansPoint p)
{
    const double u = p.u, v = p.v;
    const double D = u * u + v * v + 1.0;
    Christoffel2 c;
    c.gamma[0][0][0] = -u * (v * v + 1.0) / D;
    c.gamma[0][0][1] = c.gamma[0][1][0] = u * u * v / D;
    c.gamma[0][1][1] = -(u * u * u + u) / D;
    c.gamma[1][0][0] = -(v * v * v + v) / D;
    c.gamma[1][0][1] = c.gamma[1][1][0] = u * v * v / D;
    c.gamma[1][1][1] = -(u * u + 1.0) * v / D;
    return c;
}

namespace {

using State = std::array<double, 4>; // u, v, u', v'

State geodesic_rhs(const State &s)
{
    const Christoffel2 c = christoffel_at({s[0], s[1]});
    const std::array<double, 2> d{s[2], s[3]};
    State out{s[2], s[3], 0.0, 0.0};
    for (int k = 0; k < 2; ++k) {
        double acc = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) acc += c(k, i, j) * d[i] * d[j];
        }
        out[2 + k] = -acc;
    }
    return out;
}

State axpy(const State &s, double h, const State &k)
{
    return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2], s[3] + h * k[3]};
}

State rk4_step(const State &s, double h)
{
    const State k1 = geodesic_rhs(s);
    const State k2 = geodesic_rhs(axpy(s, h / 2.0, k1));
    const State k3 = geodesic_rhs(axpy(s, h / 2.0, k2));
    const State k4 = geodesic_rhs(axpy(s, h, k3));
    State out;
    for (int i = 0; i < 4; ++i) out[i] = s[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

} // namespace

std::vector<GeodesicSample> geodesic(GansPoint start, std::array<double, 2> velocity, double t_max,
                                     double step)
{
    if (!(step > 0.0) || !(t_max > 0.0)) throw std::invalid_argument("geodesic: step and t_max must be positive");
    const double norm = std::sqrt(metric_at(start).inner(velocity, velocity));
    if (norm == 0.0) throw std::invalid_argument("geodesic: zero initial velocity");

    State s{start.u, start.v, velocity[0] / norm, velocity[1] / norm};
    std::vector<GeodesicSample> out;
    out.reserve(static_cast<std::size_t>(std::ceil(t_max / step)) + 1);
    out.push_back({0.0, {s[0], s[1]}, {s[2], s[3]}});
    const auto n = static_cast<long>(std::ceil(t_max / step - 1e-9));
    for (long i = 1; i <= n; ++i) {
        const double t_prev = out.back().t;
        const double t = i == n ? t_max : static_cast<double>(i) * step;
        s = rk4_step(s, t - t_prev);
        out.push_back({t, {s[0], s[1]}, {s[2], s[3]}});
    }
    return out;
}

namespace {

struct Apply {
    GansPoint p;

    GansPoint operator()(const Rotation &r) const
    {
        const double c = std::cos(r.theta), s = std::sin(r.theta);
        return {c * p.u - s * p.v, s * p.u + c * p.v};
    }

    GansPoint operator()(const Reflection &r) const
    {
        const double n2 = r.a * r.a + r.b * r.b;
        if (n2 == 0.0) throw std::invalid_argument("reflection line needs a nonzero normal");
        const double d = (r.a * p.u + r.b * p.v) / n2;
        return {p.u - 2.0 * d * r.a, p.v - 2.0 * d * r.b};
    }

    GansPoint operator()(const DiskMobius &m) const
    {
        if (std::abs(m.a) >= 1.0) throw std::invalid_argument("Mobius parameter must lie in the open disk");
        const DiskPoint d = gans_to_disk(p);
        std::complex<double> z{d.x, d.y};
        if (m.conjugate) z = std::conj(z);
        const std::complex<double> w = std::polar(1.0, m.theta) * (z - m.a) / (1.0 - std::conj(m.a) * z);
        return disk_to_gans({w.real(), w.imag()});
    }
};

struct Invert {
    GansIsometry operator()(const Rotation &r) const { return Rotation{-r.theta}; }
    GansIsometry operator()(const Reflection &r) const { return r; }

    // rho^{-1}(w) = e^{-i theta} (w - a') / (1 - conj(a') w) with a' = -a e^{i theta};
    // with a leading conjugation the inverse is conj o rho^{-1}, which again has
    // the normal form with parameter conj(a') and angle theta.
    GansIsometry operator()(const DiskMobius &m) const
    {
        const std::complex<double> a_inv = -m.a * std::polar(1.0, m.theta);
        if (!m.conjugate) return DiskMobius{a_inv, -m.theta, false};
        return DiskMobius{std::conj(a_inv), m.theta, true};
    }
};

} // namespace

GansPoint apply_isometry(const GansIsometry &iso, GansPoint p) { return std::visit(Apply{p}, iso); }

GansIsometry inverse(const GansIsometry &iso) { return std::visit(Invert{}, iso); }

} // namespace hgauss::gans
