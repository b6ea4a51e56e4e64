#include "hgauss/surface.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hgauss::surface {

using expr::Jet3;

bool is_graph(const SurfaceSpec &spec) { return !std::holds_alternative<VerticalSurface>(spec); }

Domain domain_of(const SurfaceSpec &spec)
{
    if (const auto *g = std::get_if<GraphSurface>(&spec)) return g->domain;
    if (const auto *p = std::get_if<ProfileGraphSurface>(&spec)) return p->domain;
    const auto &v = std::get<VerticalSurface>(spec);
    return {v.t0, v.t1, -1.0, 1.0};
}

GraphPointData make_graph_point(double x, double y, const Jet3 &jet)
{
    GraphPointData d;
    d.x = x;
    d.y = y;
    d.jet = jet;
    d.p = jet.fx + y / 2.0;
    d.q = jet.fy - x / 2.0;
    d.w = std::sqrt(1.0 + d.p * d.p + d.q * d.q);
    return d;
}

namespace {

// Jet of f(x, y) = x h(y) at (x, y(s)).
GraphPointData profile_graph_point(const ProfileGraphSurface &spec, double x, double s)
{
    const Jet3 Y = expr::eval_jet3(spec.y_of_s, s, 0.0, spec.params);
    const Jet3 h = expr::eval_jet3(spec.h_of_s, s, 0.0, spec.params);
    const double y1 = Y.fx, y2 = Y.fxx, y3 = Y.fxxx;
    if (y1 == 0.0) throw std::domain_error("profile graph: dy/ds vanishes, y(s) is not invertible here");
    // h_s = h_y y', h_ss = h_yy y'^2 + h_y y'', h_sss = h_yyy y'^3 + 3 h_yy y' y'' + h_y y'''.
    const double hy = h.fx / y1;
    const double hyy = (h.fxx - hy * y2) / (y1 * y1);
    const double hyyy = (h.fxxx - 3.0 * hyy * y1 * y2 - hy * y3) / (y1 * y1 * y1);

    Jet3 j;
    j.f = x * h.f;
    j.fx = h.f;
    j.fy = x * hy;
    j.fxx = 0.0;
    j.fxy = hy;
    j.fyy = x * hyy;
    j.fxxx = 0.0;
    j.fxxy = 0.0;
    j.fxyy = hyy;
    j.fyyy = x * hyyy;
    return make_graph_point(x, Y.f, j);
}

} // namespace

GraphPointData graph_point(const SurfaceSpec &spec, double a, double b)
{
    if (const auto *g = std::get_if<GraphSurface>(&spec)) {
        return make_graph_point(a, b, expr::eval_jet3(g->f, a, b, g->params));
    }
    if (const auto *p = std::get_if<ProfileGraphSurface>(&spec)) return profile_graph_point(*p, a, b);
    throw std::invalid_argument("graph_point: surface is not a graph");
}

heis::FrameVector unit_normal(const GraphPointData &d) { return {-d.p / d.w, -d.q / d.w, 1.0 / d.w}; }
heis::FrameVector tangent_x(const GraphPointData &d) { return {1.0, 0.0, d.p}; }
heis::FrameVector tangent_y(const GraphPointData &d) { return {0.0, 1.0, d.q}; }

FundamentalForms forms_graph(const GraphPointData &d)
{
    const double p = d.p, q = d.q, w = d.w;
    FundamentalForms ff;
    ff.E = 1.0 + p * p;
    ff.F = p * q;
    ff.G = 1.0 + q * q;
    ff.L = (d.jet.fxx + q * p) / w;
    ff.M = (d.jet.fxy + 0.5 * q * q - 0.5 * p * p) / w;
    ff.N = (d.jet.fyy - q * p) / w;
    return ff;
}

Jet3 profile_jet(const VerticalSurface &spec, double t) { return expr::eval_jet3(spec.a, t, 0.0, spec.params); }

FundamentalForms forms_vertical(const VerticalSurface &spec, double t)
{
    const Jet3 a = profile_jet(spec, t);
    const double da = a.fx, dda = a.fxx;
    const double shift = a.f - t * da;
    const double r = std::sqrt(1.0 + da * da);
    FundamentalForms ff;
    ff.E = 1.0 + da * da + shift * shift / 4.0;
    ff.F = shift / 2.0;
    ff.G = 1.0;
    ff.L = (shift * (1.0 + da * da) - 2.0 * dda) / (2.0 * r);
    ff.M = r / 2.0;
    ff.N = 0.0;
    return ff;
}

double mean_curvature(const FundamentalForms &ff)
{
    const double det = ff.detI();
    if (!(det > 0.0) || !(ff.E > 0.0) || !(ff.G > 0.0)) {
        throw std::domain_error("mean_curvature: first fundamental form is degenerate");
    }
    return 0.5 * (ff.E * ff.N + ff.G * ff.L - 2.0 * ff.F * ff.M) / det;
}

double minimal_residual_graph(const GraphPointData &d)
{
    const double p = d.p, q = d.q;
    return (1.0 + q * q) * d.jet.fxx - 2.0 * p * q * d.jet.fxy + (1.0 + p * p) * d.jet.fyy;
}

double cmc_vertical_profile(double H, double t)
{
    const double den = 1.0 + 2.0 * H * t;
    if (den == 0.0) throw std::domain_error("cmc_vertical_profile: 1 + 2Ht vanishes");
    const double r = -2.0 * H * t / den;
    if (r < 0.0) throw std::domain_error("cmc_vertical_profile: t outside the admissible interval");
    return t * std::sqrt(r);
}

std::array<double, 2> cmc_admissible_interval(double H)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (H < 0.0) return {0.0, -1.0 / (2.0 * H)};
    if (H > 0.0) return {-1.0 / (2.0 * H), 0.0};
    return {-inf, inf};
}

heis::FrameVector weingarten(const GraphPointData &d, std::array<double, 2> v)
{
    const auto &j = d.jet;
    const double p = d.p, q = d.q, w = d.w;
    const double px = j.fxx, py = j.fxy + 0.5;
    const double qx = j.fxy - 0.5, qy = j.fyy;
    const double wx = (p * px + q * qx) / w;
    const double wy = (p * py + q * qy) / w;

    // Directional derivatives along v of p, q, w and of the normal components.
    const double dp = v[0] * px + v[1] * py;
    const double dq = v[0] * qx + v[1] * qy;
    const double dw = v[0] * wx + v[1] * wy;
    const heis::FrameVector deta{-(dp * w - p * dw) / (w * w), -(dq * w - q * dw) / (w * w), -dw / (w * w)};

    const heis::FrameVector dir = v[0] * tangent_x(d) + v[1] * tangent_y(d);
    return -heis::covariant_derivative(unit_normal(d), deta, dir);
}

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kT{"t"};
const std::vector<std::string> kS{"s"};

std::vector<std::string> names_of(const expr::ParamMap &m)
{
    std::vector<std::string> out;
    for (const auto &[k, v] : m) out.push_back(k);
    return out;
}

} // namespace

const std::vector<CatalogEntry> &catalog_entries()
{
    static const std::vector<CatalogEntry> entries{
        {"plane", "minimal graph f = a x + b y + c", {{"a", 1.0}, {"b", 2.0}, {"c", 0.0}}},
        {"scherk", "minimal saddle f = xy/2 + k (ln(y + sqrt(1+y^2)) + y sqrt(1+y^2))", {{"k", 1.0}}},
        {"daniel", "minimal graph f = x h(y), y = coth s - 2s, h = s - tanh(s)/2, sampled in (x, s)", {}},
        {"rank1", "minimal graph f = xy/2 + k x + c with rank-one Gauss map", {{"c", 0.0}, {"k", 0.5}}},
        {"paraboloid", "non-minimal graph f = (x^2 + y^2)/2", {}},
        {"vertical_plane", "vertical plane A x + B y = C as a(t) = (C - A t)/B", {{"A", 1.0}, {"B", 1.0}, {"C", 0.0}}},
        {"cmc_vertical", "vertical surface a(t) = t sqrt(-2Ht/(1+2Ht))", {{"H", -0.5}}},
    };
    return entries;
}

SurfaceSpec catalog(const std::string &name, const expr::ParamMap &params)
{
    const CatalogEntry *entry = nullptr;
    for (const auto &e : catalog_entries()) {
        if (e.name == name) entry = &e;
    }
    if (entry == nullptr) throw std::invalid_argument("unknown catalog surface '" + name + "'");
    expr::ParamMap merged = entry->defaults;
    for (const auto &[k, v] : params) {
        if (!merged.contains(k)) {
            throw std::invalid_argument("catalog surface '" + name + "' has no parameter '" + k + "'");
        }
        merged[k] = v;
    }
    const auto pnames = names_of(merged);

    if (name == "plane") return GraphSurface{expr::parse("a*x+b*y+c", kXY, pnames), merged, {}};
    if (name == "scherk") {
        return GraphSurface{expr::parse("x*y/2+k*(ln(y+sqrt(1+y^2))+y*sqrt(1+y^2))", kXY, pnames), merged, {}};
    }
    if (name == "rank1") return GraphSurface{expr::parse("x*y/2+k*x+c", kXY, pnames), merged, {}};
    if (name == "paraboloid") return GraphSurface{expr::parse("(x^2+y^2)/2", kXY, pnames), merged, {}};
    if (name == "daniel") {
        return ProfileGraphSurface{expr::parse("coth(s)-2*s", kS), expr::parse("s-tanh(s)/2", kS), merged,
                                   Domain{-2.0, 2.0, 0.2, 3.0}};
    }
    if (name == "vertical_plane") {
        if (merged.at("B") == 0.0) {
            throw std::invalid_argument("vertical_plane: B = 0 is not a graph y = a(t) over the x axis");
        }
        return VerticalSurface{expr::parse("(C-A*t)/B", kT, pnames), merged, 0.1, 2.0};
    }
    // cmc_vertical
    const double H = merged.at("H");
    if (H == 0.0) throw std::invalid_argument("cmc_vertical: H must be nonzero");
    const auto [lo, hi] = cmc_admissible_interval(H);
    const double pad = 0.05 * (hi - lo);
    return VerticalSurface{expr::parse("t*sqrt(-2*H*t/(1+2*H*t))", kT, pnames), merged, lo + pad, hi - pad};
}

} // namespace hgauss::surface
