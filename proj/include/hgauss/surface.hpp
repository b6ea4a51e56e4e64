#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "hgauss/expr.hpp"
#include "hgauss/heis.hpp"

namespace hgauss::surface {

/// Parameter rectangle [x0, x1] x [y0, y1].
struct Domain {
    double x0 = -2.0, x1 = 2.0;
    double y0 = -2.0, y1 = 2.0;
};

/// Graph X(x, y) = (x, y, f(x, y)).
struct GraphSurface {
    expr::Expression f;
    expr::ParamMap params;
    Domain domain;
};

/// Graph of f(x, y) = x h(y) where y and h are both given as functions of a
/// profile parameter s. Points are addressed by (x, s); derivatives in y come
/// from the chain rule through y(s).
struct ProfileGraphSurface {
    expr::Expression y_of_s;
    expr::Expression h_of_s;
    expr::ParamMap params;
    Domain domain; // x range, then s range
};

/// Vertical ruled surface X(t, s) = (t, a(t), s).
struct VerticalSurface {
    expr::Expression a;
    expr::ParamMap params;
    double t0 = 0.1, t1 = 2.0;
};

using SurfaceSpec = std::variant<GraphSurface, ProfileGraphSurface, VerticalSurface>;

bool is_graph(const SurfaceSpec &spec);
Domain domain_of(const SurfaceSpec &spec);

/// Per-point data of a graph: p = f_x + y/2, q = f_y - x/2, w = sqrt(1 + p^2 + q^2).
struct GraphPointData {
    double x = 0.0;
    double y = 0.0;
    expr::Jet3 jet;
    double p = 0.0;
    double q = 0.0;
    double w = 1.0;
};

GraphPointData make_graph_point(double x, double y, const expr::Jet3 &jet);

/// (a, b) are (x, y) for plain graphs and (x, s) for profile graphs.
GraphPointData graph_point(const SurfaceSpec &spec, double a, double b);

struct FundamentalForms {
    double E = 1.0, F = 0.0, G = 1.0;
    double L = 0.0, M = 0.0, N = 0.0;

    double detI() const { return E * G - F * F; }
};

/// Upward unit normal in frame components (-p/w, -q/w, 1/w).
heis::FrameVector unit_normal(const GraphPointData &d);

/// Frame components of X_x and X_y.
heis::FrameVector tangent_x(const GraphPointData &d);
heis::FrameVector tangent_y(const GraphPointData &d);

FundamentalForms forms_graph(const GraphPointData &d);

/// Jet of a(t) in its x slot: f = a, fx = a', fxx = a'', fxxx = a'''.
expr::Jet3 profile_jet(const VerticalSurface &spec, double t);
FundamentalForms forms_vertical(const VerticalSurface &spec, double t);

/// H = (EN + GL - 2FM) / (2 (EG - F^2)).
double mean_curvature(const FundamentalForms &forms);

/// (1 + q^2) f_xx - 2 p q f_xy + (1 + p^2) f_yy, which equals 2 H w^3.
double minimal_residual_graph(const GraphPointData &d);

/// a(t) = t sqrt(-2Ht / (1 + 2Ht)).
double cmc_vertical_profile(double H, double t);

/// Open t-interval on which cmc_vertical_profile(H, .) is defined and smooth.
std::array<double, 2> cmc_admissible_interval(double H);

/// A_eta v = -nabla_v eta for v = v[0] X_x + v[1] X_y, in frame components.
heis::FrameVector weingarten(const GraphPointData &d, std::array<double, 2> v);

struct CatalogEntry {
    std::string name;
    std::string description;
    expr::ParamMap defaults;
};

const std::vector<CatalogEntry> &catalog_entries();

/// Catalog surface with defaults overridden by params. Throws
/// std::invalid_argument for an unknown name or parameter.
SurfaceSpec catalog(const std::string &name, const expr::ParamMap &params = {});

} // namespace hgauss::surface
