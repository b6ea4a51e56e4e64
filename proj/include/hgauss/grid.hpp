#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgauss/surface.hpp"

namespace hgauss::grid {

/// Parsed surface reference, e.g. "catalog:scherk?k=1" or
/// "expr:x*y/2+k*x?k=0.5&domain=-2,2,-2,2".
struct SurfaceRef {
    enum class Kind { Catalog, Expression };

    Kind kind = Kind::Catalog;
    std::string name_or_text;
    expr::ParamMap params;
    std::optional<surface::Domain> domain;
};

/// Throws std::invalid_argument on malformed text.
SurfaceRef parse_surface_ref(std::string_view text);
surface::Domain parse_domain(std::string_view text);

/// Resolves the reference; a domain in the reference replaces the default one.
surface::SurfaceSpec resolve(const SurfaceRef &ref);

/// One sample. For vertical surfaces x = t, y = a(t), f = s, and the columns
/// that only exist for graphs (p, q, w, phi, det_phi, tau) are NaN.
struct GridRow {
    double x, y, f;
    double p, q, w;
    double E, F, G, L, M, N;
    double H;
    double phi_u, phi_v, det_phi;
    double tau1, tau2;
};

inline constexpr std::size_t kColumnCount = 18;
const std::vector<std::string_view> &column_names();

/// Row at parameter point (a, b): (x, y) for graphs, (x, s) for profile
/// graphs and (t, s) for vertical surfaces.
GridRow sample_point(const surface::SurfaceSpec &spec, double a, double b);

/// nx * ny rows, x index fastest, computed on worker threads and returned in
/// index order. Throws std::domain_error naming the node on evaluation errors.
std::vector<GridRow> sample_grid(const surface::SurfaceSpec &spec, std::size_t nx, std::size_t ny,
                                 std::optional<surface::Domain> domain = std::nullopt);

/// 17 significant digits, "nan" for NaN.
std::string format_double(double v);
/// Three significant digits, for human-readable reports.
std::string format_short(double v);

std::string to_csv(const std::vector<GridRow> &rows);
/// Array of objects keyed by column name; NaN becomes null.
std::string to_json(const std::vector<GridRow> &rows);

} // namespace hgauss::grid
