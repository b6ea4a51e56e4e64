#include "hgauss/grid.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hgauss/gaussmap.hpp"

namespace hgauss::grid {

namespace {

double parse_number(std::string_view s, std::string_view what)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument(std::string(what) + ": '" + std::string(s) + "' is not a number");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::array<double, kColumnCount> as_array(const GridRow &r)
{
    return {r.x, r.y, r.f, r.p, r.q, r.w, r.E, r.F, r.G, r.L, r.M, r.N,
            r.H, r.phi_u, r.phi_v, r.det_phi, r.tau1, r.tau2};
}

} // namespace

const std::vector<std::string_view> &column_names()
{
    static const std::vector<std::string_view> names{"x", "y", "f", "p", "q", "w", "E", "F", "G",
                                                     "L", "M", "N", "H", "phi_u", "phi_v", "det_phi",
                                                     "tau1", "tau2"};
    return names;
}

surface::Domain parse_domain(std::string_view text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 4) throw std::invalid_argument("domain must be x0,x1,y0,y1");
    surface::Domain d{parse_number(parts[0], "domain"), parse_number(parts[1], "domain"),
                      parse_number(parts[2], "domain"), parse_number(parts[3], "domain")};
    if (!(d.x0 < d.x1) || !(d.y0 < d.y1)) throw std::invalid_argument("domain must satisfy x0 < x1 and y0 < y1");
    return d;
}

SurfaceRef parse_surface_ref(std::string_view text)
{
    SurfaceRef ref;
    std::string_view body;
    if (text.starts_with("catalog:")) {
        ref.kind = SurfaceRef::Kind::Catalog;
        body = text.substr(8);
    } else if (text.starts_with("expr:")) {
        ref.kind = SurfaceRef::Kind::Expression;
        body = text.substr(5);
    } else {
        throw std::invalid_argument("surface reference must start with 'catalog:' or 'expr:'");
    }

    const auto qpos = body.find('?');
    ref.name_or_text = std::string(body.substr(0, qpos));
    if (ref.name_or_text.empty()) throw std::invalid_argument("surface reference has an empty body");
    if (qpos == std::string_view::npos) return ref;

    for (std::string_view item : split(body.substr(qpos + 1), '&')) {
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw std::invalid_argument("malformed query item '" + std::string(item) + "'");
        }
        const std::string key(item.substr(0, eq));
        const std::string_view value = item.substr(eq + 1);
        if (key == "domain") {
            ref.domain = parse_domain(value);
        } else if (!ref.params.emplace(key, parse_number(value, key)).second) {
            throw std::invalid_argument("parameter '" + key + "' given twice");
        }
    }
    return ref;
}

surface::SurfaceSpec resolve(const SurfaceRef &ref)
{
    surface::SurfaceSpec spec = [&]() -> surface::SurfaceSpec {
        if (ref.kind == SurfaceRef::Kind::Catalog) return surface::catalog(ref.name_or_text, ref.params);
        std::vector<std::string> names;
        for (const auto &[k, v] : ref.params) names.push_back(k);
        return surface::GraphSurface{expr::parse(ref.name_or_text, {"x", "y"}, names), ref.params, {}};
    }();
    if (ref.domain) {
        const auto &d = *ref.domain;
        std::visit(
            [&](auto &s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, surface::VerticalSurface>) {
                    s.t0 = d.x0;
                    s.t1 = d.x1;
                } else {
                    s.domain = d;
                }
            },
            spec);
    }
    return spec;
}

GridRow sample_point(const surface::SurfaceSpec &spec, double a, double b)
{
    GridRow r{};
    if (const auto *v = std::get_if<surface::VerticalSurface>(&spec)) {
        const auto ff = surface::forms_vertical(*v, a);
        r = {a, expr::eval_value(v->a, std::span<const double>(&a, 1), v->params), b,
             kNaN, kNaN, kNaN,
             ff.E, ff.F, ff.G, ff.L, ff.M, ff.N,
             surface::mean_curvature(ff),
             kNaN, kNaN, kNaN, kNaN, kNaN};
        return r;
    }
    const auto d = surface::graph_point(spec, a, b);
    const auto ff = surface::forms_graph(d);
    const auto phi = gaussmap::gauss_map(d);
    const auto tau = gaussmap::tension_field(d);
    return {d.x, d.y, d.jet.f,
            d.p, d.q, d.w,
            ff.E, ff.F, ff.G, ff.L, ff.M, ff.N,
            surface::mean_curvature(ff),
            phi.u, phi.v, gaussmap::gauss_det(d),
            tau.t1, tau.t2};
}

std::vector<GridRow> sample_grid(const surface::SurfaceSpec &spec, std::size_t nx, std::size_t ny,
                                 std::optional<surface::Domain> domain)
{
    if (nx < 2 || ny < 2) throw std::invalid_argument("sample_grid: nx and ny must be at least 2");
    const surface::Domain d = domain.value_or(surface::domain_of(spec));
    const std::size_t total = nx * ny;
    std::vector<GridRow> rows(total);

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_index = total;
    std::string error_text;

    auto worker = [&] {
        for (std::size_t k = next++; k < total; k = next++) {
            const std::size_t i = k % nx, j = k / nx;
            const double a = d.x0 + (d.x1 - d.x0) * static_cast<double>(i) / static_cast<double>(nx - 1);
            const double b = d.y0 + (d.y1 - d.y0) * static_cast<double>(j) / static_cast<double>(ny - 1);
            try {
                rows[k] = sample_point(spec, a, b);
            } catch (const std::exception &e) {
                std::lock_guard lock(error_mutex);
                // Report the lowest failing index so the message is deterministic.
                if (k < error_index) {
                    error_index = k;
                    error_text = "node " + std::to_string(k) + " (i=" + std::to_string(i) + ", j=" + std::to_string(j)
                                 + ") at (" + format_double(a) + ", " + format_double(b) + "): " + e.what();
                }
            }
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t n_threads = std::min<std::size_t>(hw, total);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();

    if (error_index < total) throw std::domain_error(error_text);
    return rows;
}

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_short(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string to_csv(const std::vector<GridRow> &rows)
{
    std::string out;
    const auto &names = column_names();
    for (std::size_t c = 0; c < names.size(); ++c) {
        if (c) out += ',';
        out += names[c];
    }
    out += '\n';
    for (const auto &r : rows) {
        const auto vals = as_array(r);
        for (std::size_t c = 0; c < vals.size(); ++c) {
            if (c) out += ',';
            out += format_double(vals[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<GridRow> &rows)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    const auto &names = column_names();
    for (const auto &r : rows) {
        nlohmann::ordered_json obj;
        const auto vals = as_array(r);
        for (std::size_t c = 0; c < vals.size(); ++c) {
            const std::string key(names[c]);
            if (std::isfinite(vals[c])) {
                obj[key] = vals[c];
            } else {
                obj[key] = nullptr;
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

} // namespace hgauss::grid
