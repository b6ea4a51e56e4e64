#include "hgauss/harness.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hgauss/gans.hpp"
#include "hgauss/gaussmap.hpp"
#include "hgauss/grid.hpp"
#include "hgauss/heis.hpp"
#include "hgauss/oracle.hpp"
#include "hgauss/surface.hpp"

namespace hgauss::harness {

namespace {

using std::numbers::pi;
using surface::GraphSurface;
using surface::SurfaceSpec;

// A check with one or more residual channels, each with its own tolerance.
// The reported residual and tolerance are those of the worst channel relative
// to its tolerance. A tolerance override replaces every channel tolerance.
class Check {
public:
    Check(std::string id, const SuiteOptions &options) : id_(std::move(id)), override_(options.tolerance) {}

    std::size_t channel(std::string name, double tolerance)
    {
        channels_.push_back({std::move(name), override_.value_or(tolerance), 0.0});
        return channels_.size() - 1;
    }

    void add(std::size_t ch, double residual)
    {
        auto &c = channels_[ch];
        if (std::isnan(c.max)) return;
        c.max = std::isnan(residual) ? residual : std::max(c.max, std::abs(residual));
    }

    void require(bool ok, const std::string &what)
    {
        if (!ok) failures_.push_back(what);
    }

    void note(const std::string &text) { notes_.push_back(text); }

    CheckResult finish() const
    {
        CheckResult r;
        r.id = id_;
        bool ok = failures_.empty();
        double worst = -1.0;
        std::ostringstream note;
        for (const auto &c : channels_) {
            const bool pass = c.max <= c.tol;
            ok = ok && pass;
            const double ratio = std::isnan(c.max) ? std::numeric_limits<double>::infinity()
                                 : c.tol > 0.0    ? c.max / c.tol
                                 : c.max > 0.0    ? std::numeric_limits<double>::infinity()
                                                  : 0.0;
            if (ratio > worst) {
                worst = ratio;
                r.max_residual = c.max;
                r.tolerance = c.tol;
            }
            if (channels_.size() > 1) {
                if (note.tellp() > 0) note << "; ";
                note << c.name << ' ' << grid::format_short(c.max) << '/' << grid::format_short(c.tol);
            }
        }
        for (const auto &f : failures_) {
            if (note.tellp() > 0) note << "; ";
            note << "FAILED: " << f;
        }
        for (const auto &n : notes_) {
            if (note.tellp() > 0) note << "; ";
            note << n;
        }
        r.pass = ok;
        r.note = note.str();
        return r;
    }

private:
    struct Channel {
        std::string name;
        double tol;
        double max;
    };

    std::string id_;
    std::optional<double> override_;
    std::vector<Channel> channels_;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

const GraphSurface &as_graph(const SurfaceSpec &spec) { return std::get<GraphSurface>(spec); }

GraphSurface graph_from_text(const std::string &text)
{
    return {expr::parse(text, {"x", "y"}), {}, {-1.0, 1.0, -1.0, 1.0}};
}

// n x n grid over a rectangle, endpoints included.
std::vector<std::array<double, 2>> lattice(const surface::Domain &d, int n)
{
    std::vector<std::array<double, 2>> pts;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            pts.push_back({d.x0 + (d.x1 - d.x0) * i / (n - 1), d.y0 + (d.y1 - d.y0) * j / (n - 1)});
        }
    }
    return pts;
}

const surface::Domain kUnitSquare{-1.0, 1.0, -1.0, 1.0};

// Five seeded random functions shared by the identity checks.
std::vector<std::string> random_set(const SuiteOptions &o)
{
    RandomSurfaceGenerator gen(o.seed);
    std::vector<std::string> out;
    for (int i = 0; i < 5; ++i) out.push_back(gen.next());
    return out;
}

std::vector<SurfaceSpec> minimal_graphs()
{
    return {
        surface::catalog("plane"),
        surface::catalog("plane", {{"a", -1.5}, {"b", 0.5}, {"c", 2.0}}),
        surface::catalog("scherk", {{"k", 0.5}}),
        surface::catalog("scherk", {{"k", 1.0}}),
        surface::catalog("scherk", {{"k", 2.0}}),
        surface::catalog("daniel"),
    };
}

// ---------------------------------------------------------------- gans

CheckResult criterion_christoffel(const SuiteOptions &o)
{
    Check c("criterion-01 christoffel-table-vs-metric", o);
    const auto ch = c.channel("max-abs", 1e-10);
    RandomSurfaceGenerator gen(o.seed);
    const auto start = std::chrono::steady_clock::now();
    for (int n = 0; n < 100; ++n) {
        const gans::GansPoint p{gen.uniform(-3.0, 3.0), gen.uniform(-3.0, 3.0)};
        const auto table = gans::christoffel_at(p);
        const auto fd = oracle::fd_christoffel(p);
        for (int k = 0; k < 2; ++k) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) c.add(ch, table(k, i, j) - fd(k, i, j));
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(secs < 1.0, "runtime " + grid::format_short(secs) + " s exceeds 1 s");
    c.note("100 points in [-3,3]^2, " + grid::format_short(secs) + " s");
    return c.finish();
}

// Nonuniform second difference at interior sample i.
double second_difference(const std::vector<gans::GeodesicSample> &s, std::size_t i, int comp)
{
    auto val = [&](std::size_t k) { return comp == 0 ? s[k].point.u : s[k].point.v; };
    const double hm = s[i].t - s[i - 1].t, hp = s[i + 1].t - s[i].t;
    return 2.0 * ((val(i + 1) - val(i)) / hp - (val(i) - val(i - 1)) / hm) / (hm + hp);
}

CheckResult criterion_geodesic(const SuiteOptions &o)
{
    Check c("criterion-02 geodesic-law", o);
    const auto ode = c.channel("u''-u,v''-v", 1e-5);
    const auto exact = c.channel("sinh", 1e-6);

    const auto origin = gans::geodesic({0.0, 0.0}, {1.0, 0.0}, 2.0, 1e-3);
    for (const auto &s : origin) {
        c.add(exact, s.point.u - std::sinh(s.t));
        c.add(exact, s.point.v);
    }

    RandomSurfaceGenerator gen(o.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::vector<gans::GeodesicSample>> paths{origin};
    for (int n = 0; n < 4; ++n) {
        const gans::GansPoint p{gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0)};
        const double ang = gen.uniform(0.0, 2.0 * pi);
        paths.push_back(gans::geodesic(p, {std::cos(ang), std::sin(ang)}, 2.0, 1e-3));
    }
    for (const auto &path : paths) {
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            c.add(ode, second_difference(path, i, 0) - path[i].point.u);
            c.add(ode, second_difference(path, i, 1) - path[i].point.v);
        }
    }
    return c.finish();
}

CheckResult gans_speed(const SuiteOptions &o)
{
    Check c("gans.unit-speed-conserved", o);
    const auto ch = c.channel("|h(v,v)-1|", 1e-8);
    RandomSurfaceGenerator gen(o.seed ^ 0x51ULL);
    for (int n = 0; n < 5; ++n) {
        const gans::GansPoint p{gen.uniform(-2.0, 2.0), gen.uniform(-2.0, 2.0)};
        const double ang = gen.uniform(0.0, 2.0 * pi);
        for (const auto &s : gans::geodesic(p, {std::cos(ang), std::sin(ang)}, 2.0, 1e-3)) {
            c.add(ch, gans::metric_at(s.point).inner(s.velocity, s.velocity) - 1.0);
        }
    }
    return c.finish();
}

std::vector<gans::GansIsometry> sample_gans_isometries()
{
    return {
        gans::Rotation{0.7},
        gans::Reflection{1.0, -2.0},
        gans::DiskMobius{{0.3, 0.2}, 0.5, false},
        gans::DiskMobius{{-0.1, 0.4}, 1.1, true},
    };
}

CheckResult gans_isometries(const SuiteOptions &o)
{
    Check c("gans.isometries-preserve-metric", o);
    const auto pull = c.channel("pullback", 1e-8);
    const auto inv = c.channel("inverse", 1e-12);
    RandomSurfaceGenerator gen(o.seed ^ 0x52ULL);
    const double h = 1e-4;
    for (const auto &iso : sample_gans_isometries()) {
        const auto back = gans::inverse(iso);
        for (int n = 0; n < 20; ++n) {
            const gans::GansPoint p{gen.uniform(-2.0, 2.0), gen.uniform(-2.0, 2.0)};
            std::array<std::array<double, 2>, 2> J{};
            for (int dir = 0; dir < 2; ++dir) {
                auto at = [&](double k) {
                    return gans::apply_isometry(iso, {p.u + (dir == 0 ? k * h : 0.0), p.v + (dir == 1 ? k * h : 0.0)});
                };
                const auto m2 = at(-2), m1 = at(-1), p1 = at(1), p2 = at(2);
                J[dir] = {(m2.u - 8 * m1.u + 8 * p1.u - p2.u) / (12 * h), (m2.v - 8 * m1.v + 8 * p1.v - p2.v) / (12 * h)};
            }
            const auto src = gans::metric_at(p);
            const auto dst = gans::metric_at(gans::apply_isometry(iso, p));
            c.add(pull, dst.inner(J[0], J[0]) - src.h11);
            c.add(pull, dst.inner(J[0], J[1]) - src.h12);
            c.add(pull, dst.inner(J[1], J[1]) - src.h22);

            const auto rt = gans::apply_isometry(back, gans::apply_isometry(iso, p));
            const double scale = std::max(1.0, std::hypot(p.u, p.v));
            c.add(inv, std::hypot(rt.u - p.u, rt.v - p.v) / scale);
        }
    }
    return c.finish();
}

CheckResult gans_disk_round_trip(const SuiteOptions &o)
{
    Check c("gans.disk-round-trip", o);
    const auto ch = c.channel("relative", 1e-12);
    RandomSurfaceGenerator gen(o.seed ^ 0x53ULL);
    for (int n = 0; n < 100; ++n) {
        const double r = 0.9 * std::sqrt(gen.uniform(0.0, 1.0)), a = gen.uniform(0.0, 2.0 * pi);
        const gans::DiskPoint d{r * std::cos(a), r * std::sin(a)};
        const auto g = gans::disk_to_gans(d);
        const auto d2 = gans::gans_to_disk(g);
        c.add(ch, std::hypot(d2.x - d.x, d2.y - d.y));
        const gans::GansPoint p{gen.uniform(-5.0, 5.0), gen.uniform(-5.0, 5.0)};
        const auto p2 = gans::disk_to_gans(gans::gans_to_disk(p));
        c.add(ch, std::hypot(p2.u - p.u, p2.v - p.v) / std::max(1.0, std::hypot(p.u, p.v)));
    }
    return c.finish();
}

// ---------------------------------------------------------------- heis

heis::HeisPoint random_heis(RandomSurfaceGenerator &gen, double r)
{
    return {gen.uniform(-r, r), gen.uniform(-r, r), gen.uniform(-r, r)};
}

double heis_distance(const heis::HeisPoint &a, const heis::HeisPoint &b)
{
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

CheckResult heis_group(const SuiteOptions &o)
{
    Check c("heis.group-axioms", o);
    const auto ch = c.channel("max-abs", 1e-12);
    RandomSurfaceGenerator gen(o.seed ^ 0x61ULL);
    for (int n = 0; n < 100; ++n) {
        const auto a = random_heis(gen, 3.0), b = random_heis(gen, 3.0), d = random_heis(gen, 3.0);
        c.add(ch, heis_distance(heis::multiply(heis::multiply(a, b), d), heis::multiply(a, heis::multiply(b, d))));
        c.add(ch, heis_distance(heis::multiply(a, {}), a));
        c.add(ch, heis_distance(heis::multiply({}, a), a));
        c.add(ch, heis_distance(heis::multiply(a, heis::inverse(a)), {}));
        c.add(ch, heis_distance(heis::multiply(heis::inverse(a), a), {}));
    }
    return c.finish();
}

double metric_pair(const heis::Matrix3 &g, const heis::Vec3 &a, const heis::Vec3 &b)
{
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) s += g[i][j] * a[i] * b[j];
    }
    return s;
}

// Fourth-order Jacobian of a map R^3 -> R^3, columns are images of d/dx, d/dy, d/dz.
template <typename F>
heis::Matrix3 fd_jacobian3(const F &map, const heis::HeisPoint &p, double h)
{
    heis::Matrix3 cols{};
    for (int dir = 0; dir < 3; ++dir) {
        auto at = [&](double k) {
            heis::HeisPoint q = p;
            (dir == 0 ? q.x : dir == 1 ? q.y : q.z) += k * h;
            return map(q);
        };
        const auto m2 = at(-2), m1 = at(-1), p1 = at(1), p2 = at(2);
        cols[dir] = {(m2.x - 8 * m1.x + 8 * p1.x - p2.x) / (12 * h), (m2.y - 8 * m1.y + 8 * p1.y - p2.y) / (12 * h),
                     (m2.z - 8 * m1.z + 8 * p1.z - p2.z) / (12 * h)};
    }
    return cols;
}

heis::Vec3 apply_columns(const heis::Matrix3 &cols, const heis::Vec3 &v)
{
    heis::Vec3 out{};
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 3; ++i) out[i] += cols[k][i] * v[k];
    }
    return out;
}

CheckResult heis_frame(const SuiteOptions &o)
{
    Check c("heis.frame-orthonormal-left-invariant", o);
    const auto ortho = c.channel("orthonormal", 1e-12);
    const auto invariant = c.channel("left-invariant", 1e-8);
    RandomSurfaceGenerator gen(o.seed ^ 0x62ULL);
    for (int n = 0; n < 50; ++n) {
        const auto p = random_heis(gen, 3.0);
        const auto F = heis::frame_at(p);
        const auto g = heis::metric_at(p);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) c.add(ortho, metric_pair(g, F[i], F[j]) - (i == j ? 1.0 : 0.0));
        }
        // dL_a E_i(p) = E_i(a * p).
        const auto a = random_heis(gen, 3.0);
        const auto J = fd_jacobian3([&](const heis::HeisPoint &q) { return heis::multiply(a, q); }, p, 1e-3);
        const auto Fa = heis::frame_at(heis::multiply(a, p));
        for (int i = 0; i < 3; ++i) {
            const auto pushed = apply_columns(J, F[i]);
            for (int k = 0; k < 3; ++k) c.add(invariant, pushed[k] - Fa[i][k]);
        }
    }
    return c.finish();
}

CheckResult heis_isometries(const SuiteOptions &o)
{
    Check c("heis.isometries-preserve-metric", o);
    const auto ch = c.channel("pullback", 1e-8);
    RandomSurfaceGenerator gen(o.seed ^ 0x63ULL);
    const std::vector<heis::HeisIsometry> isos{
        {{1.0, -2.0, 3.0}, heis::HeisIsometry::Kind::Rotation, 0.0},
        {{0.0, 0.0, 0.0}, heis::HeisIsometry::Kind::Rotation, pi / 6.0},
        {{0.5, 0.25, -1.0}, heis::HeisIsometry::Kind::Rotation, 2.0},
        {{0.0, 0.0, 0.0}, heis::HeisIsometry::Kind::Reflection, pi / 2.0},
        {{1.0, -2.0, 3.0}, heis::HeisIsometry::Kind::Reflection, pi / 6.0},
    };
    for (const auto &iso : isos) {
        for (int n = 0; n < 20; ++n) {
            const auto p = random_heis(gen, 2.0);
            const auto J = fd_jacobian3([&](const heis::HeisPoint &q) { return heis::apply_isometry(iso, q); }, p, 1e-3);
            const auto src = heis::metric_at(p);
            const auto dst = heis::metric_at(heis::apply_isometry(iso, p));
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    heis::Vec3 ei{}, ej{};
                    ei[i] = 1.0;
                    ej[j] = 1.0;
                    c.add(ch, metric_pair(dst, apply_columns(J, ei), apply_columns(J, ej)) - src[i][j]);
                }
            }
        }
    }
    return c.finish();
}

// Smooth test field on R^3 in frame components.
heis::FrameVector test_field(const heis::HeisPoint &p, int which)
{
    if (which == 0) return {std::sin(p.x + 0.5 * p.z), p.y * p.y - p.x, std::cos(p.y) * p.z};
    return {p.x * p.y + 1.0, std::exp(0.3 * p.z) - p.x, std::sin(p.x - p.y)};
}

// Derivative of the frame components of field along the coordinate vector v.
heis::FrameVector directional(const heis::HeisPoint &p, const heis::Vec3 &v, int which, double h)
{
    auto at = [&](double k) { return test_field({p.x + k * h * v[0], p.y + k * h * v[1], p.z + k * h * v[2]}, which); };
    const auto m2 = at(-2), m1 = at(-1), p1 = at(1), p2 = at(2);
    return (1.0 / (12.0 * h)) * (m2 - 8.0 * m1 + 8.0 * p1 - p2);
}

CheckResult heis_connection(const SuiteOptions &o)
{
    Check c("heis.connection-levi-civita", o);
    const auto compat = c.channel("metric-compatible", 1e-6);
    const auto torsion = c.channel("torsion-free", 1e-8);
    RandomSurfaceGenerator gen(o.seed ^ 0x64ULL);
    const double h = 1e-3;
    for (int n = 0; n < 30; ++n) {
        const auto p = random_heis(gen, 1.5);
        const heis::FrameVector v{gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
        const auto vc = heis::to_coordinates(p, v);
        const auto w1 = test_field(p, 0), w2 = test_field(p, 1);
        const auto d1 = directional(p, vc, 0, h), d2 = directional(p, vc, 1, h);
        auto inner = [&](double k) {
            const heis::HeisPoint q{p.x + k * h * vc[0], p.y + k * h * vc[1], p.z + k * h * vc[2]};
            return test_field(q, 0).dot(test_field(q, 1));
        };
        const double lhs = (inner(-2) - 8 * inner(-1) + 8 * inner(1) - inner(2)) / (12 * h);
        const double rhs = heis::covariant_derivative(w1, d1, v).dot(w2) + w1.dot(heis::covariant_derivative(w2, d2, v));
        c.add(compat, lhs - rhs);
    }
    // [E_i, E_j] = nabla_{E_i} E_j - nabla_{E_j} E_i, brackets from the coordinate frame fields.
    for (int n = 0; n < 10; ++n) {
        const auto p = random_heis(gen, 2.0);
        const auto F = heis::frame_at(p);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                auto field = [&](int k) {
                    return [k](const heis::HeisPoint &q) {
                        const auto row = heis::frame_at(q)[k];
                        return heis::HeisPoint{row[0], row[1], row[2]};
                    };
                };
                const auto Ji = fd_jacobian3(field(i), p, 1e-3), Jj = fd_jacobian3(field(j), p, 1e-3);
                const auto a = apply_columns(Jj, F[i]), b = apply_columns(Ji, F[j]);
                const auto bracket = heis::to_frame(p, {a[0] - b[0], a[1] - b[1], a[2] - b[2]});
                const auto diff = heis::connection_frame(i + 1, j + 1) - heis::connection_frame(j + 1, i + 1);
                c.add(torsion, (bracket - diff).norm());
            }
        }
    }
    return c.finish();
}

// ---------------------------------------------------------------- forms

std::vector<SurfaceSpec> form_test_graphs(const SuiteOptions &o)
{
    std::vector<SurfaceSpec> out;
    for (const auto &t : random_set(o)) out.emplace_back(graph_from_text(t));
    out.push_back(surface::catalog("scherk", {{"k", 1.0}}));
    out.push_back(surface::catalog("paraboloid"));
    out.push_back(surface::catalog("daniel"));
    return out;
}

std::vector<surface::VerticalSurface> vertical_test_surfaces()
{
    return {
        std::get<surface::VerticalSurface>(surface::catalog("vertical_plane")),
        std::get<surface::VerticalSurface>(surface::catalog("vertical_plane", {{"A", 2.0}, {"B", -1.0}, {"C", 3.0}})),
        surface::VerticalSurface{expr::parse("sin(t)+t^2/3", {"t"}), {}, -2.0, 2.0},
        surface::VerticalSurface{expr::parse("sqrt(1-t^2)", {"t"}), {}, -0.9, 0.9},
    };
}

CheckResult forms_first(const SuiteOptions &o)
{
    Check c("forms.first-form-determinant", o);
    const auto graph = c.channel("EG-F^2=w^2", 1e-12);
    const auto vert = c.channel("EG-F^2=1+a'^2", 1e-12);
    for (const auto &spec : form_test_graphs(o)) {
        for (const auto &[a, b] : lattice(surface::domain_of(spec), 5)) {
            const auto d = surface::graph_point(spec, a, b);
            const auto ff = surface::forms_graph(d);
            c.add(graph, (ff.detI() - d.w * d.w) / (d.w * d.w));
        }
    }
    for (const auto &v : vertical_test_surfaces()) {
        for (int i = 0; i <= 20; ++i) {
            const double t = v.t0 + (v.t1 - v.t0) * i / 20.0;
            const double ad = surface::profile_jet(v, t).fx;
            c.add(vert, surface::forms_vertical(v, t).detI() - (1.0 + ad * ad));
        }
    }
    return c.finish();
}

CheckResult forms_mean_curvature(const SuiteOptions &o)
{
    Check c("forms.mean-curvature-equation", o);
    const auto ch = c.channel("2Hw^3", 1e-10);
    for (const auto &spec : form_test_graphs(o)) {
        for (const auto &[a, b] : lattice(surface::domain_of(spec), 5)) {
            const auto d = surface::graph_point(spec, a, b);
            const double H = surface::mean_curvature(surface::forms_graph(d));
            const double r = surface::minimal_residual_graph(d);
            c.add(ch, (r - 2.0 * H * d.w * d.w * d.w) / std::max(1.0, std::abs(r)));
        }
    }
    return c.finish();
}

heis::FrameVector normal_at(const SurfaceSpec &spec, double a, double b)
{
    return surface::unit_normal(surface::graph_point(spec, a, b));
}

// Central difference of the normal's frame components along parameter dir.
heis::FrameVector fd_normal_derivative(const SurfaceSpec &spec, double a, double b, int dir, double h)
{
    const double da = dir == 0 ? h : 0.0, db = dir == 1 ? h : 0.0;
    return (1.0 / (2.0 * h)) * (normal_at(spec, a + da, b + db) - normal_at(spec, a - da, b - db));
}

CheckResult forms_weingarten(const SuiteOptions &o)
{
    Check c("forms.weingarten-second-form", o);
    const auto analytic = c.channel("analytic", 1e-10);
    const auto fd = c.channel("fd-nabla", 1e-8);
    for (const auto &spec : form_test_graphs(o)) {
        if (!std::holds_alternative<GraphSurface>(spec)) continue;
        for (const auto &[a, b] : lattice(kUnitSquare, 5)) {
            const auto d = surface::graph_point(spec, a, b);
            const auto ff = surface::forms_graph(d);
            const std::array<heis::FrameVector, 2> X{surface::tangent_x(d), surface::tangent_y(d)};
            const double second[2][2] = {{ff.L, ff.M}, {ff.M, ff.N}};
            const auto eta = surface::unit_normal(d);
            for (int i = 0; i < 2; ++i) {
                const auto A = surface::weingarten(d, {i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0});
                const auto deta = fd_normal_derivative(spec, a, b, i, 1e-5);
                const auto A_fd = -heis::covariant_derivative(eta, deta, X[i]);
                for (int j = 0; j < 2; ++j) {
                    c.add(analytic, A.dot(X[j]) - second[i][j]);
                    c.add(fd, A_fd.dot(X[j]) - second[i][j]);
                }
            }
        }
    }
    return c.finish();
}

CheckResult forms_vertical_second(const SuiteOptions &o)
{
    Check c("forms.vertical-second-form-from-connection", o);
    const auto ch = c.channel("L,M,N", 1e-10);
    for (const auto &v : vertical_test_surfaces()) {
        for (int i = 0; i <= 20; ++i) {
            const double t = v.t0 + (v.t1 - v.t0) * i / 20.0;
            const auto j = surface::profile_jet(v, t);
            const double a = j.f, ad = j.fx, add = j.fxx;
            const heis::FrameVector Xt{1.0, ad, (a - t * ad) / 2.0};
            const heis::FrameVector Xs{0.0, 0.0, 1.0};
            const double n = std::sqrt(1.0 + ad * ad);
            const heis::FrameVector eta{ad / n, -1.0 / n, 0.0};
            const double L = heis::covariant_derivative(Xt, {0.0, add, -t * add / 2.0}, Xt).dot(eta);
            const double M = heis::covariant_derivative(Xs, {}, Xt).dot(eta);
            const double N = heis::covariant_derivative(Xs, {}, Xs).dot(eta);
            const auto ff = surface::forms_vertical(v, t);
            c.add(ch, L - ff.L);
            c.add(ch, M - ff.M);
            c.add(ch, N - ff.N);
        }
    }
    (void)o;
    return c.finish();
}

CheckResult criterion_ripoll(const SuiteOptions &o)
{
    Check c("criterion-11 gauss-map-differential", o);
    const auto ch = c.channel("frame", 1e-5);
    std::vector<SurfaceSpec> graphs{
        surface::catalog("plane"),
        surface::catalog("plane", {{"a", -0.5}, {"b", 0.3}, {"c", 1.0}}),
    };
    RandomSurfaceGenerator gen(o.seed);
    for (int n = 0; n < 5; ++n) graphs.emplace_back(graph_from_text(gen.next_polynomial()));
    for (const auto &spec : graphs) {
        for (const auto &[a, b] : lattice(kUnitSquare, 5)) {
            const auto d = surface::graph_point(spec, a, b);
            const auto eta = surface::unit_normal(d);
            const std::array<heis::FrameVector, 2> X{surface::tangent_x(d), surface::tangent_y(d)};
            for (int i = 0; i < 2; ++i) {
                const auto dgamma = fd_normal_derivative(spec, a, b, i, 1e-4);
                const auto A = surface::weingarten(d, {i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0});
                const auto alpha = heis::covariant_derivative(eta, {}, X[i]);
                c.add(ch, (dgamma + A + alpha).norm());
            }
        }
    }
    return c.finish();
}

CheckResult criterion_cmc(const SuiteOptions &o)
{
    Check c("criterion-12 cmc-vertical-family", o);
    const auto ch = c.channel("|H| spread", 1e-6);
    const auto v = std::get<surface::VerticalSurface>(surface::catalog("cmc_vertical", {{"H", -0.5}}));
    const auto [lo, hi] = surface::cmc_admissible_interval(-0.5);
    double hmin = std::numeric_limits<double>::infinity(), hmax = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double t = v.t0 + (v.t1 - v.t0) * i / 40.0;
        const double H = std::abs(surface::mean_curvature(surface::forms_vertical(v, t)));
        hmin = std::min(hmin, H);
        hmax = std::max(hmax, H);
    }
    c.add(ch, hmax - hmin);
    c.note("admissible t in (" + grid::format_short(lo) + ", " + grid::format_short(hi) + "), sampled ["
           + grid::format_short(v.t0) + ", " + grid::format_short(v.t1) + "], |H| from " + grid::format_short(hmin)
           + " to " + grid::format_short(hmax) + ", target 0.5");
    return c.finish();
}

CheckResult forms_circle_profile(const SuiteOptions &o)
{
    Check c("forms.circle-profile-constant-mean-curvature", o);
    const auto ch = c.channel("|H|-1/(2R)", 1e-10);
    for (double R : {0.5, 1.0, 2.5}) {
        const surface::VerticalSurface v{expr::parse("sqrt(R^2-t^2)", {"t"}, {"R"}), {{"R", R}}, -0.9 * R, 0.9 * R};
        for (int i = 0; i <= 40; ++i) {
            const double t = v.t0 + (v.t1 - v.t0) * i / 40.0;
            c.add(ch, std::abs(surface::mean_curvature(surface::forms_vertical(v, t))) - 0.5 / R);
        }
    }
    return c.finish();
}

// ---------------------------------------------------------------- minimal

CheckResult criterion_minimality(const SuiteOptions &o)
{
    Check c("criterion-03 minimal-examples", o);
    const auto graph = c.channel("graphs", 1e-8);
    const auto vert = c.channel("vertical-plane", 1e-12);
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (const auto &spec : minimal_graphs()) {
        const auto pts = lattice(surface::domain_of(spec), 6);
        fewest = std::min(fewest, pts.size());
        for (const auto &[a, b] : pts) {
            c.add(graph, surface::mean_curvature(surface::forms_graph(surface::graph_point(spec, a, b))));
        }
    }
    for (const auto &params : std::vector<expr::ParamMap>{{}, {{"A", 2.0}, {"B", -1.0}, {"C", 3.0}}}) {
        const auto v = std::get<surface::VerticalSurface>(surface::catalog("vertical_plane", params));
        for (int i = 0; i < 30; ++i) {
            const double t = v.t0 + (v.t1 - v.t0) * i / 29.0;
            c.add(vert, surface::mean_curvature(surface::forms_vertical(v, t)));
        }
    }
    c.require(fewest >= 25, "fewer than 25 samples on a surface");
    (void)o;
    return c.finish();
}

CheckResult criterion_harmonic(const SuiteOptions &o)
{
    Check c("criterion-04 harmonic-gauss-map", o);
    const auto ch = c.channel("|tau|", 1e-8);
    for (const auto &spec : minimal_graphs()) {
        for (const auto &[a, b] : lattice(surface::domain_of(spec), 6)) {
            const auto tau = gaussmap::tension_field(surface::graph_point(spec, a, b));
            c.add(ch, std::hypot(tau.t1, tau.t2));
        }
    }
    (void)o;
    return c.finish();
}

CheckResult minimal_negative_control(const SuiteOptions &o)
{
    Check c("minimal.paraboloid-is-not-minimal", o);
    const auto spec = surface::catalog("paraboloid");
    double least = std::numeric_limits<double>::infinity();
    for (const auto &[a, b] : lattice(kUnitSquare, 5)) {
        const auto d = surface::graph_point(spec, a, b);
        least = std::min(least, std::abs(surface::mean_curvature(surface::forms_graph(d))));
    }
    c.require(least > 1e-3, "min |H| = " + grid::format_short(least));
    c.note("min |H| = " + grid::format_short(least));
    return c.finish();
}

CheckResult criterion_determinant(const SuiteOptions &o)
{
    Check c("criterion-07 gauss-map-determinant", o);
    const auto plane = c.channel("plane-exact", 0.0);
    const auto rank1 = c.channel("rank1-exact", 0.0);
    const auto daniel = c.channel("daniel", 1e-10);
    for (const auto &params : std::vector<expr::ParamMap>{{}, {{"a", -1.5}, {"b", 0.5}, {"c", 2.0}}}) {
        const auto spec = surface::catalog("plane", params);
        for (const auto &[a, b] : lattice(surface::domain_of(spec), 5)) {
            c.add(plane, gaussmap::gauss_det(surface::graph_point(spec, a, b)) - 0.25);
        }
    }
    for (double k : {0.5, -1.3, 2.0}) {
        const auto spec = surface::catalog("rank1", {{"k", k}, {"c", 1.0}});
        for (const auto &[a, b] : lattice(surface::domain_of(spec), 5)) {
            c.add(rank1, gaussmap::gauss_det(surface::graph_point(spec, a, b)));
        }
    }
    const auto dan = surface::catalog("daniel");
    for (double s : {0.5, 1.0, 2.0}) {
        const double t4 = std::pow(std::tanh(s), 4);
        for (double x : {-1.0, 0.0, 1.5}) {
            c.add(daniel, gaussmap::gauss_det(surface::graph_point(dan, x, s)) + 0.25 * (t4 - 1.0));
        }
    }
    (void)o;
    return c.finish();
}

// Smallest-eigenvalue direction fit of points to a line through the origin;
// returns the largest distance from that line.
double origin_line_residual(const std::vector<gans::GansPoint> &pts)
{
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto &p : pts) {
        sxx += p.u * p.u;
        sxy += p.u * p.v;
        syy += p.v * p.v;
    }
    // Principal direction of [[sxx, sxy], [sxy, syy]].
    const double angle = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
    const double du = std::cos(angle), dv = std::sin(angle);
    double worst = 0.0;
    for (const auto &p : pts) worst = std::max(worst, std::abs(p.u * dv - p.v * du));
    return worst;
}

// Least squares v^2 = alpha u^2 + beta.
std::array<double, 2> fit_hyperbola(const std::vector<gans::GansPoint> &pts)
{
    double s11 = 0.0, s12 = 0.0, s22 = 0.0, r1 = 0.0, r2 = 0.0;
    for (const auto &p : pts) {
        const double X = p.u * p.u, Y = p.v * p.v;
        s11 += X * X;
        s12 += X;
        s22 += 1.0;
        r1 += X * Y;
        r2 += Y;
    }
    const double det = s11 * s22 - s12 * s12;
    return {(r1 * s22 - s12 * r2) / det, (s11 * r2 - s12 * r1) / det};
}

CheckResult criterion_rank_one(const SuiteOptions &o)
{
    Check c("criterion-08 rank-one-geodesic-images", o);
    const auto line = c.channel("origin-line", 1e-10);
    const auto fit = c.channel("hyperbola-fit", 1e-9);
    const auto constant = c.channel("alpha,beta-constant", 1e-9);
    for (const auto &[k, cc] : std::vector<std::array<double, 2>>{{0.5, 0.0}, {-1.3, 1.0}, {2.0, -0.7}}) {
        const auto spec = surface::catalog("rank1", {{"k", k}, {"c", cc}});
        std::vector<gans::GansPoint> img;
        for (const auto &[a, b] : lattice(surface::domain_of(spec), 7)) {
            img.push_back(gaussmap::gauss_map(surface::graph_point(spec, a, b)));
        }
        c.add(line, origin_line_residual(img));
    }
    std::ostringstream fitted;
    for (double k : {0.5, 1.0, 2.0}) {
        const auto spec = surface::catalog("scherk", {{"k", k}});
        std::vector<gans::GansPoint> lower, upper, all;
        for (const auto &[a, b] : lattice(surface::domain_of(spec), 7)) {
            const auto p = gaussmap::gauss_map(surface::graph_point(spec, a, b));
            (b <= 0.0 ? lower : upper).push_back(p);
            all.push_back(p);
        }
        const auto f1 = fit_hyperbola(lower), f2 = fit_hyperbola(upper);
        c.add(constant, f1[0] - f2[0]);
        c.add(constant, f1[1] - f2[1]);
        for (const auto &p : all) c.add(fit, p.v * p.v - f1[0] * p.u * p.u - f1[1]);
        c.require(f1[1] > 0.0 && f2[1] > 0.0, "beta not positive for k=" + grid::format_short(k));
        const bool one_branch = std::all_of(all.begin(), all.end(), [](const auto &p) { return p.v < 0.0; })
                                || std::all_of(all.begin(), all.end(), [](const auto &p) { return p.v > 0.0; });
        c.require(one_branch, "images leave a single hyperbola branch for k=" + grid::format_short(k));
        fitted << (fitted.tellp() > 0 ? ", " : "") << "k=" << grid::format_short(k) << ": alpha="
               << grid::format_short(f1[0]) << " beta=" << grid::format_short(f1[1]) << " (4k^2="
               << grid::format_short(4 * k * k) << ", 2k^2=" << grid::format_short(2 * k * k) << ")";
    }
    c.note(fitted.str());
    (void)o;
    return c.finish();
}

// ---------------------------------------------------------------- tension

CheckResult criterion_hg_identity(const SuiteOptions &o)
{
    Check c("criterion-05 tension-mean-curvature-identity", o);
    const auto analytic = c.channel("analytic", 1e-6);
    const auto fd = c.channel("fd-oracle", 1e-4);
    for (const auto &text : random_set(o)) {
        const auto spec = graph_from_text(text);
        const auto fn = oracle::graph_function(spec);
        for (const auto &[x, y] : lattice(kUnitSquare, 5)) {
            const auto r = gaussmap::hg_residual(surface::graph_point(spec, x, y));
            c.add(analytic, std::max(std::abs(r.r1), std::abs(r.r2)));
            const auto rf = oracle::fd_hg_residual(fn, x, y);
            c.add(fd, std::max(std::abs(rf.r1), std::abs(rf.r2)));
        }
    }
    c.note("seed " + std::to_string(o.seed));
    return c.finish();
}

CheckResult criterion_numerators(const SuiteOptions &o)
{
    Check c("criterion-06 closed-form-numerators", o);
    const auto analytic = c.channel("analytic", 1e-6);
    const auto fd = c.channel("fd-calibration", 1e-4);
    // Calibration: project the finite-difference left side on the unsigned numerators.
    double dot = 0.0;
    std::vector<std::array<double, 4>> pairs;
    for (const auto &text : random_set(o)) {
        const auto spec = graph_from_text(text);
        const auto fn = oracle::graph_function(spec);
        for (const auto &[x, y] : lattice(kUnitSquare, 5)) {
            const auto d = surface::graph_point(spec, x, y);
            const auto r = gaussmap::appendix_numerator_check(d);
            c.add(analytic, std::max(std::abs(r.r1), std::abs(r.r2)));
            const auto lhs = oracle::fd_tension_plus_mean_gradient(fn, x, y);
            const auto num = gaussmap::appendix_numerators(d);
            dot += lhs.r1 * num.r1 + lhs.r2 * num.r2;
            pairs.push_back({lhs.r1, lhs.r2, num.r1, num.r2});
        }
    }
    const int sign = dot >= 0.0 ? 1 : -1;
    for (const auto &p : pairs) c.add(fd, std::max(std::abs(p[0] - sign * p[2]), std::abs(p[1] - sign * p[3])));
    c.require(sign == gaussmap::kNumeratorSign, "calibrated sign " + std::to_string(sign) + " differs from frozen "
                                                    + std::to_string(gaussmap::kNumeratorSign));
    c.note("calibrated sign " + std::string(sign > 0 ? "+1" : "-1"));
    return c.finish();
}

CheckResult tension_oracle(const SuiteOptions &o)
{
    Check c("tension.analytic-vs-fd-oracle", o);
    const auto tau = c.channel("tension", 1e-5);
    const auto jac = c.channel("jacobian", 1e-5);
    const auto det = c.channel("det-identity", 1e-12);
    std::vector<SurfaceSpec> specs;
    for (const auto &t : random_set(o)) specs.emplace_back(graph_from_text(t));
    specs.push_back(surface::catalog("scherk", {{"k", 1.0}}));
    specs.push_back(surface::catalog("paraboloid"));
    for (const auto &spec : specs) {
        const auto fn = oracle::graph_function(as_graph(spec));
        for (const auto &[x, y] : lattice(kUnitSquare, 4)) {
            const auto d = surface::graph_point(spec, x, y);
            const auto a = gaussmap::tension_field(d);
            const auto f = oracle::fd_tension(fn, x, y);
            c.add(tau, std::max(std::abs(a.t1 - f.t1), std::abs(a.t2 - f.t2)));
            const auto J = gaussmap::gauss_jacobian(d), Jf = oracle::fd_gauss_jacobian(fn, x, y, 1e-2);
            for (int i = 0; i < 2; ++i) {
                for (int k = 0; k < 2; ++k) c.add(jac, J.m[i][k] - Jf.m[i][k]);
            }
            c.add(det, J.det() - gaussmap::gauss_det(d));
        }
    }
    return c.finish();
}

double relative(double a, double b) { return (a - b) / std::max(1.0, std::abs(b)); }

struct JetSample {
    std::string text;
    double x, y;
};

// Catalog expressions at interior points plus random smooth functions.
std::vector<JetSample> jet_population(const SuiteOptions &o)
{
    std::vector<JetSample> out;
    const std::vector<std::string> catalog_texts{
        "x*y/2+1*(ln(y+sqrt(1+y^2))+y*sqrt(1+y^2))",
        "x*y/2+2*(ln(y+sqrt(1+y^2))+y*sqrt(1+y^2))",
        "1*x+2*y+0",
        "x*y/2+0.5*x+0",
        "(x^2+y^2)/2",
        "x*(coth(y)-2*y)",
        "x*(y-tanh(y)/2)",
    };
    RandomSurfaceGenerator gen(o.seed ^ 0x71ULL);
    for (const auto &t : catalog_texts) {
        for (int k = 0; k < 3; ++k) out.push_back({t, gen.uniform(-1.5, 1.5), gen.uniform(0.3, 2.0)});
    }
    for (int n = 0; n < 24; ++n) {
        const std::string t = gen.next();
        for (int k = 0; k < 3; ++k) out.push_back({t, gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0)});
    }
    return out;
}

CheckResult expr_jets(const SuiteOptions &o)
{
    Check c("expr.jets-vs-fd", o);
    const auto agree = c.channel("relative", 1e-6);
    const auto order = c.channel("|order-2|", 0.25);
    double lo_order = 10.0, hi_order = 0.0;
    std::size_t exprs = 0;
    std::string last;
    for (const auto &s : jet_population(o)) {
        if (s.text != last) ++exprs;
        last = s.text;
        const auto e = expr::parse(s.text, {"x", "y"});
        const oracle::ScalarFn fn = [&](double x, double y) { return expr::eval_value(e, x, y); };
        const auto exact = expr::eval_jet3(e, s.x, s.y).entries();

        // Orders 0-2: one Richardson step over h and h/2; order 3: the two-level oracle.
        const auto coarse = oracle::fd_jet3(fn, s.x, s.y, 1e-3), fine = oracle::fd_jet3(fn, s.x, s.y, 5e-4);
        const auto low = ((4.0 / 3.0) * fine + (-1.0 / 3.0) * coarse).entries();
        const auto high = oracle::fd_jet3_richardson(fn, s.x, s.y, 1e-2).entries();
        for (int m = 0; m < 6; ++m) c.add(agree, relative(exact[m], low[m]));
        for (int m = 6; m < 10; ++m) c.add(agree, relative(exact[m], high[m]));

        // Observed order of the plain stencils, first and second partials pooled.
        const auto e1 = oracle::fd_jet3(fn, s.x, s.y, 2e-2).entries(), e2 = oracle::fd_jet3(fn, s.x, s.y, 1e-2).entries();
        double s1 = 0.0, s2 = 0.0;
        for (int m = 1; m < 6; ++m) {
            s1 += std::abs(e1[m] - exact[m]);
            s2 += std::abs(e2[m] - exact[m]);
        }
        if (s1 > 1e-8) {
            const double p = std::log2(s1 / s2);
            lo_order = std::min(lo_order, p);
            hi_order = std::max(hi_order, p);
            c.add(order, p - 2.0);
        }
    }
    c.note(std::to_string(exprs) + " expressions, observed order " + grid::format_short(lo_order) + " to "
           + grid::format_short(hi_order));
    return c.finish();
}

CheckResult expr_operator_coverage(const SuiteOptions &o)
{
    Check c("expr.operator-coverage-vs-fd", o);
    const auto ch = c.channel("relative", 1e-5);
    RandomSurfaceGenerator gen(o.seed ^ 0x73ULL);
    for (int n = 0; n < 24; ++n) {
        const auto e = expr::parse(gen.next_expression(), {"x", "y"});
        const oracle::ScalarFn fn = [&](double x, double y) { return expr::eval_value(e, x, y); };
        for (int k = 0; k < 3; ++k) {
            const double x = gen.uniform(-1.0, 1.0), y = gen.uniform(-1.0, 1.0);
            const auto exact = expr::eval_jet3(e, x, y).entries();
            const auto coarse = oracle::fd_jet3(fn, x, y, 1e-3), fine = oracle::fd_jet3(fn, x, y, 5e-4);
            const auto low = ((4.0 / 3.0) * fine + (-1.0 / 3.0) * coarse).entries();
            const auto high = oracle::fd_jet3_richardson(fn, x, y, 1e-2).entries();
            for (int m = 0; m < 6; ++m) c.add(ch, relative(exact[m], low[m]));
            for (int m = 6; m < 10; ++m) c.add(ch, relative(exact[m], high[m]));
        }
    }
    return c.finish();
}

CheckResult expr_algebra(const SuiteOptions &o)
{
    Check c("expr.linearity-and-product-rule", o);
    const auto lin = c.channel("linearity", 1e-12);
    const auto prod = c.channel("product", 1e-12);
    RandomSurfaceGenerator gen(o.seed ^ 0x74ULL);
    for (int n = 0; n < 20; ++n) {
        const auto e1 = expr::parse(gen.next(), {"x", "y"}), e2 = expr::parse(gen.next(), {"x", "y"});
        const double alpha = gen.uniform(-2.0, 2.0), beta = gen.uniform(-2.0, 2.0);
        const double x = gen.uniform(-1.0, 1.0), y = gen.uniform(-1.0, 1.0);
        const auto j1 = expr::eval_jet3(e1, x, y), j2 = expr::eval_jet3(e2, x, y);
        const auto combo = expr::eval_jet3(alpha * e1 + beta * e2, x, y).entries();
        const auto expect = (alpha * j1 + beta * j2).entries();
        for (int m = 0; m < 10; ++m) c.add(lin, relative(combo[m], expect[m]));
        const auto pj = expr::eval_jet3(e1 * e2, x, y);
        c.add(prod, relative(pj.fx, j1.f * j2.fx + j1.fx * j2.f));
        c.add(prod, relative(pj.fy, j1.f * j2.fy + j1.fy * j2.f));
    }
    return c.finish();
}

CheckResult expr_round_trip(const SuiteOptions &o)
{
    Check c("expr.print-parse-round-trip", o);
    const auto ch = c.channel("value", 0.0);
    RandomSurfaceGenerator gen(o.seed ^ 0x72ULL);
    for (int n = 0; n < 25; ++n) {
        const auto e = expr::parse(gen.next_expression(), {"x", "y"});
        const auto printed = e.to_string();
        const auto again = expr::parse(printed, {"x", "y"});
        c.require(again.to_string() == printed, "printing is not a fixed point for " + printed);
        const double x = gen.uniform(-1.0, 1.0), y = gen.uniform(-1.0, 1.0);
        c.add(ch, expr::eval_value(e, x, y) - expr::eval_value(again, x, y));
    }
    return c.finish();
}

// ---------------------------------------------------------------- equivariance

std::vector<heis::HeisIsometry> equivariance_isometries()
{
    using K = heis::HeisIsometry::Kind;
    return {
        {{1.0, -2.0, 3.0}, K::Rotation, 0.0},
        {{0.0, 0.0, 0.0}, K::Rotation, pi / 6.0},
        {{0.0, 0.0, 0.0}, K::Rotation, pi / 2.0},
        {{1.0, -2.0, 3.0}, K::Rotation, pi / 6.0},
        {{0.0, 0.0, 0.0}, K::Reflection, pi / 6.0},
        {{0.0, 0.0, 0.0}, K::Reflection, pi / 2.0},
        {{1.0, -2.0, 3.0}, K::Reflection, pi / 2.0},
    };
}

std::vector<GraphSurface> equivariance_surfaces()
{
    std::vector<GraphSurface> out{
        as_graph(surface::catalog("plane")),
        as_graph(surface::catalog("plane", {{"a", -0.5}, {"b", 1.5}, {"c", 0.3}})),
        as_graph(surface::catalog("scherk", {{"k", 1.0}})),
        as_graph(surface::catalog("scherk", {{"k", 0.5}})),
    };
    for (auto &g : out) g.domain = kUnitSquare;
    return out;
}

CheckResult criterion_equivariance(const SuiteOptions &o)
{
    Check c("criterion-09 gauss-map-equivariance", o);
    const auto translation = c.channel("translation", 1e-10);
    const auto rotation = c.channel("rotation", 1e-10);
    const auto reflection = c.channel("reflection", 1e-10);
    double reflect_fit = 0.0, negated_fit = 0.0;
    for (const auto &spec : equivariance_surfaces()) {
        for (const auto &iso : equivariance_isometries()) {
            const auto image = gaussmap::equivariant_graph(spec, iso);
            const bool reflect = iso.kind == heis::HeisIsometry::Kind::Reflection;
            const auto ch = reflect ? reflection : iso.theta == 0.0 ? translation : rotation;
            for (const auto &[x, y] : lattice(spec.domain, 5)) {
                const auto phi = gaussmap::gauss_map(surface::graph_point(spec, x, y));
                const auto bar = gaussmap::barred_point(iso, x, y);
                const auto got = gaussmap::gauss_map(surface::graph_point(image, bar[0], bar[1]));
                const auto want = gaussmap::predicted_gauss_map(iso, phi);
                c.add(ch, std::hypot(got.u - want.u, got.v - want.v));
                if (reflect) {
                    const auto r = gaussmap::predicted_gauss_map(iso, phi, gaussmap::ReflectionConvention::Reflect);
                    const auto n = gaussmap::predicted_gauss_map(iso, phi, gaussmap::ReflectionConvention::NegatedReflect);
                    reflect_fit = std::max(reflect_fit, std::hypot(got.u - r.u, got.v - r.v));
                    negated_fit = std::max(negated_fit, std::hypot(got.u - n.u, got.v - n.v));
                }
            }
        }
    }
    const auto calibrated = reflect_fit <= negated_fit ? gaussmap::ReflectionConvention::Reflect
                                                       : gaussmap::ReflectionConvention::NegatedReflect;
    c.require(calibrated == gaussmap::kReflectionConvention, "calibrated reflection convention differs from frozen one");
    c.note(std::string("calibrated reflection convention: ")
           + (calibrated == gaussmap::ReflectionConvention::Reflect ? "reflect" : "negated reflect"));
    (void)o;
    return c.finish();
}

CheckResult equivariance_image(const SuiteOptions &o)
{
    Check c("equivariance.image-graph-matches-isometry", o);
    const auto ch = c.channel("height", 1e-10);
    for (const auto &spec : equivariance_surfaces()) {
        for (const auto &iso : equivariance_isometries()) {
            const auto image = gaussmap::equivariant_graph(spec, iso);
            for (const auto &[x, y] : lattice(spec.domain, 5)) {
                const double z = expr::eval_value(spec.f, x, y, spec.params);
                const auto moved = heis::apply_isometry(iso, {x, y, z});
                c.add(ch, expr::eval_value(image.f, moved.x, moved.y, image.params) - moved.z);
            }
        }
    }
    (void)o;
    return c.finish();
}

// ---------------------------------------------------------------- conformal

CheckResult criterion_conformal(const SuiteOptions &o)
{
    Check c("criterion-10 conformal-planes", o);
    const auto defect = c.channel("plane-defect", 1e-10);
    const auto lambda = c.channel("lambda", 1e-8);
    for (const auto &params : std::vector<expr::ParamMap>{
             {}, {{"a", -0.5}, {"b", 1.5}, {"c", 0.3}}, {{"a", 0.0}, {"b", 0.0}, {"c", 0.0}}, {{"a", 3.0}, {"b", -1.0}, {"c", 2.0}}}) {
        const auto spec = surface::catalog("plane", params);
        for (const auto &[x, y] : lattice(surface::domain_of(spec), 5)) {
            const auto d = surface::graph_point(spec, x, y);
            const auto cd = gaussmap::conformality_defect(d);
            c.add(defect, cd.defect);
            c.add(lambda, cd.lambda - 1.0 / (4.0 * d.w * d.w));
        }
    }
    const auto scherk = gaussmap::conformality_defect(surface::graph_point(surface::catalog("scherk", {{"k", 1.0}}), 0.0, 1.0));
    c.require(scherk.defect >= 1e-3, "scherk(k=1) at (0,1) has defect " + grid::format_short(scherk.defect));
    c.note("scherk(k=1) at (0,1) defect " + grid::format_short(scherk.defect));
    (void)o;
    return c.finish();
}

// ---------------------------------------------------------------- registry

using CheckFn = CheckResult (*)(const SuiteOptions &);

struct SuiteDef {
    std::string name;
    std::vector<std::pair<std::string, CheckFn>> checks; // id used only if the check throws
};

const std::vector<SuiteDef> &suites()
{
    static const std::vector<SuiteDef> defs{
        {"gans",
         {{"criterion-01", criterion_christoffel},
          {"criterion-02", criterion_geodesic},
          {"gans.unit-speed-conserved", gans_speed},
          {"gans.isometries-preserve-metric", gans_isometries},
          {"gans.disk-round-trip", gans_disk_round_trip}}},
        {"heis",
         {{"heis.group-axioms", heis_group},
          {"heis.frame-orthonormal-left-invariant", heis_frame},
          {"heis.isometries-preserve-metric", heis_isometries},
          {"heis.connection-levi-civita", heis_connection}}},
        {"forms",
         {{"forms.first-form-determinant", forms_first},
          {"forms.mean-curvature-equation", forms_mean_curvature},
          {"forms.weingarten-second-form", forms_weingarten},
          {"forms.vertical-second-form-from-connection", forms_vertical_second},
          {"criterion-11", criterion_ripoll},
          {"forms.circle-profile-constant-mean-curvature", forms_circle_profile},
          {"criterion-12", criterion_cmc}}},
        {"minimal",
         {{"criterion-03", criterion_minimality},
          {"criterion-04", criterion_harmonic},
          {"criterion-07", criterion_determinant},
          {"criterion-08", criterion_rank_one},
          {"minimal.paraboloid-is-not-minimal", minimal_negative_control}}},
        {"tension",
         {{"criterion-05", criterion_hg_identity},
          {"criterion-06", criterion_numerators},
          {"tension.analytic-vs-fd-oracle", tension_oracle},
          {"expr.jets-vs-fd", expr_jets},
          {"expr.operator-coverage-vs-fd", expr_operator_coverage},
          {"expr.linearity-and-product-rule", expr_algebra},
          {"expr.print-parse-round-trip", expr_round_trip}}},
        {"equivariance",
         {{"criterion-09", criterion_equivariance},
          {"equivariance.image-graph-matches-isometry", equivariance_image}}},
        {"conformal", {{"criterion-10", criterion_conformal}}},
    };
    return defs;
}

} // namespace

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

std::uint64_t seed_from_environment()
{
    const char *env = std::getenv("HGAUSS_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("HGAUSS_SEED must be an unsigned integer, got '" + std::string(s) + "'");
    }
    return v;
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &s : suites()) out.push_back(s.name);
        out.emplace_back("all");
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string &name, const SuiteOptions &options)
{
    std::vector<std::pair<std::string, CheckFn>> checks;
    for (const auto &s : suites()) {
        if (name == "all" || s.name == name) checks.insert(checks.end(), s.checks.begin(), s.checks.end());
    }
    if (checks.empty()) throw std::invalid_argument("unknown suite '" + name + "'");

    SuiteReport report;
    report.suite = name;
    report.seed = options.seed;
    const auto start = std::chrono::steady_clock::now();
    for (const auto &[id, fn] : checks) {
        try {
            report.checks.push_back(fn(options));
        } catch (const std::exception &e) {
            // A check that throws is a failed check, not a crashed suite.
            CheckResult r;
            r.id = id;
            r.max_residual = std::numeric_limits<double>::quiet_NaN();
            r.note = std::string("exception: ") + e.what();
            report.checks.push_back(r);
        }
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

const std::vector<Criterion> &acceptance_criteria()
{
    static const std::vector<Criterion> list{
        {1, "Christoffel agreement", "gans", criterion_christoffel},
        {2, "Geodesic law", "gans", criterion_geodesic},
        {3, "Minimality of examples", "minimal", criterion_minimality},
        {4, "Harmonicity corollary", "minimal", criterion_harmonic},
        {5, "Tension/mean-curvature identity", "tension", criterion_hg_identity},
        {6, "Closed-form numerators", "tension", criterion_numerators},
        {7, "Gauss-map determinant", "minimal", criterion_determinant},
        {8, "Rank-1 geodesic images", "minimal", criterion_rank_one},
        {9, "Equivariance", "equivariance", criterion_equivariance},
        {10, "Conformality", "conformal", criterion_conformal},
        {11, "Gauss-map differential", "forms", criterion_ripoll},
        {12, "CMC vertical family", "forms", criterion_cmc},
    };
    return list;
}

std::string format_report(const SuiteReport &report)
{
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto &c : report.checks) {
        passed += c.pass ? 1 : 0;
        out << (c.pass ? "PASS " : "FAIL ") << c.id << "  max=" << grid::format_short(c.max_residual)
            << "  tol=" << grid::format_short(c.tolerance);
        if (!c.note.empty()) out << "  [" << c.note << "]";
        out << '\n';
    }
    out << "suite " << report.suite << ": " << passed << "/" << report.checks.size() << " checks passed, seed "
        << report.seed << ", " << grid::format_short(report.wall_seconds) << " s -> "
        << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

// ---------------------------------------------------------------- random functions

double RandomSurfaceGenerator::uniform(double lo, double hi)
{
    return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

std::size_t RandomSurfaceGenerator::pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

std::string RandomSurfaceGenerator::number(double lo, double hi)
{
    // Three decimals keep the text short and exactly reproducible.
    const double v = std::round(uniform(lo, hi) * 1000.0) / 1000.0;
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    return v < 0.0 ? "(" + s + ")" : s;
}

std::string RandomSurfaceGenerator::polynomial_terms()
{
    std::string out;
    const std::size_t terms = 3 + pick(3);
    for (std::size_t t = 0; t < terms; ++t) {
        const std::size_t degree = pick(5);
        const std::size_t i = pick(degree + 1), j = degree - i;
        std::string term = number(-0.5, 0.5);
        if (i > 0) term += i == 1 ? "*x" : "*x^" + std::to_string(i);
        if (j > 0) term += j == 1 ? "*y" : "*y^" + std::to_string(j);
        out += (out.empty() ? "" : "+") + term;
    }
    return out;
}

std::string RandomSurfaceGenerator::next_polynomial() { return polynomial_terms(); }

std::string RandomSurfaceGenerator::next()
{
    static const char *const kFns[] = {"sin", "cos", "sinh", "cosh"};
    std::string out = polynomial_terms();
    const std::size_t extra = 1 + pick(2);
    for (std::size_t n = 0; n < extra; ++n) {
        out += "+" + number(-0.5, 0.5) + "*" + kFns[pick(4)] + "(" + number(-1.0, 1.0) + "*x+" + number(-1.0, 1.0)
               + "*y)";
    }
    return out;
}

std::string RandomSurfaceGenerator::next_expression(int depth)
{
    if (depth <= 0) {
        switch (pick(3)) {
        case 0: return "x";
        case 1: return "y";
        default: return number(-2.0, 2.0);
        }
    }
    const std::string a = next_expression(depth - 1);
    switch (pick(14)) {
    case 0: return "(" + a + "+" + next_expression(depth - 1) + ")";
    case 1: return "(" + a + "-" + next_expression(depth - 1) + ")";
    case 2: return a + "*" + next_expression(depth - 1);
    case 3: return a + "/(1.5+(" + next_expression(depth - 1) + ")^2)";
    case 4: return "sin(" + a + ")";
    case 5: return "cos(" + a + ")";
    case 6: return "exp(sin(" + a + "))";
    case 7: return "ln(1.5+(" + a + ")^2)";
    case 8: return "sqrt(1+(" + a + ")^2)";
    case 9: return "tanh(" + a + ")";
    case 10: return "coth(1+(" + a + ")^2)";
    case 11: return "sinh(tanh(" + a + "))";
    case 12: return "(1+(" + a + ")^2)^0.7";
    default: return "-(" + a + ")^3";
    }
}

} // namespace hgauss::harness
