#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hgauss/gans.hpp"
#include "hgauss/harness.hpp"
#include "hgauss/oracle.hpp"

using namespace hgauss::gans;
using doctest::Approx;
using std::numbers::pi;

TEST_CASE("hemisphere projection")
{
    auto p = hemisphere_to_plane(0.0, 0.0, 1.0);
    CHECK(p.u == 0.0);
    CHECK(p.v == 0.0);
    p = hemisphere_to_plane(1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0));
    CHECK(p.u == Approx(1.0));
    CHECK(p.v == 0.0);
    p = hemisphere_to_plane(0.0, 0.5, std::sqrt(3.0) / 2.0);
    CHECK(p.u == 0.0);
    CHECK(p.v == Approx(1.0 / std::sqrt(3.0)));
    CHECK_THROWS_AS(hemisphere_to_plane(1.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(hemisphere_to_plane(0.0, 0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(hemisphere_to_plane(0.0, 0.0, 0.5), std::domain_error);
}

TEST_CASE("disk maps")
{
    auto g = disk_to_gans({0.0, 0.0});
    CHECK(g.u == 0.0);
    CHECK(g.v == 0.0);
    g = disk_to_gans({0.5, 0.0});
    CHECK(g.u == Approx(4.0 / 3.0));
    CHECK(g.v == 0.0);
    const auto d = gans_to_disk(disk_to_gans({0.3, -0.2}));
    CHECK(std::abs(d.x - 0.3) <= 1e-12);
    CHECK(std::abs(d.y + 0.2) <= 1e-12);
    CHECK_THROWS_AS(disk_to_gans({1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(disk_to_gans({0.8, 0.7}), std::domain_error);
}

TEST_CASE("metric values")
{
    auto m = metric_at({0.0, 0.0});
    CHECK(m.h11 == 1.0);
    CHECK(m.h12 == 0.0);
    CHECK(m.h22 == 1.0);
    m = metric_at({1.0, 0.0});
    CHECK(m.h11 == 0.5);
    CHECK(m.h12 == 0.0);
    CHECK(m.h22 == 1.0);
    CHECK(metric_at({1.0, 1.0}).det() == Approx(1.0 / 3.0));
    hgauss::harness::RandomSurfaceGenerator gen(5);
    for (int n = 0; n < 50; ++n) {
        const GansPoint p{gen.uniform(-10, 10), gen.uniform(-10, 10)};
        const auto h = metric_at(p);
        CHECK(h.h11 > 0.0);
        CHECK(h.det() == Approx(1.0 / (1.0 + p.u * p.u + p.v * p.v)));
    }
}

TEST_CASE("christoffel table values")
{
    auto c = christoffel_at({0.0, 0.0});
    for (int k = 0; k < 2; ++k) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) CHECK(c(k, i, j) == 0.0);
        }
    }
    c = christoffel_at({1.0, 0.0});
    CHECK(c(0, 0, 0) == -0.5);
    CHECK(c(1, 0, 0) == 0.0);
    CHECK(c(0, 1, 1) == -1.0);
    CHECK(c(1, 1, 1) == 0.0);
    CHECK(c(0, 1, 0) == 0.0);
    CHECK(c(1, 1, 0) == 0.0);
}

TEST_CASE("christoffel table matches the metric-derived formula")
{
    hgauss::harness::RandomSurfaceGenerator gen(11);
    for (int n = 0; n < 100; ++n) {
        const GansPoint p{gen.uniform(-3, 3), gen.uniform(-3, 3)};
        const auto t = christoffel_at(p), f = hgauss::oracle::fd_christoffel(p);
        for (int k = 0; k < 2; ++k) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    CHECK(t(k, i, j) == t(k, j, i));
                    CHECK(std::abs(t(k, i, j) - f(k, i, j)) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("geodesics through the origin are sinh curves")
{
    for (const auto &s : geodesic({0.0, 0.0}, {1.0, 0.0}, 2.0, 1e-3)) {
        CHECK(std::abs(s.point.u - std::sinh(s.t)) <= 1e-6);
        CHECK(std::abs(s.point.v) <= 1e-12);
    }
    // Velocity is normalised, so the scale of dir does not matter.
    const auto path = geodesic({0.0, 0.0}, {0.0, 5.0}, 2.0, 1e-3);
    CHECK(path.back().t == 2.0);
    CHECK(std::abs(path.back().point.v - std::sinh(2.0)) <= 1e-6);
    CHECK(std::abs(path.back().point.u) <= 1e-12);
}

TEST_CASE("geodesic samples end exactly at t_max and keep unit speed")
{
    const auto path = geodesic({0.4, -1.2}, {1.0, 2.0}, 1.25, 0.1);
    CHECK(path.size() == 14);
    CHECK(path.back().t == 1.25);
    for (const auto &s : path) CHECK(std::abs(metric_at(s.point).inner(s.velocity, s.velocity) - 1.0) <= 1e-6);
    CHECK_THROWS(geodesic({0, 0}, {0, 0}, 1.0, 0.1));
    CHECK_THROWS(geodesic({0, 0}, {1, 0}, 1.0, 0.0));
    CHECK_THROWS(geodesic({0, 0}, {1, 0}, -1.0, 0.1));
}

TEST_CASE("generic geodesics satisfy u'' = u and v'' = v")
{
    const auto path = geodesic({0.7, -0.3}, {-0.2, 1.0}, 2.0, 1e-3);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const double h = path[i + 1].t - path[i].t;
        const double upp = (path[i + 1].point.u - 2 * path[i].point.u + path[i - 1].point.u) / (h * h);
        const double vpp = (path[i + 1].point.v - 2 * path[i].point.v + path[i - 1].point.v) / (h * h);
        CHECK(std::abs(upp - path[i].point.u) <= 1e-5);
        CHECK(std::abs(vpp - path[i].point.v) <= 1e-5);
    }
}

TEST_CASE("isometry examples")
{
    auto p = apply_isometry(Rotation{pi / 2}, {1.0, 0.0});
    CHECK(std::abs(p.u) <= 1e-15);
    CHECK(p.v == Approx(1.0));
    p = apply_isometry(Reflection{0.0, 1.0}, {2.0, 3.0});
    CHECK(p.u == 2.0);
    CHECK(p.v == -3.0);
    const GansIsometry m = DiskMobius{{0.3, 0.0}, 0.0, false};
    const GansPoint q{0.8, -1.7};
    p = apply_isometry(inverse(m), apply_isometry(m, q));
    CHECK(std::abs(p.u - q.u) <= 1e-12);
    CHECK(std::abs(p.v - q.v) <= 1e-12);
    CHECK_THROWS(apply_isometry(DiskMobius{{1.0, 0.0}, 0.0, false}, q));
    CHECK_THROWS(apply_isometry(Reflection{0.0, 0.0}, q));
}

TEST_CASE("isometries preserve the metric and invert cleanly")
{
    const std::vector<GansIsometry> isos{Rotation{0.7}, Reflection{1.0, -2.0}, DiskMobius{{0.3, 0.2}, 0.5, false},
                                         DiskMobius{{-0.1, 0.4}, 1.1, true}};
    hgauss::harness::RandomSurfaceGenerator gen(17);
    const double h = 1e-4;
    for (const auto &iso : isos) {
        for (int n = 0; n < 20; ++n) {
            const GansPoint p{gen.uniform(-2, 2), gen.uniform(-2, 2)};
            std::array<std::array<double, 2>, 2> J{};
            for (int d = 0; d < 2; ++d) {
                const GansPoint a = apply_isometry(iso, {p.u + (d == 0 ? h : 0), p.v + (d == 1 ? h : 0)});
                const GansPoint b = apply_isometry(iso, {p.u - (d == 0 ? h : 0), p.v - (d == 1 ? h : 0)});
                J[d] = {(a.u - b.u) / (2 * h), (a.v - b.v) / (2 * h)};
            }
            const auto src = metric_at(p), dst = metric_at(apply_isometry(iso, p));
            CHECK(std::abs(dst.inner(J[0], J[0]) - src.h11) <= 1e-7);
            CHECK(std::abs(dst.inner(J[0], J[1]) - src.h12) <= 1e-7);
            CHECK(std::abs(dst.inner(J[1], J[1]) - src.h22) <= 1e-7);
            const auto back = apply_isometry(inverse(iso), apply_isometry(iso, p));
            CHECK(std::abs(back.u - p.u) <= 1e-12);
            CHECK(std::abs(back.v - p.v) <= 1e-12);
        }
    }
}
