#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hgauss/grid.hpp"
#include "hgauss/harness.hpp"
#include "hgauss/oracle.hpp"

using namespace hgauss;
using doctest::Approx;

TEST_CASE("finite-difference jet of x^3 y")
{
    const oracle::ScalarFn fn = [](double x, double y) { return x * x * x * y; };
    const auto j = oracle::fd_jet3(fn, 1.0, 1.0, 1e-3);
    CHECK(std::abs(j.f - 1.0) <= 1e-12);
    CHECK(std::abs(j.fx - 3.0) <= 1e-5);
    CHECK(std::abs(j.fy - 1.0) <= 1e-5);
    CHECK(std::abs(j.fxx - 6.0) <= 1e-5);
    CHECK(std::abs(j.fxy - 3.0) <= 1e-5);
    CHECK(std::abs(j.fyy) <= 1e-5);
    CHECK(std::abs(j.fxxx - 6.0) <= 1e-5);
    CHECK(std::abs(j.fxxy - 6.0) <= 1e-5);
    CHECK(std::abs(j.fxyy) <= 1e-5);
    CHECK(std::abs(j.fyyy) <= 1e-5);
}

TEST_CASE("finite-difference jet of a constant")
{
    const auto j = oracle::fd_jet3([](double, double) { return 4.25; }, 0.3, -0.7, 1e-3);
    CHECK(j.f == 4.25);
    const auto e = j.entries();
    for (std::size_t i = 1; i < e.size(); ++i) CHECK(std::abs(e[i]) <= 1e-10);
}

TEST_CASE("finite-difference jet converges at second order")
{
    const oracle::ScalarFn fn = [](double x, double y) { return std::sin(x) * std::exp(0.5 * y); };
    const double x = 0.4, y = -0.3;
    const double fx = std::cos(x) * std::exp(0.5 * y), fxx = -std::sin(x) * std::exp(0.5 * y);
    const double fxy = 0.5 * fx, fyy = 0.25 * std::sin(x) * std::exp(0.5 * y);
    const auto a = oracle::fd_jet3(fn, x, y, 2e-2), b = oracle::fd_jet3(fn, x, y, 1e-2);
    for (const auto &[ea, eb] : {std::pair{a.fx - fx, b.fx - fx}, std::pair{a.fxx - fxx, b.fxx - fxx},
                                 std::pair{a.fxy - fxy, b.fxy - fxy}, std::pair{a.fyy - fyy, b.fyy - fyy}}) {
        const double ratio = std::abs(ea / eb);
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
    }
    const auto r = oracle::fd_jet3_richardson(fn, x, y, 1e-2);
    CHECK(std::abs(r.fx - fx) <= 1e-10);
    CHECK(std::abs(r.fxx - fxx) <= 1e-9);
}

TEST_CASE("finite-difference jet reports stencils leaving the domain")
{
    const oracle::ScalarFn fn = [](double x, double) {
        if (x <= 0.0) throw std::domain_error("ln of non-positive");
        return std::log(x);
    };
    CHECK_THROWS_AS(oracle::fd_jet3(fn, 1e-4, 0.0, 1e-3), std::domain_error);
    CHECK_NOTHROW(oracle::fd_jet3(fn, 1.0, 0.0, 1e-3));
    CHECK_THROWS_AS(oracle::fd_jet3([](double, double) { return NAN; }, 0.0, 0.0, 1e-3), std::domain_error);
}

TEST_CASE("surface references")
{
    auto r = grid::parse_surface_ref("catalog:scherk?k=1");
    CHECK(r.kind == grid::SurfaceRef::Kind::Catalog);
    CHECK(r.name_or_text == "scherk");
    CHECK(r.params.at("k") == 1.0);
    CHECK_FALSE(r.domain.has_value());
    r = grid::parse_surface_ref("expr:x*y/2+k*x?k=0.5&domain=-2,2,-1,3");
    CHECK(r.kind == grid::SurfaceRef::Kind::Expression);
    CHECK(r.name_or_text == "x*y/2+k*x");
    CHECK(r.params.at("k") == 0.5);
    REQUIRE(r.domain.has_value());
    CHECK(r.domain->x0 == -2.0);
    CHECK(r.domain->y1 == 3.0);
    const auto spec = grid::resolve(r);
    const auto &g = std::get<surface::GraphSurface>(spec);
    CHECK(expr::eval_value(g.f, 2.0, 3.0, g.params) == Approx(4.0));
    CHECK(surface::domain_of(spec).y0 == -1.0);
    CHECK(std::holds_alternative<surface::GraphSurface>(grid::resolve(grid::parse_surface_ref("catalog:plane"))));

    CHECK_THROWS_AS(grid::parse_surface_ref("scherk"), std::invalid_argument);
    CHECK_THROWS_AS(grid::parse_surface_ref("catalog:"), std::invalid_argument);
    CHECK_THROWS_AS(grid::parse_surface_ref("catalog:scherk?k"), std::invalid_argument);
    CHECK_THROWS_AS(grid::parse_surface_ref("catalog:scherk?k=abc"), std::invalid_argument);
    CHECK_THROWS_AS(grid::parse_surface_ref("expr:x?domain=1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(grid::parse_domain("1,0,0,1"), std::invalid_argument);
    CHECK_THROWS_AS(grid::resolve(grid::parse_surface_ref("catalog:nosuch")), std::invalid_argument);
    CHECK_THROWS_AS(grid::resolve(grid::parse_surface_ref("expr:x+")), expr::ParseError);
}

TEST_CASE("grid of a plane")
{
    const auto rows = grid::sample_grid(surface::catalog("plane", {{"a", 1.0}, {"b", 2.0}, {"c", 0.0}}), 2, 2,
                                        surface::Domain{0.0, 1.0, 0.0, 1.0});
    REQUIRE(rows.size() == 4);
    CHECK(rows[1].x == 1.0);
    CHECK(rows[1].y == 0.0);
    CHECK(rows[2].x == 0.0);
    CHECK(rows[2].y == 1.0);
    for (const auto &r : rows) {
        CHECK(std::abs(r.H) <= 1e-15);
        CHECK(r.f == Approx(r.x + 2.0 * r.y));
        CHECK(r.det_phi == 0.25);
    }
}

TEST_CASE("grid of scherk has vanishing tension")
{
    const auto rows = grid::sample_grid(surface::catalog("scherk"), 5, 5);
    REQUIRE(rows.size() == 25);
    for (const auto &r : rows) {
        CHECK(std::abs(r.tau1) <= 1e-8);
        CHECK(std::abs(r.tau2) <= 1e-8);
    }
}

TEST_CASE("grid of daniel reproduces the determinant")
{
    const auto rows = grid::sample_grid(surface::catalog("daniel"), 2, 10, surface::Domain{-1.0, 1.0, 0.5, 2.0});
    REQUIRE(rows.size() == 20);
    for (std::size_t j = 0; j < 10; ++j) {
        const double s = 0.5 + 1.5 * static_cast<double>(j) / 9.0;
        const double t = std::tanh(s);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(std::abs(rows[j * 2 + i].det_phi + 0.25 * (t * t * t * t - 1.0)) <= 1e-10);
        }
    }
}

TEST_CASE("grid of a vertical surface")
{
    const auto rows = grid::sample_grid(surface::catalog("vertical_plane"), 3, 2);
    for (const auto &r : rows) {
        CHECK(r.y == -r.x);
        CHECK(r.H == 0.0);
        CHECK(std::isnan(r.p));
        CHECK(std::isnan(r.tau1));
    }
    CHECK(grid::to_csv(rows).find("nan") != std::string::npos);
    CHECK(grid::to_json(rows).find("null") != std::string::npos);
}

TEST_CASE("grid errors")
{
    CHECK_THROWS_AS(grid::sample_grid(surface::catalog("plane"), 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(grid::sample_grid(surface::catalog("plane"), 5, 0), std::invalid_argument);
    const surface::GraphSurface bad{expr::parse("ln(x)", {"x", "y"}), {}, {}};
    try {
        grid::sample_grid(bad, 3, 2, surface::Domain{-1.0, 1.0, 0.0, 1.0});
        FAIL("expected a domain error");
    } catch (const std::domain_error &e) {
        const std::string what = e.what();
        CHECK(what.find("node 0 (i=0, j=0)") != std::string::npos);
    }
}

TEST_CASE("exports are deterministic")
{
    const auto spec = surface::catalog("scherk", {{"k", 0.5}});
    const auto a = grid::sample_grid(spec, 7, 6), b = grid::sample_grid(spec, 7, 6);
    CHECK(grid::to_csv(a) == grid::to_csv(b));
    CHECK(grid::to_json(a) == grid::to_json(b));
    const auto csv = grid::to_csv(a);
    CHECK(csv.starts_with("x,y,f,p,q,w,E,F,G,L,M,N,H,phi_u,phi_v,det_phi,tau1,tau2\n"));
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == 43);
    CHECK(grid::column_names().size() == grid::kColumnCount);
    CHECK(grid::format_double(0.1) == "0.10000000000000001");
    CHECK(grid::format_double(NAN) == "nan");
    CHECK(std::stod(grid::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("suites")
{
    auto report = harness::run_suite("minimal");
    CHECK(report.passed());
    CHECK(report.seed == harness::kDefaultSeed);
    report = harness::run_suite("gans", {std::nullopt, 7});
    CHECK(report.passed());
    CHECK(report.seed == 7);
    const auto text = harness::format_report(report);
    CHECK(text.find("criterion-01") != std::string::npos);
    CHECK(text.find("-> PASS") != std::string::npos);
    // An absurdly tight override turns numerical checks red.
    CHECK_FALSE(harness::run_suite("gans", {1e-30, 7}).passed());
    CHECK_THROWS_AS(harness::run_suite("nosuch"), std::invalid_argument);
    CHECK(harness::suite_names().back() == "all");
    CHECK(harness::acceptance_criteria().size() == 12);
}

TEST_CASE("seed from the environment")
{
    ::unsetenv("HGAUSS_SEED");
    CHECK(harness::seed_from_environment() == harness::kDefaultSeed);
    ::setenv("HGAUSS_SEED", "42", 1);
    CHECK(harness::seed_from_environment() == 42);
    ::setenv("HGAUSS_SEED", "4x2", 1);
    CHECK_THROWS_AS(harness::seed_from_environment(), std::invalid_argument);
    ::unsetenv("HGAUSS_SEED");
}

TEST_CASE("random surfaces are reproducible")
{
    harness::RandomSurfaceGenerator a(99), b(99), c(100);
    const auto ea = a.next(), eb = b.next(), ec = c.next();
    CHECK(ea == eb);
    CHECK(ea != ec);
    CHECK_NOTHROW(expr::parse(ea, {"x", "y"}));
    CHECK_NOTHROW(expr::parse(a.next_expression(), {"x", "y"}));
}
