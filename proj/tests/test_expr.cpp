#include <doctest.h>

#include <cmath>
#include <thread>

#include "hgauss/expr.hpp"
#include "hgauss/harness.hpp"
#include "hgauss/oracle.hpp"

using namespace hgauss;
using expr::Jet3;

namespace {

const std::vector<std::string> kXY{"x", "y"};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

void check_jet(const Jet3 &got, const Jet3 &want, double tol)
{
    const auto g = got.entries(), w = want.entries();
    for (std::size_t i = 0; i < g.size(); ++i) {
        INFO("entry " << i);
        CHECK(near(g[i], w[i], tol));
    }
}

} // namespace

TEST_CASE("parse builds the expected tree")
{
    const auto e = expr::parse("x*y/2", kXY);
    CHECK(e.leaf_count() == 3);
    const auto *div = std::get_if<expr::Binary>(&e.root().data);
    REQUIRE(div != nullptr);
    CHECK(div->op == expr::BinaryOp::Div);
    const auto *mul = std::get_if<expr::Binary>(&div->lhs->data);
    REQUIRE(mul != nullptr);
    CHECK(mul->op == expr::BinaryOp::Mul);
}

TEST_CASE("saddle expression parses with a parameter")
{
    const auto e = expr::parse("x*y/2 + k*(ln(y+sqrt(1+y^2)) + y*sqrt(1+y^2))", kXY, {"k"});
    CHECK(e.parameters() == std::vector<std::string>{"k"});
    const double v = expr::eval_value(e, 1.0, 0.0, {{"k", 2.0}});
    CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("syntax errors report their offset")
{
    try {
        expr::parse("x*", kXY);
        FAIL("expected a parse error");
    } catch (const expr::ParseError &e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(expr::parse("x + z", kXY), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("sin(x, y)", kXY), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("foo(x)", kXY), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("(x + y", kXY), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("1.2.3", kXY), expr::ParseError);
}

TEST_CASE("symbol tables are validated")
{
    CHECK_THROWS(expr::parse("x", {"x", "y", "z"}));
    CHECK_THROWS(expr::parse("x", {"x", "x"}));
    CHECK_THROWS(expr::parse("x", {"x"}, {"x"}));
    CHECK_THROWS(expr::parse("x", {"sin"}));
}

TEST_CASE("unary minus binds looser than the power")
{
    CHECK(expr::eval_value(expr::parse("-x^2", kXY), 3.0, 0.0) == -9.0);
    CHECK(expr::eval_value(expr::parse("(-x)^2", kXY), 3.0, 0.0) == 9.0);
    CHECK(expr::eval_value(expr::parse("x^-2", kXY), 2.0, 0.0) == 0.25);
    // A factor takes at most one exponent; chains need parentheses.
    CHECK_THROWS_AS(expr::parse("2^3^2", kXY), expr::ParseError);
    CHECK(expr::eval_value(expr::parse("2^(3^2)", kXY), 0.0, 0.0) == 512.0);
}

TEST_CASE("jet of x*y/2 at (1, 2)")
{
    const auto j = expr::eval_jet3(expr::parse("x*y/2", kXY), 1.0, 2.0);
    Jet3 want;
    want.f = 1.0;
    want.fx = 1.0;
    want.fy = 0.5;
    want.fxy = 0.5;
    check_jet(j, want, 1e-15);
}

TEST_CASE("constants have vanishing derivatives")
{
    for (const char *text : {"3", "-2.5e-3", "k*k", "sin(1)+ln(2)"}) {
        const auto j = expr::eval_jet3(expr::parse(text, kXY, {"k"}), 0.3, -0.7, {{"k", 1.7}});
        const auto e = j.entries();
        for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] == 0.0);
    }
}

TEST_CASE("inverse hyperbolic sine jet at the origin")
{
    const auto j = expr::eval_jet3(expr::parse("ln(y+sqrt(1+y^2))", kXY), 0.7, 0.0);
    CHECK(j.f == doctest::Approx(0.0));
    CHECK(j.fy == doctest::Approx(1.0));
    CHECK(j.fyy == doctest::Approx(0.0));
    CHECK(j.fyyy == doctest::Approx(-1.0));
    CHECK(j.fx == 0.0);
}

TEST_CASE("single-variable expressions use the x slot")
{
    const auto a = expr::parse("t^3", {"t"});
    const auto j = expr::eval_jet3(a, 2.0, 0.0);
    CHECK(j.f == 8.0);
    CHECK(j.fx == 12.0);
    CHECK(j.fxx == 12.0);
    CHECK(j.fxxx == 6.0);
    CHECK(j.fy == 0.0);
}

TEST_CASE("domain errors name the offending node")
{
    CHECK_THROWS_AS(expr::eval_value(expr::parse("ln(x)", kXY), 0.0, 1.0), expr::DomainError);
    CHECK_THROWS_AS(expr::eval_value(expr::parse("sqrt(x)", kXY), -1.0, 1.0), expr::DomainError);
    CHECK_THROWS_AS(expr::eval_value(expr::parse("1/x", kXY), 0.0, 1.0), expr::DomainError);
    CHECK_THROWS_AS(expr::eval_value(expr::parse("x^0.5", kXY), -1.0, 1.0), expr::DomainError);
    CHECK_THROWS_AS(expr::eval_jet3(expr::parse("coth(y)", kXY), 1.0, 0.0), expr::DomainError);
    try {
        expr::eval_value(expr::parse("1 + ln(x - 1)", kXY), 0.5, 0.0);
        FAIL("expected a domain error");
    } catch (const expr::DomainError &e) {
        CHECK(e.node() == "ln(x-1)");
    }
}

TEST_CASE("unbound parameters are rejected")
{
    CHECK_THROWS(expr::eval_value(expr::parse("k*x", kXY, {"k"}), 1.0, 1.0));
}

TEST_CASE("coth stays finite for large arguments")
{
    const auto j = expr::eval_jet3(expr::parse("coth(x)", kXY), 800.0, 0.0);
    CHECK(j.f == 1.0);
    CHECK(j.is_finite());
    const auto k = expr::eval_jet3(expr::parse("coth(x)", kXY), -0.5, 0.0);
    const double c = 1.0 / std::tanh(-0.5);
    CHECK(k.f == doctest::Approx(c));
    CHECK(k.fx == doctest::Approx(1.0 - c * c));
}

TEST_CASE("jets agree with the finite-difference oracle on random expressions")
{
    harness::RandomSurfaceGenerator gen(42);
    for (int n = 0; n < 24; ++n) {
        const std::string text = n % 2 == 0 ? gen.next() : gen.next_expression();
        CAPTURE(text);
        const auto e = expr::parse(text, kXY);
        const oracle::ScalarFn fn = [&](double x, double y) { return expr::eval_value(e, x, y); };
        const double x = gen.uniform(-1.0, 1.0), y = gen.uniform(-1.0, 1.0);
        const auto exact = expr::eval_jet3(e, x, y).entries();
        const auto low = ((4.0 / 3.0) * oracle::fd_jet3(fn, x, y, 5e-4) + (-1.0 / 3.0) * oracle::fd_jet3(fn, x, y, 1e-3))
                             .entries();
        const auto high = oracle::fd_jet3_richardson(fn, x, y, 1e-2).entries();
        for (int m = 0; m < 6; ++m) CHECK(near(exact[m], low[m], 1e-6));
        for (int m = 6; m < 10; ++m) CHECK(near(exact[m], high[m], 1e-5));
    }
}

TEST_CASE("linearity and the product rule hold on random inputs")
{
    harness::RandomSurfaceGenerator gen(7);
    for (int n = 0; n < 20; ++n) {
        const auto e1 = expr::parse(gen.next(), kXY), e2 = expr::parse(gen.next_expression(), kXY);
        const double a = gen.uniform(-2, 2), b = gen.uniform(-2, 2), x = gen.uniform(-1, 1), y = gen.uniform(-1, 1);
        const auto j1 = expr::eval_jet3(e1, x, y), j2 = expr::eval_jet3(e2, x, y);
        const auto lhs = expr::eval_jet3(a * e1 + b * e2, x, y).entries();
        const auto rhs = (a * j1 + b * j2).entries();
        for (int m = 0; m < 10; ++m) CHECK(near(lhs[m], rhs[m], 1e-12));
        const auto p = expr::eval_jet3(e1 * e2, x, y);
        CHECK(near(p.fx, j1.f * j2.fx + j1.fx * j2.f, 1e-12));
        CHECK(near(p.fy, j1.f * j2.fy + j1.fy * j2.f, 1e-12));
    }
}

TEST_CASE("printing then parsing is a fixed point")
{
    harness::RandomSurfaceGenerator gen(3);
    for (int n = 0; n < 30; ++n) {
        const auto e = expr::parse(gen.next_expression(), kXY);
        const std::string printed = e.to_string();
        CAPTURE(printed);
        const auto again = expr::parse(printed, kXY);
        CHECK(again.to_string() == printed);
        CHECK(expr::eval_value(again, 0.3, -0.4) == expr::eval_value(e, 0.3, -0.4));
    }
    CHECK(expr::parse("-(x^2)", kXY).to_string() == "-x^2");
    CHECK(expr::parse("(-3)*x", kXY).to_string() == "(-3)*x");
    CHECK(expr::parse("a-(b-c)", {"a", "b"}, {"c"}).to_string() == "a-(b-c)");
}

TEST_CASE("bind and substitute")
{
    const auto e = expr::parse("k*x+y", kXY, {"k"});
    const auto bound = expr::bind(e, {{"k", 3.0}});
    CHECK(bound.parameters().empty());
    CHECK(expr::eval_value(bound, 2.0, 1.0) == 7.0);

    const auto u = expr::parse("x+y", kXY), v = expr::parse("x-y", kXY);
    const std::vector<expr::Expression> repl{u, v};
    const auto s = expr::substitute(expr::parse("x*y", kXY), repl);
    CHECK(expr::eval_value(s, 3.0, 1.0) == 8.0);
    const auto js = expr::eval_jet3(s, 3.0, 1.0);
    CHECK(js.fx == 6.0);
    CHECK(js.fy == -2.0);
}

TEST_CASE("evaluation is safe from several threads")
{
    const auto e = expr::parse("sin(x)*cosh(y)/4 + x^3*y", kXY);
    std::vector<double> out(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] {
            double acc = 0.0;
            for (int i = 0; i < 2000; ++i) acc += expr::eval_jet3(e, 0.001 * i, 0.5).fxxy;
            out[t] = acc;
        });
    }
    for (auto &th : pool) th.join();
    for (int t = 1; t < 4; ++t) CHECK(out[t] == out[0]);
}
