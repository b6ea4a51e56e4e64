#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hgauss/harness.hpp"
#include "hgauss/heis.hpp"

using namespace hgauss::heis;
using std::numbers::pi;

namespace {

bool near(const HeisPoint &a, const HeisPoint &b, double tol)
{
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

bool near(const FrameVector &a, const FrameVector &b, double tol)
{
    return std::abs(a.c1 - b.c1) <= tol && std::abs(a.c2 - b.c2) <= tol && std::abs(a.c3 - b.c3) <= tol;
}

HeisPoint random_point(hgauss::harness::RandomSurfaceGenerator &gen)
{
    return {gen.uniform(-3, 3), gen.uniform(-3, 3), gen.uniform(-3, 3)};
}

double quad(const Matrix3 &g, const Vec3 &a, const Vec3 &b)
{
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) s += a[i] * g[i][j] * b[j];
    }
    return s;
}

double det(const Matrix3 &m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

TEST_CASE("group product examples")
{
    CHECK(near(multiply({1, 2, 3}, {0, 0, 0}), {1, 2, 3}, 0.0));
    CHECK(near(multiply({1, 0, 0}, {0, 1, 0}), {1, 1, 0.5}, 0.0));
    CHECK(near(multiply({0, 1, 0}, {1, 0, 0}), {1, 1, -0.5}, 0.0));
    CHECK(near(multiply({1, 2, 3}, {-1, -2, -3}), {0, 0, 0}, 0.0));
    CHECK(near(inverse({0, 0, 0}), {0, 0, 0}, 0.0));
    CHECK(near(inverse({1, -2, 3}), {-1, 2, -3}, 0.0));
}

TEST_CASE("group axioms on random triples")
{
    hgauss::harness::RandomSurfaceGenerator gen(3);
    for (int n = 0; n < 200; ++n) {
        const auto a = random_point(gen), b = random_point(gen), c = random_point(gen);
        CHECK(near(multiply(multiply(a, b), c), multiply(a, multiply(b, c)), 1e-12));
        CHECK(near(multiply(a, inverse(a)), {0, 0, 0}, 1e-12));
        CHECK(near(multiply(inverse(a), a), {0, 0, 0}, 1e-12));
        CHECK(near(inverse(inverse(a)), a, 0.0));
    }
}

TEST_CASE("frame values")
{
    auto f = frame_at({0, 0, 0});
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(f[i][j] == (i == j ? 1.0 : 0.0));
    }
    f = frame_at({0, 2, 0});
    CHECK(f[0] == Vec3{1, 0, -1});
    CHECK(f[1] == Vec3{0, 1, 0});
    CHECK(f[2] == Vec3{0, 0, 1});
    f = frame_at({4, 0, 0});
    CHECK(f[1] == Vec3{0, 1, 2});
}

TEST_CASE("metric values")
{
    auto g = metric_at({0, 0, 0});
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(g[i][j] == (i == j ? 1.0 : 0.0));
    }
    g = metric_at({0, 2, 0});
    CHECK(g[0][0] == 2.0);
    CHECK(g[0][2] == 1.0);
    CHECK(g[2][0] == 1.0);
    CHECK(g[2][2] == 1.0);
    CHECK(g[1][1] == 1.0);
    CHECK(g[0][1] == 0.0);
    CHECK(g[1][2] == 0.0);
}

TEST_CASE("frame is orthonormal and metric has unit determinant")
{
    hgauss::harness::RandomSurfaceGenerator gen(4);
    for (int n = 0; n < 100; ++n) {
        const auto p = random_point(gen);
        const auto f = frame_at(p);
        const auto g = metric_at(p);
        CHECK(std::abs(det(g) - 1.0) <= 1e-12);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) CHECK(std::abs(quad(g, f[i], f[j]) - (i == j ? 1.0 : 0.0)) <= 1e-12);
        }
        const FrameVector v{gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
        CHECK(near(to_frame(p, to_coordinates(p, v)), v, 1e-12));
    }
}

TEST_CASE("frame is left invariant")
{
    // dL_a maps E_i(p) to E_i(a*p); differentiate the translation numerically.
    hgauss::harness::RandomSurfaceGenerator gen(6);
    const double h = 1e-5;
    for (int n = 0; n < 20; ++n) {
        const auto a = random_point(gen), p = random_point(gen);
        const auto fp = frame_at(p), fq = frame_at(multiply(a, p));
        for (int i = 0; i < 3; ++i) {
            const HeisPoint plus{p.x + h * fp[i][0], p.y + h * fp[i][1], p.z + h * fp[i][2]};
            const HeisPoint minus{p.x - h * fp[i][0], p.y - h * fp[i][1], p.z - h * fp[i][2]};
            const auto qp = multiply(a, plus), qm = multiply(a, minus);
            CHECK(std::abs((qp.x - qm.x) / (2 * h) - fq[i][0]) <= 1e-8);
            CHECK(std::abs((qp.y - qm.y) / (2 * h) - fq[i][1]) <= 1e-8);
            CHECK(std::abs((qp.z - qm.z) / (2 * h) - fq[i][2]) <= 1e-8);
        }
    }
}

TEST_CASE("connection table")
{
    CHECK(near(connection_frame(1, 2), {0, 0, 0.5}, 0.0));
    CHECK(near(connection_frame(2, 1), {0, 0, -0.5}, 0.0));
    CHECK(near(connection_frame(1, 3), {0, -0.5, 0}, 0.0));
    CHECK(near(connection_frame(3, 1), {0, -0.5, 0}, 0.0));
    CHECK(near(connection_frame(2, 3), {0.5, 0, 0}, 0.0));
    CHECK(near(connection_frame(3, 2), {0.5, 0, 0}, 0.0));
    for (int i = 1; i <= 3; ++i) CHECK(near(connection_frame(i, i), {0, 0, 0}, 0.0));
    // Torsion free: nabla_i E_j - nabla_j E_i = [E_i, E_j], with [E1, E2] = E3.
    const auto t = connection_frame(1, 2) - connection_frame(2, 1);
    CHECK(near(t, {0, 0, 1}, 0.0));
    CHECK(near(connection_frame(1, 3) - connection_frame(3, 1), {0, 0, 0}, 0.0));
    CHECK(near(connection_frame(2, 3) - connection_frame(3, 2), {0, 0, 0}, 0.0));
}

TEST_CASE("covariant derivative")
{
    CHECK(near(covariant_derivative({0, 0, 1}, {0, 0, 0}, {1, 0, 0}), {0, -0.5, 0}, 0.0));
    // x E1 at the origin along d/dx = E1 there: only the coefficient derivative survives.
    CHECK(near(covariant_derivative({0, 0, 0}, {1, 0, 0}, {1, 0, 0}), {1, 0, 0}, 0.0));
    hgauss::harness::RandomSurfaceGenerator gen(8);
    for (int n = 0; n < 50; ++n) {
        const FrameVector w{gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
        const FrameVector v1{gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
        const FrameVector v2{gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
        const double s = gen.uniform(-2, 2);
        const auto lhs = covariant_derivative(w, {}, v1 + s * v2);
        const auto rhs = covariant_derivative(w, {}, v1) + s * covariant_derivative(w, {}, v2);
        CHECK(near(lhs, rhs, 1e-12));
        // Metric compatibility for constant-coefficient fields.
        const FrameVector u{gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
        CHECK(std::abs(covariant_derivative(w, {}, v1).dot(u) + w.dot(covariant_derivative(u, {}, v1))) <= 1e-12);
    }
}

TEST_CASE("isometry examples")
{
    const HeisIsometry rot{{0, 0, 0}, HeisIsometry::Kind::Rotation, pi / 2};
    CHECK(near(apply_isometry(rot, {1, 0, 0}), {0, 1, 0}, 1e-15));
    const HeisIsometry refl{{0, 0, 0}, HeisIsometry::Kind::Reflection, 0.0};
    CHECK(near(apply_isometry(refl, {1.5, 2, 3}), {1.5, -2, -3}, 0.0));
    // Left translation of a graph point shifts the height by (a y - b x) / 2.
    const HeisIsometry tr{{1, 2, 3}, HeisIsometry::Kind::Rotation, 0.0};
    const double x = 0.4, y = -0.7, f = 1.1;
    CHECK(near(apply_isometry(tr, {x, y, f}), {1 + x, 2 + y, 3 + f + (1 * y - 2 * x) / 2}, 1e-15));
}

TEST_CASE("isometries pull back the metric")
{
    hgauss::harness::RandomSurfaceGenerator gen(9);
    const double h = 1e-5;
    for (int n = 0; n < 40; ++n) {
        const HeisIsometry iso{random_point(gen),
                               n % 2 == 0 ? HeisIsometry::Kind::Rotation : HeisIsometry::Kind::Reflection,
                               gen.uniform(-pi, pi)};
        const auto p = random_point(gen);
        Matrix3 J{};
        for (int d = 0; d < 3; ++d) {
            HeisPoint a = p, b = p;
            (d == 0 ? a.x : d == 1 ? a.y : a.z) += h;
            (d == 0 ? b.x : d == 1 ? b.y : b.z) -= h;
            const auto fa = apply_isometry(iso, a), fb = apply_isometry(iso, b);
            J[d] = {(fa.x - fb.x) / (2 * h), (fa.y - fb.y) / (2 * h), (fa.z - fb.z) / (2 * h)};
        }
        const auto src = metric_at(p), dst = metric_at(apply_isometry(iso, p));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) CHECK(std::abs(quad(dst, J[i], J[j]) - src[i][j]) <= 1e-8);
        }
    }
}
