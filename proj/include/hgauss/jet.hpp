#pragma once

#include <array>
#include <cmath>

namespace hgauss::expr {

/// Value and all partial derivatives up to order three of a scalar function
/// of (x, y) at one point. Mixed partials are stored once.
struct Jet3 {
    double f = 0.0;
    double fx = 0.0, fy = 0.0;
    double fxx = 0.0, fxy = 0.0, fyy = 0.0;
    double fxxx = 0.0, fxxy = 0.0, fxyy = 0.0, fyyy = 0.0;

    static constexpr Jet3 constant(double c) { return Jet3{c}; }
    static constexpr Jet3 variable_x(double x) { return Jet3{x, 1.0}; }
    static constexpr Jet3 variable_y(double y) { return Jet3{y, 0.0, 1.0}; }

    /// Entries in declaration order: f, fx, fy, fxx, fxy, fyy, fxxx, fxxy, fxyy, fyyy.
    constexpr std::array<double, 10> entries() const
    {
        return {f, fx, fy, fxx, fxy, fyy, fxxx, fxxy, fxyy, fyyy};
    }

    bool is_finite() const
    {
        for (double e : entries()) {
            if (!std::isfinite(e)) return false;
        }
        return true;
    }

    Jet3 &operator+=(const Jet3 &o)
    {
        f += o.f;
        fx += o.fx;
        fy += o.fy;
        fxx += o.fxx;
        fxy += o.fxy;
        fyy += o.fyy;
        fxxx += o.fxxx;
        fxxy += o.fxxy;
        fxyy += o.fxyy;
        fyyy += o.fyyy;
        return *this;
    }

    Jet3 &operator*=(double s)
    {
        f *= s;
        fx *= s;
        fy *= s;
        fxx *= s;
        fxy *= s;
        fyy *= s;
        fxxx *= s;
        fxxy *= s;
        fxyy *= s;
        fyyy *= s;
        return *this;
    }
};

inline Jet3 operator+(Jet3 a, const Jet3 &b) { return a += b; }
inline Jet3 operator*(Jet3 a, double s) { return a *= s; }
inline Jet3 operator*(double s, Jet3 a) { return a *= s; }
inline Jet3 operator-(Jet3 a) { return a *= -1.0; }
inline Jet3 operator-(const Jet3 &a, const Jet3 &b) { return a + (-b); }

/// Leibniz rule truncated at order three.
inline Jet3 operator*(const Jet3 &a, const Jet3 &b)
{
    Jet3 c;
    c.f = a.f * b.f;
    c.fx = a.fx * b.f + a.f * b.fx;
    c.fy = a.fy * b.f + a.f * b.fy;
    c.fxx = a.fxx * b.f + 2.0 * a.fx * b.fx + a.f * b.fxx;
    c.fxy = a.fxy * b.f + a.fx * b.fy + a.fy * b.fx + a.f * b.fxy;
    c.fyy = a.fyy * b.f + 2.0 * a.fy * b.fy + a.f * b.fyy;
    c.fxxx = a.fxxx * b.f + 3.0 * a.fxx * b.fx + 3.0 * a.fx * b.fxx + a.f * b.fxxx;
    c.fxxy = a.fxxy * b.f + a.fxx * b.fy + 2.0 * a.fxy * b.fx + 2.0 * a.fx * b.fxy
             + a.fy * b.fxx + a.f * b.fxxy;
    c.fxyy = a.fxyy * b.f + a.fyy * b.fx + 2.0 * a.fxy * b.fy + 2.0 * a.fy * b.fxy
             + a.fx * b.fyy + a.f * b.fxyy;
    c.fyyy = a.fyyy * b.f + 3.0 * a.fyy * b.fy + 3.0 * a.fy * b.fyy + a.f * b.fyyy;
    return c;
}

/// Chain rule for g(u) given g and its first three derivatives at u.f.
inline Jet3 compose(const Jet3 &u, double g0, double g1, double g2, double g3)
{
    Jet3 h;
    h.f = g0;
    h.fx = g1 * u.fx;
    h.fy = g1 * u.fy;
    h.fxx = g2 * u.fx * u.fx + g1 * u.fxx;
    h.fxy = g2 * u.fx * u.fy + g1 * u.fxy;
    h.fyy = g2 * u.fy * u.fy + g1 * u.fyy;
    h.fxxx = g3 * u.fx * u.fx * u.fx + 3.0 * g2 * u.fx * u.fxx + g1 * u.fxxx;
    h.fxxy = g3 * u.fx * u.fx * u.fy + g2 * (2.0 * u.fx * u.fxy + u.fy * u.fxx) + g1 * u.fxxy;
    h.fxyy = g3 * u.fx * u.fy * u.fy + g2 * (2.0 * u.fy * u.fxy + u.fx * u.fyy) + g1 * u.fxyy;
    h.fyyy = g3 * u.fy * u.fy * u.fy + 3.0 * g2 * u.fy * u.fyy + g1 * u.fyyy;
    return h;
}

} // namespace hgauss::expr
