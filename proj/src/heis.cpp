#include "hgauss/heis.hpp"

#include <stdexcept>

namespace hgauss::heis {

HeisPoint multiply(const HeisPoint &p, const HeisPoint &q)
{
    return {p.x + q.x, p.y + q.y, p.z + q.z + (p.x * q.y - p.y * q.x) / 2.0};
}

HeisPoint inverse(const HeisPoint &p) { return {-p.x, -p.y, -p.z}; }

Matrix3 frame_at(const HeisPoint &p)
{
    return {{{1.0, 0.0, -p.y / 2.0}, {0.0, 1.0, p.x / 2.0}, {0.0, 0.0, 1.0}}};
}

Matrix3 metric_at(const HeisPoint &p)
{
    // Coefficients of the one-form y/2 dx - x/2 dy + dz.
    const Vec3 theta{p.y / 2.0, -p.x / 2.0, 1.0};
    Matrix3 g{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) g[i][j] = (i == j && i < 2 ? 1.0 : 0.0) + theta[i] * theta[j];
    }
    return g;
}

Vec3 to_coordinates(const HeisPoint &p, const FrameVector &v)
{
    return {v.c1, v.c2, -p.y / 2.0 * v.c1 + p.x / 2.0 * v.c2 + v.c3};
}

FrameVector to_frame(const HeisPoint &p, const Vec3 &v)
{
    return {v[0], v[1], v[2] + p.y / 2.0 * v[0] - p.x / 2.0 * v[1]};
}

FrameVector connection_frame(int i, int j)
{
    if (i < 1 || i > 3 || j < 1 || j > 3) throw std::out_of_range("frame indices run from 1 to 3");
    static constexpr FrameVector table[3][3] = {
        {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.5}, {0.0, -0.5, 0.0}},
        {{0.0, 0.0, -0.5}, {0.0, 0.0, 0.0}, {0.5, 0.0, 0.0}},
        {{0.0, -0.5, 0.0}, {0.5, 0.0, 0.0}, {0.0, 0.0, 0.0}},
    };
    return table[i - 1][j - 1];
}

FrameVector covariant_derivative(const FrameVector &field, const FrameVector &field_derivative,
                                 const FrameVector &direction)
{
    const double w[3] = {field.c1, field.c2, field.c3};
    const double v[3] = {direction.c1, direction.c2, direction.c3};
    FrameVector out = field_derivative;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) out += (v[i] * w[k]) * connection_frame(i + 1, k + 1);
    }
    return out;
}

HeisPoint apply_isometry(const HeisIsometry &iso, const HeisPoint &p)
{
    const double c = std::cos(iso.theta), s = std::sin(iso.theta);
    HeisPoint q;
    if (iso.kind == HeisIsometry::Kind::Rotation) {
        q = {c * p.x - s * p.y, s * p.x + c * p.y, p.z};
    } else {
        q = {c * p.x + s * p.y, s * p.x - c * p.y, -p.z};
    }
    return multiply(iso.translation, q);
}

} // namespace hgauss::heis
