#pragma once

#include <array>
#include <cmath>

// The Heisenberg group as R^3 in exponential coordinates, with the
// left-invariant metric making E1, E2, E3 orthonormal.
namespace hgauss::heis {

struct HeisPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Coefficients on the left-invariant frame E1, E2, E3.
struct FrameVector {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    double dot(const FrameVector &o) const { return c1 * o.c1 + c2 * o.c2 + c3 * o.c3; }
    double norm() const { return std::sqrt(dot(*this)); }

    FrameVector &operator+=(const FrameVector &o)
    {
        c1 += o.c1;
        c2 += o.c2;
        c3 += o.c3;
        return *this;
    }
};

inline FrameVector operator+(FrameVector a, const FrameVector &b) { return a += b; }
inline FrameVector operator*(double s, const FrameVector &a) { return {s * a.c1, s * a.c2, s * a.c3}; }
inline FrameVector operator-(const FrameVector &a, const FrameVector &b) { return a + (-1.0) * b; }
inline FrameVector operator-(const FrameVector &a) { return (-1.0) * a; }

using Vec3 = std::array<double, 3>;
using Matrix3 = std::array<Vec3, 3>;

HeisPoint multiply(const HeisPoint &p, const HeisPoint &q);
HeisPoint inverse(const HeisPoint &p);

/// Rows are E1, E2, E3 expanded on d/dx, d/dy, d/dz at p.
Matrix3 frame_at(const HeisPoint &p);

/// ds^2 = dx^2 + dy^2 + (y/2 dx - x/2 dy + dz)^2 in coordinates.
Matrix3 metric_at(const HeisPoint &p);

/// Coordinate components (d/dx, d/dy, d/dz) of a frame vector at p, and back.
Vec3 to_coordinates(const HeisPoint &p, const FrameVector &v);
FrameVector to_frame(const HeisPoint &p, const Vec3 &v);

/// nabla_{E_i} E_j, frame indices 1..3.
FrameVector connection_frame(int i, int j);

/// nabla_v W for a field W = sum W^k E_k. field holds W^k at the point and
/// field_derivative the directional derivatives v(W^k) of its components.
FrameVector covariant_derivative(const FrameVector &field, const FrameVector &field_derivative,
                                 const FrameVector &direction);

/// L_translation o A, where A is a rotation about the z axis by theta, or the
/// reflection-type map [[cos, sin, 0], [sin, -cos, 0], [0, 0, -1]].
struct HeisIsometry {
    enum class Kind { Rotation, Reflection };

    HeisPoint translation;
    Kind kind = Kind::Rotation;
    double theta = 0.0;
};

HeisPoint apply_isometry(const HeisIsometry &iso, const HeisPoint &p);

} // namespace hgauss::heis
