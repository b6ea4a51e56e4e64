#pragma once

#include <array>
#include <complex>
#include <variant>
#include <vector>

// Gans model of the hyperbolic plane: the whole (u, v) plane with the metric
// pulled back from the Poincare disk through the central projection of the
// upper hemisphere.
namespace hgauss::gans {

struct GansPoint {
    double u = 0.0;
    double v = 0.0;
};

struct DiskPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Symmetric metric tensor in (u, v) coordinates.
struct Metric2 {
    double h11 = 1.0;
    double h12 = 0.0;
    double h22 = 1.0;

    double det() const { return h11 * h22 - h12 * h12; }
    double inner(std::array<double, 2> a, std::array<double, 2> b) const
    {
        return h11 * a[0] * b[0] + h12 * (a[0] * b[1] + a[1] * b[0]) + h22 * a[1] * b[1];
    }
};

/// Connection coefficients; gamma[k][i][j] is the upper-k, lower-(i,j) symbol,
/// indices 0 and 1 standing for u and v.
struct Christoffel2 {
    std::array<std::array<std::array<double, 2>, 2>, 2> gamma{};

    double operator()(int k, int i, int j) const { return gamma[k][i][j]; }
};

GansPoint hemisphere_to_plane(double x, double y, double z);

DiskPoint gans_to_disk(GansPoint p);
GansPoint disk_to_gans(DiskPoint d);

Metric2 metric_at(GansPoint p);

/// Closed-form table of the six independent symbols.
Christoffel2 christoffel_at(GansPoint p);

struct GeodesicSample {
    double t = 0.0;
    GansPoint point;
    std::array<double, 2> velocity{};
};

/// Fixed-step RK4 integration of the full geodesic equation
/// x''^k + Gamma^k_ij x'^i x'^j = 0. The initial velocity is rescaled to unit
/// h-length. The final step is shortened so the last sample lands on t_max.
std::vector<GeodesicSample> geodesic(GansPoint start, std::array<double, 2> velocity,
                                     double t_max, double step);

/// Rotation about the origin, e^{i theta} w.
struct Rotation {
    double theta = 0.0;
};

/// Euclidean reflection across the line a u + b v = 0.
struct Reflection {
    double a = 0.0;
    double b = 1.0;
};

/// F o rho o F^{-1} with rho(z) = e^{i theta} (z - a) / (1 - conj(a) z) on the
/// disk, applied to conj(z) first when conjugate is set.
struct DiskMobius {
    std::complex<double> a;
    double theta = 0.0;
    bool conjugate = false;
};

using GansIsometry = std::variant<Rotation, Reflection, DiskMobius>;

GansPoint apply_isometry(const GansIsometry &iso, GansPoint p);
GansIsometry inverse(const GansIsometry &iso);

} // namespace hgauss::gans
