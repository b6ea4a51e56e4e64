#pragma once

#include <functional>

#include "hgauss/gans.hpp"
#include "hgauss/gaussmap.hpp"
#include "hgauss/jet.hpp"
#include "hgauss/surface.hpp"

// Finite-difference oracle. Every routine here treats the surface as a black
// box f(x, y) -> z and never touches the jet arithmetic it is used to check.
namespace hgauss::oracle {

using ScalarFn = std::function<double(double, double)>;

/// Central differences with step h: standard second-order stencils for
/// orders one and two, third derivatives as centered differences of
/// second-derivative stencils. Throws std::domain_error when fn fails or is
/// non-finite anywhere on the stencil.
expr::Jet3 fd_jet3(const ScalarFn &fn, double x, double y, double h);

/// Two Richardson levels over fd_jet3 at h, h/2 and h/4, cancelling the h^2
/// and h^4 error terms entrywise.
expr::Jet3 fd_jet3_richardson(const ScalarFn &fn, double x, double y, double h);

/// Fourth-order five-point first derivative of fn along x (dir 0) or y (dir 1).
double d1(const ScalarFn &fn, double x, double y, int dir, double h);

/// Value-only black box for a plain graph surface.
ScalarFn graph_function(const surface::GraphSurface &spec);

/// Christoffel symbols of the Gans metric from
/// Gamma^l_mn = 1/2 h^ls (d_m h_sn + d_n h_sm - d_s h_mn), metric derivatives
/// by fourth-order differences with step h.
gans::Christoffel2 fd_christoffel(gans::GansPoint p, double h = 1e-3);

/// Gauss map (-(f_x + y/2), -(f_y - x/2)) with f_x, f_y from differences.
gans::GansPoint fd_gauss_map(const ScalarFn &fn, double x, double y, double h);

/// Jacobian of fd_gauss_map by nested differences.
gaussmap::Jacobian2 fd_gauss_jacobian(const ScalarFn &fn, double x, double y, double h);

/// Tension field with every derivative taken by nested fourth-order
/// differences of the divergence form, plus the connection term built from
/// fd_christoffel at the Gauss map.
gaussmap::TensionValue fd_tension(const ScalarFn &fn, double x, double y, double h = 5e-3);

/// Mean curvature from differenced first and second partials of fn.
double fd_mean_curvature(const ScalarFn &fn, double x, double y, double h = 5e-3);

/// Both lines of the tension/mean-curvature identity with every ingredient
/// taken by differences.
gaussmap::ResidualPair fd_hg_residual(const ScalarFn &fn, double x, double y, double h = 5e-3);

/// tau + (2Hw)_x and tau + (2Hw)_y by differences.
gaussmap::ResidualPair fd_tension_plus_mean_gradient(const ScalarFn &fn, double x, double y, double h = 5e-3);

} // namespace hgauss::oracle
