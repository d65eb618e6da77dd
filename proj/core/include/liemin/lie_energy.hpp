#pragma once

#include <array>

#include "liemin/surface.hpp"

namespace liemin {

/// Euler-Lagrange residuals of the Lie functional at a point,
///   R1 = (k2 - k1) k1_uv + 2 k1_u k1_v,
///   R2 = (k1 - k2) k2_uv + 2 k2_u k2_v,
/// together with the scale-invariant normalization by (|k1|+|k2|+1/l)^3.
/// Both vanish identically on Lie minimal surfaces; the parameter swap
/// (u,v) -> (v,u) exchanges R1 and R2.
struct ELResiduals {
    double r1, r2;
    double r1_normalized, r2_normalized;
};

ELResiduals el_residuals(const CurvatureData& c, double inv_length_scale = 1.0);

/// The Lie functional integral of k1_u k2_v / (k1 - k2)^2 du dv over the patch
/// domain, by tensor Gauss-Legendre quadrature with grid.nx x grid.ny nodes.
/// Requires curvature-line coordinates; throws on umbilics.
double lie_energy(const ImmersionPatch& p, const Grid& grid);

/// A continuous choice of unit principal directions at a point
/// (parameter-space coefficients, unit length in the first fundamental form).
struct PrincipalDirections {
    std::array<double, 2> e1{1.0, 0.0};
    std::array<double, 2> e2{0.0, 1.0};
};

/// Coordinate-free Lie energy density with respect to the area measure:
/// dk1(e1) dk2(e2) / (k1 - k2)^2, with labels and signs matched to the
/// supplied orientation. In curvature-line coordinates this times
/// sqrt(EG) du dv reproduces the coordinate integrand.
double invariant_density(const ImmersionPatch& p, double u, double v,
                         const PrincipalDirections& orientation, double tol_umb = 1e-8);

/// Lie energy evaluated through the invariant density and a direction field
/// propagated row by row from the base corner, over the sub-rectangle `rect`.
/// Works on patches whose coordinates are not curvature-line (perturbed
/// immersions); equals the coordinate functional when they are.
double invariant_energy(const ImmersionPatch& p, const Domain& rect, int nu, int nv,
                        double tol_umb = 1e-8);

struct ChannelCheck {
    enum class Which { K1AlongU, K2AlongV, None };
    bool channel = false;
    Which which = Which::None;
    double max_k1_u = 0.0; // raw maxima over the grid
    double max_k2_v = 0.0;
    double scale = 1.0;    // curvature scale used for the threshold
};

/// Channel test: one principal curvature constant along its own direction,
/// max |k1_u| <= tol*scale or max |k2_v| <= tol*scale over the grid.
ChannelCheck is_channel(const ImmersionPatch& p, const Grid& grid, double tol = 1e-9);

/// Separability diagnostic (log|k1 - k2|)_uv - 4 H_u H_v / (k1 - k2)^2.
/// Algebraically identical to -(R1 + R2)/(k1 - k2)^2, so it vanishes exactly
/// when the Euler-Lagrange equations hold; with constant H the first term
/// alone vanishes, certifying k1 - k2 = alpha(u) beta(v).
double log_gap_residual(const CurvatureData& c);

} // namespace liemin
