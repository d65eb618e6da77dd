#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "liemin/jets.hpp"
#include "liemin/spaceform.hpp"

namespace liemin {

struct Domain {
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;

    double u_extent() const { return u1 - u0; }
    double v_extent() const { return v1 - v0; }
    bool contains(double u, double v) const {
        return u >= u0 && u <= u1 && v >= v0 && v <= v1;
    }
};

/// Uniform sampling resolution for grid sweeps and quadrature node counts.
struct Grid {
    int nx = 32;
    int ny = 32;
};

/// Uniform sample coordinates over a domain, endpoints included.
std::vector<double> grid_axis(double a, double b, int n);

/// Analytic immersion of a parameter rectangle into the ambient space of a
/// space form, evaluated as order-4 jets so that curvature partials up to
/// k_{i,uv} are exact. Evaluation is pure; grids may be swept in parallel.
struct ImmersionPatch {
    SpaceForm sf;
    Domain domain;
    std::string label;
    std::function<Vec4j(double, double)> eval;
    bool umbilic_only = false; // spheres/planes: valid only for error-path tests
};

/// First and second fundamental form coefficients at a point (value parts).
struct FundamentalForms {
    double E, F, G; // first form
    double L, M, N; // second form
};

/// Jet-valued evaluation bundle at one parameter point.
struct FormJets {
    Vec4j X, Xu, Xv, n;
    Jet2 E, F, G, L, M, N;
};

/// Principal curvature data at a point. k1 is the curvature attached to the
/// u-direction (k1 = L/E in curvature-line coordinates), not the larger value;
/// identities depending on the (u,v)-labeling follow that convention.
///
/// Wrapped patches (normal offsets, perturbations) evaluate through the base
/// patch's normal and lose jet orders: their curvature jets may carry only the
/// value, or value + first partials. The has_* flags say which derivative
/// fields are meaningful; the others are NaN.
struct CurvatureData {
    double k1, k2;
    double H, K;
    std::array<double, 2> e1, e2; // unit principal directions, parameter-space coefficients
    double k1_u, k1_v, k2_u, k2_v;
    double k1_uv, k2_uv;
    bool has_first_partials = true;
    bool has_mixed_partials = true;
    Jet2 k1_jet, k2_jet;
};

struct CoordinateRegime {
    bool curvature_line = false;
    bool isothermic = false;
    double max_F = 0.0;        // max |F|/sqrt(EG)
    double max_M = 0.0;        // max |M|/sqrt(EG), curvature-normalized
    double max_conf_defect = 0.0; // max |E-G|/max(E,G)
};

/// Evaluate the immersion and assemble position/derivative/normal jets and the
/// six fundamental form coefficients. Throws CoordinateError on a degenerate metric.
FormJets forms_at(const ImmersionPatch& p, double u, double v);

FundamentalForms fundamental_forms(const ImmersionPatch& p, double u, double v);

/// Unit normal as jets, orthogonal (signature-aware) to X_u, X_v and, for
/// kappa != 0, to the position X. Orientation: the frame (X_u, X_v, n[, X])
/// is positively oriented.
Vec4j unit_normal(const ImmersionPatch& p, double u, double v);

/// Principal curvatures, directions and curvature partials from the jets.
/// Requires curvature-line alignment within tol_align at the point; throws
/// CoordinateError otherwise and UmbilicError within tol_umb of an umbilic.
CurvatureData curvature_data(const ImmersionPatch& p, double u, double v,
                             double tol_umb = 1e-8, double tol_align = 1e-6);

/// General-route variant valid in any coordinates: principal curvatures via
/// H +- sqrt(H^2 - K) in jet arithmetic with eigen-directions of the shape
/// operator, labeled so that k1 stays attached to the u-ish direction. Falls
/// back to the L/E route when alignment is within tol_align.
CurvatureData curvature_data_general(const ImmersionPatch& p, double u, double v,
                                     double tol_umb = 1e-8, double tol_align = 1e-6);
CurvatureData curvature_data_general(const FormJets& f, const SpaceForm& sf, double tol_umb = 1e-8,
                                     double tol_align = 1e-6);

/// Sweep the grid and classify the coordinate regime.
CoordinateRegime check_coordinates(const ImmersionPatch& p, const Grid& grid, double tol = 1e-8);

/// Codazzi residuals r1 = k1_v/(k2-k1) - (log sqrt(E))_v and
/// r2 = k2_u/(k1-k2) - (log sqrt(G))_u; both vanish on any genuine surface in
/// curvature-line coordinates.
std::pair<double, double> codazzi_residual(const ImmersionPatch& p, double u, double v);
std::pair<double, double> codazzi_residual(const FormJets& f, double tol_umb = 1e-8);

/// Gauss residual sigma_uu + sigma_vv + (kappa + K) e^{2 sigma} with
/// sigma = log sqrt(E); requires isothermic coordinates within tol_iso.
double gauss_residual(const ImmersionPatch& p, double u, double v, double tol_iso = 1e-6);
double gauss_residual(const FormJets& f, const SpaceForm& sf, double tol_iso = 1e-6);

/// Characteristic length of the patch (extent in ambient units), used to make
/// residual normalizations scale-invariant.
double patch_length_scale(const ImmersionPatch& p, const Grid& grid);

} // namespace liemin
