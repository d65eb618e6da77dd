#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liemin/surface.hpp"

namespace liemin {

struct Interval {
    double a = 0.0, b = 1.0;
    double length() const { return b - a; }
};

/// Generating curve gamma = (r, 0, h, k) of a rotational surface, evaluated as
/// order-4 jets in the profile parameter (seeded as the v-variable). k == 1
/// identically for kappa = 0. `isothermic` records whether the normalization
/// <gamma', gamma'> = r^2 holds, which the closed curvature formulas require.
struct ProfileCurve {
    struct Jets {
        Jet2 r, h, k;
    };

    std::function<Jets(double)> eval;
    Interval domain;
    int kappa = 0;
    bool isothermic = false;
};

/// Surface of revolution X(u,v) = rho(u) (r(v), 0, h(v), k(v)) with rho the
/// rotation in the first two ambient coordinates; u in [u0, u1], v over the
/// profile domain. Rotational coordinates are curvature-line (F = M = 0).
ImmersionPatch make_rotational(const ProfileCurve& profile, const SpaceForm& sf,
                               double u0 = 0.0, double u1 = 2.0 * M_PI,
                               std::string label = "rotational");

/// Closed-form principal curvatures of the rotational surface at profile
/// parameter v: k1 = (k h' - h k')/r^2 for the orbit direction and
/// k2 = det[(r,r',r''),(h,h',h''),(k,k',kappa k'')]/r^3 for the meridian.
/// Requires the isothermic normalization (checked to 1e-8).
std::pair<double, double> rotational_curvatures(const ProfileCurve& profile, double v,
                                                const SpaceForm& sf);

using FixtureParams = std::map<std::string, double>;

/// Named analytic fixtures with domains that avoid singular loci. Sphere and
/// plane are umbilic everywhere and flagged accordingly (valid only for
/// error-path tests). Names: plane, cylinder, cone, sphere, catenoid, torus,
/// unduloid, nodoid, enneper, spline-profile (param "seed"),
/// band-spherical, band-hyperbolic.
ImmersionPatch builtin_fixture(const std::string& name, const FixtureParams& params = {});

/// Generating curve of a rotational builtin fixture (nullopt for plane and
/// enneper, which are not surfaces of revolution in these coordinates).
std::optional<ProfileCurve> builtin_profile(const std::string& name,
                                            const FixtureParams& params = {});

std::vector<std::string> builtin_fixture_names();

/// Constant mean curvature profile through the arclength system
/// r' = cos(psi), h' = sin(psi), psi' = 2H - sin(psi)/r started at a neck
/// (psi(0) = pi/2, r(0) = r0), integrated adaptively and reparametrized to the
/// isothermic normalization. Derivative jets come from the lifted vector
/// field, not from differencing the trajectory.
ProfileCurve delaunay_profile(double H, double r0, Interval span);

/// Isothermic profile from a clamped cubic radius spline through
/// (knots_i, values_i); h solves h' = sqrt(r^2 - r'^2). Rejects data whose
/// slopes push r^2 - r'^2 below a safety margin.
ProfileCurve profile_from_radius_spline(std::vector<double> knots, std::vector<double> values);

/// Seeded random isothermic profile: clamped cubic spline r(v) through random
/// control values, h solved from h' = sqrt(r^2 - r'^2).
ProfileCurve spline_profile(std::uint64_t seed, Interval span = {-1.0, 1.0});

/// Rotational band in S^3 (kappa=1) or H^3 (kappa=-1): analytic radius
/// function, remaining profile components solved so the parametrization is
/// isothermic. The rotation fixes the (e3,e4)-plane; the orthogonal plane is
/// Riemannian for either sign of kappa.
ProfileCurve band_profile(int kappa, Interval span = {-0.8, 0.8});

/// Reconstruct a rotational surface from channel data given as functions of
/// one parameter: E > 0 (conformal factor squared), k_profile (curvature of
/// the profile direction), k_orbit (curvature of the orbit direction, constant
/// along itself). Validates the Codazzi constraint
/// k_orbit'/(k_profile - k_orbit) = (log sqrt(E))' and the isothermic
/// normalization before building r = sqrt(E), h' = E * k_orbit.
ProfileCurve channel_to_rotational(const std::function<Jet2(double)>& E,
                                   const std::function<Jet2(double)>& k_profile,
                                   const std::function<Jet2(double)>& k_orbit, Interval domain,
                                   double tol = 1e-6);

} // namespace liemin
