#pragma once

#include <array>

#include "liemin/lie_energy.hpp"
#include "liemin/surface.hpp"

namespace liemin {

/// Smooth compactly supported perturbation profile: the standard mollifier
/// amplitude * exp(1 - 1/(1 - s^2)) on the ellipse
/// s^2 = ((u-u0)/ru)^2 + ((v-v0)/rv)^2 < 1, identically zero outside.
/// Peak value at the center equals the amplitude.
class BumpFunction {
  public:
    BumpFunction(std::array<double, 2> center, std::array<double, 2> radii, double amplitude,
                 const Domain& domain);

    double value(double u, double v) const { return eval(u, v).value(); }
    Jet2 eval(double u, double v) const;

    const std::array<double, 2>& center() const { return center_; }
    const std::array<double, 2>& radii() const { return radii_; }
    double amplitude() const { return amplitude_; }

    /// Bounding box of the support ellipse.
    Domain support_box() const {
        return {center_[0] - radii_[0], center_[0] + radii_[0], center_[1] - radii_[1],
                center_[1] + radii_[1]};
    }

  private:
    std::array<double, 2> center_, radii_;
    double amplitude_;
};

inline BumpFunction bump(std::array<double, 2> center, std::array<double, 2> radii,
                         double amplitude, const Domain& domain) {
    return {center, radii, amplitude, domain};
}

/// Normal perturbation X_eps(u,v) = exp_normal(X, n, eps * phi): geodesic
/// offset by the bump along the unit normal, staying on the quadric for
/// kappa != 0. Throws FocalError if |eps|*amplitude is not safely below the
/// focal bound of the patch.
ImmersionPatch perturb_normal(const ImmersionPatch& p, const BumpFunction& phi, double eps,
                              const Grid& focal_check = {16, 16});

/// Central-difference first variation (L[X_eps] - L[X_-eps]) / (2 eps) of the
/// Lie energy, evaluated through the invariant density over the bump's
/// support box (the perturbation breaks curvature-line alignment, so the
/// coordinate integrand does not apply; outside the support the two energies
/// cancel exactly).
double first_variation(const ImmersionPatch& p, const BumpFunction& phi, const Grid& quad,
                       double eps);

} // namespace liemin
