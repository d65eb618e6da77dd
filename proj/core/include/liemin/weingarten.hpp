#pragma once

#include <array>
#include <vector>

#include "liemin/surface.hpp"

namespace liemin {

/// Total-least-squares fit of aK + 2bH + c = 0 over curvature samples.
/// (a,b,c) is the unit right singular vector for the smallest singular value
/// of the n x 3 matrix [K 2H 1], sign-fixed so the first nonzero entry is
/// positive. delta = b^2 - ac of that normalized triple. nullspace_dim counts
/// the near-zero singular values; > 1 means several independent relations fit
/// (e.g. both curvatures constant) and the returned triple is one of many.
struct LinearWeingartenFit {
    std::array<double, 3> abc;
    double delta;
    double fit_residual;
    int nullspace_dim;
};

/// Same machinery for x k1 + y k2 + z = 0 with matrix [k1 k2 1].
struct AffineWeingartenFit {
    std::array<double, 3> xyz;
    double fit_residual;
    int nullspace_dim;
};

/// samples: (K, H) pairs.
LinearWeingartenFit fit_linear_weingarten(const std::vector<std::array<double, 2>>& samples);

/// samples: (k1, k2) pairs.
AffineWeingartenFit fit_affine_weingarten(const std::vector<std::array<double, 2>>& samples);

/// Tubular test: |delta| <= tol, or one principal curvature constant over the
/// samples (stddev <= tol * curvature scale).
bool is_tubular(const LinearWeingartenFit& fit,
                const std::vector<std::array<double, 2>>& k12_samples, double tol = 1e-6);

/// Normal offset X^t = X + t n evaluated in jets (kappa = 0 only). Throws
/// FocalError if |1 - t k_i| <= 1e-6 anywhere on the check grid.
ImmersionPatch parallel_surface(const ImmersionPatch& p, double t,
                                const Grid& focal_check = {16, 16});

/// Offset principal curvatures k_i^t = k_i / (1 - t k_i).
std::pair<double, double> parallel_curvatures(double k1, double k2, double t);

/// Coefficient transport under the parallel transformation:
/// (a,b,c) -> (a + 2bt + ct^2, b + ct, c). Preserves b^2 - ac identically.
std::array<double, 3> bonnet_coeffs(double a, double b, double c, double t);

} // namespace liemin
