#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace liemin {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence. Exact for polynomials of degree 2n-1.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n);

    /// Nodes/weights mapped to [a, b].
    GaussLegendre mapped(double a, double b) const;
};

/// Tensor Gauss-Legendre quadrature of f(u,v) over [ua,ub] x [va,vb].
double gl_integrate_2d(const std::function<double(double, double)>& f, double ua, double ub,
                       double va, double vb, int nu, int nv);

/// Adaptive Dormand-Prince 5(4) integrator for y' = f(t, y).
/// Integrates from t0 to t1 (either direction) and reports dense samples on request.
class Rk45 {
  public:
    using Field = std::function<std::vector<double>(double, const std::vector<double>&)>;

    Rk45(Field f, double abs_tol = 1e-12, double rel_tol = 1e-10)
        : f_(std::move(f)), abs_tol_(abs_tol), rel_tol_(rel_tol) {}

    /// State at t1 starting from y0 at t0.
    std::vector<double> solve(double t0, const std::vector<double>& y0, double t1) const;

  private:
    Field f_;
    double abs_tol_, rel_tol_;
};

/// Clamped cubic spline through (x_i, y_i) with zero end slopes by default.
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y, double slope_a = 0.0,
                double slope_b = 0.0);

    double operator()(double x) const;
    /// Local Taylor coefficients [y, y', y''/2, y'''/6, 0] of the active piece at x.
    std::array<double, 5> taylor(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

  private:
    int piece(double x) const;
    std::vector<double> x_, a_, b_, c_, d_; // piece i: a + b*t + c*t^2 + d*t^3, t = x - x_i
};

/// Golden-section minimization of a unimodal function on [a, b].
double golden_minimize(const std::function<double(double)>& f, double a, double b,
                       double tol = 1e-10);

/// Deterministic uniform doubles in [lo, hi) from a seeded mt19937_64.
/// Bit-level construction keeps streams identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        const std::uint64_t bits = gen_() >> 11;
        return lo + (hi - lo) * (static_cast<double>(bits) * 0x1.0p-53);
    }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace liemin
