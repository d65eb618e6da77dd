#include "liemin/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "liemin/errors.hpp"

namespace liemin {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1)
        throw DomainError("GaussLegendre: need at least one node");
    nodes.resize(n);
    weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        nodes[n / 2] = 0.0;
}

GaussLegendre GaussLegendre::mapped(double a, double b) const {
    GaussLegendre g(*this);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        g.nodes[i] = mid + half * g.nodes[i];
        g.weights[i] *= half;
    }
    return g;
}

double gl_integrate_2d(const std::function<double(double, double)>& f, double ua, double ub,
                       double va, double vb, int nu, int nv) {
    const GaussLegendre gu = GaussLegendre(nu).mapped(ua, ub);
    const GaussLegendre gv = GaussLegendre(nv).mapped(va, vb);
    double acc = 0.0;
    for (int i = 0; i < nu; ++i) {
        double row = 0.0;
        for (int j = 0; j < nv; ++j)
            row += gv.weights[j] * f(gu.nodes[i], gv.nodes[j]);
        acc += gu.weights[i] * row;
    }
    return acc;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kB5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,    0.0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100,  1.0 / 40};

} // namespace

std::vector<double> Rk45::solve(double t0, const std::vector<double>& y0, double t1) const {
    const std::size_t dim = y0.size();
    std::vector<double> y = y0;
    double t = t0;
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    double h = dir * std::max(1e-8, std::abs(t1 - t0) / 64.0);
    std::array<std::vector<double>, 7> k;

    int guard = 0;
    while (dir * (t1 - t) > 0.0) {
        if (++guard > 2000000)
            throw Error("Rk45: step limit exceeded");
        if (dir * (t + h - t1) > 0.0)
            h = t1 - t;

        for (int s = 0; s < 7; ++s) {
            std::vector<double> ys = y;
            for (int m = 0; m < s; ++m)
                for (std::size_t d = 0; d < dim; ++d)
                    ys[d] += h * kA[s][m] * k[m][d];
            k[s] = f_(t + kC[s] * h, ys);
        }

        double err = 0.0;
        std::vector<double> y5 = y;
        for (std::size_t d = 0; d < dim; ++d) {
            double d5 = 0.0, d4 = 0.0;
            for (int s = 0; s < 7; ++s) {
                d5 += kB5[s] * k[s][d];
                d4 += kB4[s] * k[s][d];
            }
            y5[d] += h * d5;
            const double scale = abs_tol_ + rel_tol_ * std::max(std::abs(y[d]), std::abs(y5[d]));
            const double e = h * (d5 - d4) / scale;
            err = std::max(err, std::abs(e));
        }

        if (err <= 1.0) {
            t += h;
            y = std::move(y5);
        }
        const double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::clamp(factor, 0.2, 5.0);
    }
    return y;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y, double slope_a,
                         double slope_b)
    : x_(std::move(x)) {
    const std::size_t n = x_.size();
    if (n < 2 || y.size() != n)
        throw DomainError("CubicSpline: need matching x/y with at least 2 points");
    // Solve for knot first derivatives m_i with clamped ends (tridiagonal system).
    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        if (h[i] <= 0.0)
            throw DomainError("CubicSpline: x must be strictly increasing");
    }
    std::vector<double> diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
    diag[0] = 1.0;
    rhs[0] = slope_a;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double la = 1.0 / h[i - 1], lb = 1.0 / h[i];
        diag[i] = 2.0 * (la + lb);
        upper[i] = lb;
        rhs[i] = 3.0 * ((y[i] - y[i - 1]) * la * la + (y[i + 1] - y[i]) * lb * lb);
    }
    diag[n - 1] = 1.0;
    rhs[n - 1] = slope_b;

    // Thomas algorithm; lower coefficients mirror `upper` of the previous row.
    std::vector<double> m(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double lower = 1.0 / h[i - 1];
        const double w = lower / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    m[n - 1] = rhs[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];

    a_.resize(n - 1);
    b_.resize(n - 1);
    c_.resize(n - 1);
    d_.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dy = y[i + 1] - y[i];
        a_[i] = y[i];
        b_[i] = m[i];
        c_[i] = (3.0 * dy / h[i] - 2.0 * m[i] - m[i + 1]) / h[i];
        d_[i] = (m[i] + m[i + 1] - 2.0 * dy / h[i]) / (h[i] * h[i]);
    }
}

int CubicSpline::piece(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    int i = static_cast<int>(it - x_.begin()) - 1;
    return std::clamp(i, 0, static_cast<int>(a_.size()) - 1);
}

double CubicSpline::operator()(double x) const {
    const int i = piece(x);
    const double t = x - x_[static_cast<std::size_t>(i)];
    return a_[i] + t * (b_[i] + t * (c_[i] + t * d_[i]));
}

std::array<double, 5> CubicSpline::taylor(double x) const {
    const int i = piece(x);
    const double t = x - x_[static_cast<std::size_t>(i)];
    const double val = a_[i] + t * (b_[i] + t * (c_[i] + t * d_[i]));
    const double d1 = b_[i] + t * (2.0 * c_[i] + 3.0 * t * d_[i]);
    const double d2h = c_[i] + 3.0 * t * d_[i]; // y''/2
    return {val, d1, d2h, d_[i], 0.0};
}

double golden_minimize(const std::function<double(double)>& f, double a, double b, double tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace liemin
