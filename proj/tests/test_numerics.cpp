#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "liemin/numerics.hpp"

using namespace liemin;

TEST_CASE("gauss-legendre nodes reproduce the classical 5-point rule") {
    const GaussLegendre g(5);
    CHECK(g.nodes[2] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g.nodes[4] == doctest::Approx(0.9061798459386640).epsilon(1e-13));
    CHECK(g.weights[2] == doctest::Approx(128.0 / 225.0).epsilon(1e-13));
    CHECK(g.weights[4] == doctest::Approx(0.2369268850561891).epsilon(1e-12));
}

TEST_CASE("gauss-legendre is exact on polynomials of degree 2n-1") {
    for (int n : {2, 8, 32, 64}) {
        const GaussLegendre g = GaussLegendre(n).mapped(-0.5, 1.5);
        const int d = 2 * n - 1;
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            acc += g.weights[i] * std::pow(g.nodes[i], d);
        const double exact =
            (std::pow(1.5, d + 1) - std::pow(-0.5, d + 1)) / static_cast<double>(d + 1);
        CHECK(acc == doctest::Approx(exact).epsilon(1e-11).scale(std::abs(exact) + 1.0));
    }
}

TEST_CASE("2d tensor quadrature integrates a separable analytic function") {
    const double got = gl_integrate_2d(
        [](double u, double v) { return std::sin(u) * std::exp(v); }, 0.0, 1.0, -1.0, 0.5, 24,
        24);
    const double exact = (1.0 - std::cos(1.0)) * (std::exp(0.5) - std::exp(-1.0));
    CHECK(got == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("rk45 integrates the harmonic oscillator over many periods") {
    Rk45 ode([](double, const std::vector<double>& y) {
        return std::vector<double>{y[1], -y[0]};
    });
    const auto y = ode.solve(0.0, {1.0, 0.0}, 8.0 * M_PI);
    CHECK(y[0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(y[1] == doctest::Approx(0.0).epsilon(2e-8).scale(1.0));
    // Backwards too.
    const auto back = ode.solve(8.0 * M_PI, y, 0.0);
    CHECK(back[0] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("clamped cubic spline interpolates and reports local taylor data") {
    const std::vector<double> x{0.0, 0.5, 1.0, 1.5, 2.0};
    std::vector<double> y;
    for (double xi : x)
        y.push_back(xi * xi); // parabola-like data
    const CubicSpline s(x, y, 0.0, 0.0);
    for (double xi : x)
        CHECK(s(xi) == doctest::Approx(xi * xi).epsilon(1e-12));
    const auto t = s.taylor(0.75);
    CHECK(t[0] == doctest::Approx(s(0.75)));
    const double fd = (s(0.7501) - s(0.7499)) / 0.0002;
    CHECK(t[1] == doctest::Approx(fd).epsilon(1e-5));
}

TEST_CASE("golden section finds the minimum of a shifted parabola") {
    // localization of a smooth minimum is limited to ~sqrt(machine eps)
    const double x = golden_minimize([](double t) { return (t - 0.37) * (t - 0.37) + 2.0; },
                                     -1.0, 1.0, 1e-12);
    CHECK(x == doctest::Approx(0.37).epsilon(1e-6));
}

TEST_CASE("seeded rng streams are reproducible") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i)
        CHECK(a.uniform() == b.uniform());
    Rng c(124);
    bool differs = false;
    Rng a2(123);
    for (int i = 0; i < 10; ++i)
        differs = differs || (a2.uniform() != c.uniform());
    CHECK(differs);
}
