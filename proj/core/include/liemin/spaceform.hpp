#pragma once

#include <array>
#include <cmath>
#include <string>

#include "liemin/errors.hpp"
#include "liemin/jets.hpp"

namespace liemin {

/// A Riemannian space form of sectional curvature kappa in {-1, 0, +1},
/// modeled as a quadric in a 4-dimensional ambient space. The signature is
/// determined by kappa: (+,+,+,+) for kappa in {0, 1}, (+,+,+,-) for kappa = -1.
/// Euclidean space sits in the affine slice {p : p[3] = 1} so that all three
/// geometries share one code path.
struct SpaceForm {
    int kappa = 0;

    static SpaceForm euclidean() { return {0}; }
    static SpaceForm spherical() { return {1}; }
    static SpaceForm hyperbolic() { return {-1}; }

    /// Sign of the metric on axis 0..3.
    double metric_sign(int axis) const { return (kappa == -1 && axis == 3) ? -1.0 : 1.0; }

    std::string name() const {
        return kappa == 0 ? "R3" : (kappa == 1 ? "S3" : "H3");
    }
};

template <typename T>
struct Vec4 {
    std::array<T, 4> c;

    const T& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    T& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    friend Vec4 operator+(const Vec4& a, const Vec4& b) {
        return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
    }
    friend Vec4 operator-(const Vec4& a, const Vec4& b) {
        return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
    }
    template <typename S>
    friend Vec4 operator*(const S& s, const Vec4& a) {
        return {{s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]}};
    }
};

using Vec4d = Vec4<double>;
using Vec4j = Vec4<Jet2>;

/// Signature-aware inner product of the ambient space of `sf`.
template <typename T>
T inner(const Vec4<T>& a, const Vec4<T>& b, const SpaceForm& sf) {
    T acc = a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
    if (sf.kappa == -1)
        acc -= a.c[3] * b.c[3];
    else
        acc += a.c[3] * b.c[3];
    return acc;
}

inline Vec4d value_part(const Vec4j& p) {
    return {{p[0].value(), p[1].value(), p[2].value(), p[3].value()}};
}

/// Deviation of p from the model quadric: <p,p> - 1/kappa for kappa != 0,
/// p[3] - 1 for the Euclidean affine slice.
inline double quadric_residual(const Vec4d& p, const SpaceForm& sf) {
    if (sf.kappa == 0)
        return p[3] - 1.0;
    return inner(p, p, sf) - 1.0 / sf.kappa;
}

namespace detail {
inline void check_exp_normal_inputs(const Vec4d& p, const Vec4d& n, const SpaceForm& sf) {
    constexpr double tol = 1e-9;
    const double nn = inner(n, n, sf);
    if (std::abs(nn - 1.0) > tol)
        throw DomainError("exp_normal: direction is not unit (<n,n> = " + std::to_string(nn) + ")");
    if (sf.kappa == 0) {
        if (std::abs(n[3]) > tol)
            throw DomainError("exp_normal: direction leaves the affine slice");
    } else {
        const double pn = inner(p, n, sf);
        if (std::abs(pn) > tol)
            throw DomainError("exp_normal: direction is not tangent (<p,n> = " + std::to_string(pn) + ")");
    }
}
} // namespace detail

/// Geodesic normal offset: the point at distance t from p along the unit
/// tangent n. Stays on the model quadric for every kappa.
template <typename T>
Vec4<T> exp_normal_unchecked(const Vec4<T>& p, const Vec4<T>& n, const T& t, const SpaceForm& sf) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    if (sf.kappa == 0)
        return p + t * n;
    if (sf.kappa == 1)
        return cos(t) * p + sin(t) * n;
    return cosh(t) * p + sinh(t) * n;
}

inline Vec4d exp_normal(const Vec4d& p, const Vec4d& n, double t, const SpaceForm& sf) {
    detail::check_exp_normal_inputs(p, n, sf);
    return exp_normal_unchecked(p, n, t, sf);
}

inline Vec4j exp_normal(const Vec4j& p, const Vec4j& n, const Jet2& t, const SpaceForm& sf) {
    detail::check_exp_normal_inputs(value_part(p), value_part(n), sf);
    return exp_normal_unchecked(p, n, t, sf);
}

} // namespace liemin
