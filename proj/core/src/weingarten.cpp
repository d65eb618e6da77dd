#include "liemin/weingarten.hpp"

#include <cmath>
#include <functional>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "liemin/errors.hpp"
#include "liemin/spaceform.hpp"

namespace liemin {

namespace {

struct TlsResult {
    std::array<double, 3> vec;
    double residual;
    int nullspace_dim;
};

TlsResult tls_fit(const std::vector<std::array<double, 2>>& samples,
                  const std::function<std::array<double, 3>(const std::array<double, 2>&)>& row) {
    const auto n = static_cast<Eigen::Index>(samples.size());
    if (n < 3)
        throw DomainError("weingarten fit: need at least 3 samples");
    Eigen::MatrixXd A(n, 3);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto r = row(samples[static_cast<std::size_t>(i)]);
        A(i, 0) = r[0];
        A(i, 1) = r[1];
        A(i, 2) = r[2];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
    const Eigen::Vector3d s = svd.singularValues();
    Eigen::Vector3d v = svd.matrixV().col(2);

    // Sign convention: first entry above noise is positive.
    for (int i = 0; i < 3; ++i) {
        if (std::abs(v(i)) > 1e-12) {
            if (v(i) < 0.0)
                v = -v;
            break;
        }
    }
    const double thresh = std::max(1e-10 * s(0), 1e-13);
    int dim = 0;
    for (int i = 0; i < 3; ++i)
        if (s(i) <= thresh)
            ++dim;
    return {{v(0), v(1), v(2)}, s(2) / std::sqrt(static_cast<double>(n)), dim};
}

} // namespace

LinearWeingartenFit fit_linear_weingarten(const std::vector<std::array<double, 2>>& samples) {
    const TlsResult r = tls_fit(samples, [](const std::array<double, 2>& kh) {
        return std::array<double, 3>{kh[0], 2.0 * kh[1], 1.0};
    });
    const double delta = r.vec[1] * r.vec[1] - r.vec[0] * r.vec[2];
    return {r.vec, delta, r.residual, r.nullspace_dim};
}

AffineWeingartenFit fit_affine_weingarten(const std::vector<std::array<double, 2>>& samples) {
    const TlsResult r = tls_fit(samples, [](const std::array<double, 2>& k12) {
        return std::array<double, 3>{k12[0], k12[1], 1.0};
    });
    return {r.vec, r.residual, r.nullspace_dim};
}

bool is_tubular(const LinearWeingartenFit& fit,
                const std::vector<std::array<double, 2>>& k12_samples, double tol) {
    if (std::abs(fit.delta) <= tol)
        return true;
    double m1 = 0.0, m2 = 0.0, a1 = 0.0, a2 = 0.0;
    for (const auto& k : k12_samples) {
        m1 += k[0];
        m2 += k[1];
        a1 = std::max(a1, std::abs(k[0]));
        a2 = std::max(a2, std::abs(k[1]));
    }
    const double n = static_cast<double>(k12_samples.size());
    m1 /= n;
    m2 /= n;
    double s1 = 0.0, s2 = 0.0;
    for (const auto& k : k12_samples) {
        s1 += (k[0] - m1) * (k[0] - m1);
        s2 += (k[1] - m2) * (k[1] - m2);
    }
    const double scale = a1 + a2 + 1e-12;
    return std::sqrt(s1 / n) <= tol * scale || std::sqrt(s2 / n) <= tol * scale;
}

ImmersionPatch parallel_surface(const ImmersionPatch& p, double t, const Grid& focal_check) {
    if (p.sf.kappa != 0)
        throw DomainError("parallel_surface: restricted to kappa = 0");
    for (double u : grid_axis(p.domain.u0, p.domain.u1, focal_check.nx))
        for (double v : grid_axis(p.domain.v0, p.domain.v1, focal_check.ny)) {
            const CurvatureData c = curvature_data_general(p, u, v);
            if (std::abs(1.0 - t * c.k1) <= 1e-6 || std::abs(1.0 - t * c.k2) <= 1e-6)
                throw FocalError("parallel_surface: focal point at distance t = " +
                                 std::to_string(t));
        }

    ImmersionPatch q;
    q.sf = p.sf;
    q.domain = p.domain;
    q.label = p.label + "+offset(" + std::to_string(t) + ")";
    const auto base = p; // capture by value keeps the offset patch self-contained
    q.eval = [base, t](double u, double v) -> Vec4j {
        const FormJets f = forms_at(base, u, v);
        return f.X + t * f.n;
    };
    return q;
}

std::pair<double, double> parallel_curvatures(double k1, double k2, double t) {
    const double d1 = 1.0 - t * k1, d2 = 1.0 - t * k2;
    if (std::abs(d1) <= 1e-6 || std::abs(d2) <= 1e-6)
        throw FocalError("parallel_curvatures: focal degeneracy at t = " + std::to_string(t));
    return {k1 / d1, k2 / d2};
}

std::array<double, 3> bonnet_coeffs(double a, double b, double c, double t) {
    return {a + 2.0 * b * t + c * t * t, b + c * t, c};
}

} // namespace liemin
