#include "liemin/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "liemin/errors.hpp"

namespace liemin {

std::vector<double> grid_axis(double a, double b, int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    if (n == 1) {
        xs[0] = 0.5 * (a + b);
        return xs;
    }
    for (int i = 0; i < n; ++i) // i/(n-1) is exactly 1 at the end, keeping b in range
        xs[static_cast<std::size_t>(i)] = a + (b - a) * (static_cast<double>(i) / (n - 1));
    return xs;
}

namespace {

Vec4j derive_u(const Vec4j& x) { return {{x[0].du(), x[1].du(), x[2].du(), x[3].du()}}; }
Vec4j derive_v(const Vec4j& x) { return {{x[0].dv(), x[1].dv(), x[2].dv(), x[3].dv()}}; }

// Metric-raised cofactor covector of the rows (a, b, c): the unique direction
// orthogonal to all three, oriented so that det[a, b, n, c] > 0.
Vec4j cofactor_normal(const Vec4j& a, const Vec4j& b, const Vec4j& c, const SpaceForm& sf) {
    auto minor3 = [&](int skip) {
        // 3x3 determinant of rows (a,b,c) omitting column `skip`.
        std::array<int, 3> col{};
        int m = 0;
        for (int j = 0; j < 4; ++j)
            if (j != skip)
                col[static_cast<std::size_t>(m++)] = j;
        const Jet2& a0 = a[col[0]];
        const Jet2& a1 = a[col[1]];
        const Jet2& a2 = a[col[2]];
        const Jet2& b0 = b[col[0]];
        const Jet2& b1 = b[col[1]];
        const Jet2& b2 = b[col[2]];
        const Jet2& c0 = c[col[0]];
        const Jet2& c1 = c[col[1]];
        const Jet2& c2 = c[col[2]];
        return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
    };
    Vec4j n{{minor3(0), -minor3(1), minor3(2), -minor3(3)}};
    // The cofactor construction gives det[n,a,b,c] = <n,n> after raising the
    // index; two row swaps turn that into det[a,b,n,c] with the same sign.
    n[3] = n[3] * sf.metric_sign(3);
    // Row order here is (a, b, c) = (Xu, Xv, X): expansion of det[w, Xu, Xv, X]
    // along w needs signs (+,-,+,-) applied above.
    return n;
}

} // namespace

FormJets forms_at(const ImmersionPatch& p, double u, double v) {
    if (!p.domain.contains(u, v))
        throw DomainError("forms_at: (" + std::to_string(u) + "," + std::to_string(v) +
                          ") outside patch domain");
    FormJets f{.X = p.eval(u, v),
               .Xu = {},
               .Xv = {},
               .n = {},
               .E = {},
               .F = {},
               .G = {},
               .L = {},
               .M = {},
               .N = {}};
    f.Xu = derive_u(f.X);
    f.Xv = derive_v(f.X);

    f.E = inner(f.Xu, f.Xu, p.sf);
    f.F = inner(f.Xu, f.Xv, p.sf);
    f.G = inner(f.Xv, f.Xv, p.sf);
    const double E = f.E.value(), F = f.F.value(), G = f.G.value();
    if (E <= 0.0 || G <= 0.0 || E * G - F * F <= 0.0)
        throw CoordinateError(p.label + ": degenerate metric at (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");

    const Vec4j third = (p.sf.kappa != 0)
                            ? f.X
                            : Vec4j{{Jet2::constant(0.0), Jet2::constant(0.0), Jet2::constant(0.0),
                                     Jet2::constant(1.0)}};
    Vec4j raw = cofactor_normal(f.Xu, f.Xv, third, p.sf);
    Jet2 nn = inner(raw, raw, p.sf);
    if (nn.value() <= 0.0)
        throw CoordinateError(p.label + ": degenerate frame (normal has nonpositive norm)");
    Jet2 inv_len = 1.0 / sqrt(nn);
    f.n = {{raw[0] * inv_len, raw[1] * inv_len, raw[2] * inv_len, raw[3] * inv_len}};

    const Vec4j Xuu = derive_u(f.Xu);
    const Vec4j Xuv = derive_v(f.Xu);
    const Vec4j Xvv = derive_v(f.Xv);
    f.L = inner(Xuu, f.n, p.sf);
    f.M = inner(Xuv, f.n, p.sf);
    f.N = inner(Xvv, f.n, p.sf);
    return f;
}

FundamentalForms fundamental_forms(const ImmersionPatch& p, double u, double v) {
    const FormJets f = forms_at(p, u, v);
    return {f.E.value(), f.F.value(), f.G.value(), f.L.value(), f.M.value(), f.N.value()};
}

Vec4j unit_normal(const ImmersionPatch& p, double u, double v) { return forms_at(p, u, v).n; }

namespace {

double alignment_defect(const FormJets& f) {
    const double E = f.E.value(), F = f.F.value(), G = f.G.value();
    const double sEG = std::sqrt(E * G);
    const double k_ref = std::abs(f.L.value() / E) + std::abs(f.N.value() / G) + 1.0;
    const double m_def = (std::abs(f.M.value()) / sEG) / k_ref;
    return std::max(std::abs(F) / sEG, m_def);
}

void check_umbilic(double k1, double k2, double tol_umb, const std::string& where) {
    if (std::abs(k1 - k2) <= tol_umb * (std::abs(k1) + std::abs(k2) + 1.0))
        throw UmbilicError("UmbilicPoint at " + where + ": k1 = " + std::to_string(k1) +
                           ", k2 = " + std::to_string(k2));
}

CurvatureData from_aligned_jets(const Jet2& k1, const Jet2& k2, double E, double G) {
    const int vo = std::min(k1.valid_order(), k2.valid_order());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CurvatureData c{.k1 = k1.value(),
                    .k2 = k2.value(),
                    .H = 0.5 * (k1.value() + k2.value()),
                    .K = k1.value() * k2.value(),
                    .e1 = {1.0 / std::sqrt(E), 0.0},
                    .e2 = {0.0, 1.0 / std::sqrt(G)},
                    .k1_u = nan,
                    .k1_v = nan,
                    .k2_u = nan,
                    .k2_v = nan,
                    .k1_uv = nan,
                    .k2_uv = nan,
                    .has_first_partials = vo >= 1,
                    .has_mixed_partials = vo >= 2,
                    .k1_jet = k1,
                    .k2_jet = k2};
    if (c.has_first_partials) {
        c.k1_u = k1.partial(1, 0);
        c.k1_v = k1.partial(0, 1);
        c.k2_u = k2.partial(1, 0);
        c.k2_v = k2.partial(0, 1);
    }
    if (c.has_mixed_partials) {
        c.k1_uv = k1.partial(1, 1);
        c.k2_uv = k2.partial(1, 1);
    }
    return c;
}

std::string point_str(double u, double v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

CurvatureData curvature_data(const ImmersionPatch& p, double u, double v, double tol_umb,
                             double tol_align) {
    const FormJets f = forms_at(p, u, v);
    if (alignment_defect(f) > tol_align)
        throw CoordinateError("NotCurvatureLine: coordinates misaligned at " + point_str(u, v) +
                              " (defect " + std::to_string(alignment_defect(f)) + ")");
    const Jet2 k1 = f.L / f.E;
    const Jet2 k2 = f.N / f.G;
    check_umbilic(k1.value(), k2.value(), tol_umb, point_str(u, v));
    return from_aligned_jets(k1, k2, f.E.value(), f.G.value());
}

CurvatureData curvature_data_general(const FormJets& f, const SpaceForm& sf, double tol_umb,
                                     double tol_align) {
    (void)sf;
    if (alignment_defect(f) <= tol_align) {
        const Jet2 k1 = f.L / f.E;
        const Jet2 k2 = f.N / f.G;
        check_umbilic(k1.value(), k2.value(), tol_umb, "point");
        return from_aligned_jets(k1, k2, f.E.value(), f.G.value());
    }

    const Jet2 det_I = f.E * f.G - f.F * f.F;
    const Jet2 H = (f.E * f.N - 2.0 * f.F * f.M + f.G * f.L) / (2.0 * det_I);
    const Jet2 K = (f.L * f.N - f.M * f.M) / det_I;
    Jet2 disc = H * H - K;
    const double k_scale = std::abs(H.value()) + std::sqrt(std::max(0.0, std::abs(K.value()))) + 1.0;
    if (disc.value() <= (tol_umb * k_scale) * (tol_umb * k_scale))
        throw UmbilicError("UmbilicPoint: H^2 - K = " + std::to_string(disc.value()));
    const Jet2 root = sqrt(disc);
    const Jet2 k_plus = H + root;
    const Jet2 k_minus = H - root;

    const double E = f.E.value(), F = f.F.value(), G = f.G.value();
    const double L = f.L.value(), M = f.M.value(), N = f.N.value();
    auto direction = [&](double k) {
        // Null vector of (II - k I); pick the better-conditioned row.
        const double r1x = L - k * E, r1y = M - k * F;
        const double r2x = M - k * F, r2y = N - k * G;
        double xi, eta;
        if (std::abs(r1x) + std::abs(r1y) >= std::abs(r2x) + std::abs(r2y)) {
            xi = r1y;
            eta = -r1x;
        } else {
            xi = r2y;
            eta = -r2x;
        }
        const double q = E * xi * xi + 2.0 * F * xi * eta + G * eta * eta;
        const double inv = 1.0 / std::sqrt(q);
        return std::array<double, 2>{xi * inv, eta * inv};
    };
    auto d_plus = direction(k_plus.value());
    auto d_minus = direction(k_minus.value());

    // Attach label 1 to the root whose direction hugs du (I-metric cosine).
    auto cos_u = [&](const std::array<double, 2>& e) {
        return (E * e[0] + F * e[1]) / std::sqrt(E);
    };
    auto cos_v = [&](const std::array<double, 2>& e) {
        return (F * e[0] + G * e[1]) / std::sqrt(G);
    };
    const bool plus_is_k1 = std::abs(cos_u(d_plus)) >= std::abs(cos_u(d_minus));
    const Jet2& k1 = plus_is_k1 ? k_plus : k_minus;
    const Jet2& k2 = plus_is_k1 ? k_minus : k_plus;
    std::array<double, 2> e1 = plus_is_k1 ? d_plus : d_minus;
    std::array<double, 2> e2 = plus_is_k1 ? d_minus : d_plus;
    if (cos_u(e1) < 0.0) {
        e1[0] = -e1[0];
        e1[1] = -e1[1];
    }
    if (cos_v(e2) < 0.0) {
        e2[0] = -e2[0];
        e2[1] = -e2[1];
    }

    check_umbilic(k1.value(), k2.value(), tol_umb, "point");
    CurvatureData c = from_aligned_jets(k1, k2, E, G);
    c.e1 = e1;
    c.e2 = e2;
    return c;
}

CurvatureData curvature_data_general(const ImmersionPatch& p, double u, double v, double tol_umb,
                                     double tol_align) {
    return curvature_data_general(forms_at(p, u, v), p.sf, tol_umb, tol_align);
}

CoordinateRegime check_coordinates(const ImmersionPatch& p, const Grid& grid, double tol) {
    CoordinateRegime r;
    const double inv_len = 1.0 / patch_length_scale(p, grid);
    for (double u : grid_axis(p.domain.u0, p.domain.u1, grid.nx))
        for (double v : grid_axis(p.domain.v0, p.domain.v1, grid.ny)) {
            const FormJets f = forms_at(p, u, v);
            const double E = f.E.value(), F = f.F.value(), G = f.G.value();
            const double sEG = std::sqrt(E * G);
            const double k_ref =
                std::abs(f.L.value() / E) + std::abs(f.N.value() / G) + inv_len;
            r.max_F = std::max(r.max_F, std::abs(F) / sEG);
            r.max_M = std::max(r.max_M, (std::abs(f.M.value()) / sEG) / k_ref);
            r.max_conf_defect =
                std::max(r.max_conf_defect, std::abs(E - G) / std::max(E, G));
        }
    r.curvature_line = std::max(r.max_F, r.max_M) <= tol;
    r.isothermic = r.curvature_line && r.max_conf_defect <= tol;
    return r;
}

std::pair<double, double> codazzi_residual(const FormJets& f, double tol_umb) {
    const Jet2 k1 = f.L / f.E;
    const Jet2 k2 = f.N / f.G;
    check_umbilic(k1.value(), k2.value(), tol_umb, "point");
    const Jet2 logE = 0.5 * log(f.E);
    const Jet2 logG = 0.5 * log(f.G);
    const double r1 = k1.partial(0, 1) / (k2.value() - k1.value()) - logE.partial(0, 1);
    const double r2 = k2.partial(1, 0) / (k1.value() - k2.value()) - logG.partial(1, 0);
    return {r1, r2};
}

std::pair<double, double> codazzi_residual(const ImmersionPatch& p, double u, double v) {
    return codazzi_residual(forms_at(p, u, v));
}

double gauss_residual(const FormJets& f, const SpaceForm& sf, double tol_iso) {
    const double E = f.E.value(), G = f.G.value();
    if (std::abs(E - G) / std::max(E, G) > tol_iso ||
        std::abs(f.F.value()) / std::sqrt(E * G) > tol_iso)
        throw CoordinateError("NotIsothermic: E = " + std::to_string(E) +
                              ", G = " + std::to_string(G));
    const Jet2 sigma = 0.5 * log(f.E);
    const Jet2 det_I = f.E * f.G - f.F * f.F;
    const double K = ((f.L * f.N - f.M * f.M) / det_I).value();
    return sigma.partial(2, 0) + sigma.partial(0, 2) + (sf.kappa + K) * E;
}

double gauss_residual(const ImmersionPatch& p, double u, double v, double tol_iso) {
    return gauss_residual(forms_at(p, u, v), p.sf, tol_iso);
}

double patch_length_scale(const ImmersionPatch& p, const Grid& grid) {
    double max_metric = 0.0;
    const int nu = std::max(2, grid.nx / 4), nv = std::max(2, grid.ny / 4);
    for (double u : grid_axis(p.domain.u0, p.domain.u1, nu))
        for (double v : grid_axis(p.domain.v0, p.domain.v1, nv)) {
            const Vec4j X = p.eval(u, v);
            const Vec4j Xu = derive_u(X);
            const Vec4j Xv = derive_v(X);
            max_metric = std::max({max_metric, inner(Xu, Xu, p.sf).value(),
                                   inner(Xv, Xv, p.sf).value()});
        }
    const double extent = std::max(p.domain.u_extent(), p.domain.v_extent());
    return std::max(1e-12, std::sqrt(max_metric) * extent);
}

} // namespace liemin
