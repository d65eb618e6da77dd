#include "liemin/lie_energy.hpp"

#include <cmath>

#include "liemin/errors.hpp"
#include "liemin/numerics.hpp"

namespace liemin {

ELResiduals el_residuals(const CurvatureData& c, double inv_length_scale) {
    if (!c.has_mixed_partials)
        throw DomainError("el_residuals: curvature jets carry no mixed partials "
                          "(wrapped patch evaluated through a derived normal)");
    const double gap = c.k2 - c.k1;
    const double r1 = gap * c.k1_uv + 2.0 * c.k1_u * c.k1_v;
    const double r2 = -gap * c.k2_uv + 2.0 * c.k2_u * c.k2_v;
    const double s = std::abs(c.k1) + std::abs(c.k2) + inv_length_scale;
    const double s3 = s * s * s;
    return {r1, r2, r1 / s3, r2 / s3};
}

double lie_energy(const ImmersionPatch& p, const Grid& grid) {
    const GaussLegendre gu = GaussLegendre(grid.nx).mapped(p.domain.u0, p.domain.u1);
    const GaussLegendre gv = GaussLegendre(grid.ny).mapped(p.domain.v0, p.domain.v1);
    double acc = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
        double row = 0.0;
        for (int j = 0; j < grid.ny; ++j) {
            const CurvatureData c = curvature_data(p, gu.nodes[i], gv.nodes[j]);
            const double gap = c.k1 - c.k2;
            row += gv.weights[j] * (c.k1_u * c.k2_v) / (gap * gap);
        }
        acc += gu.weights[i] * row;
    }
    return acc;
}

namespace {

double dot2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return a[0] * b[0] + a[1] * b[1];
}

// Density from already-computed curvature data, with labels and signs matched
// to `o`. Label matching compares parameter-space alignment of both pairings.
double density_from(const CurvatureData& c, const PrincipalDirections& o) {
    if (!c.has_first_partials)
        throw DomainError("invariant density: curvature jets carry no first partials");
    const double keep = std::abs(dot2(c.e1, o.e1)) + std::abs(dot2(c.e2, o.e2));
    const double swap = std::abs(dot2(c.e2, o.e1)) + std::abs(dot2(c.e1, o.e2));

    std::array<double, 2> e1 = c.e1, e2 = c.e2;
    double grad_k1[2] = {c.k1_u, c.k1_v};
    double grad_k2[2] = {c.k2_u, c.k2_v};
    if (swap > keep) {
        std::swap(e1, e2);
        std::swap(grad_k1[0], grad_k2[0]);
        std::swap(grad_k1[1], grad_k2[1]);
    }
    const double s1 = dot2(e1, o.e1) < 0.0 ? -1.0 : 1.0;
    const double s2 = dot2(e2, o.e2) < 0.0 ? -1.0 : 1.0;

    const double d1 = s1 * (e1[0] * grad_k1[0] + e1[1] * grad_k1[1]);
    const double d2 = s2 * (e2[0] * grad_k2[0] + e2[1] * grad_k2[1]);
    const double gap = c.k1 - c.k2;
    return d1 * d2 / (gap * gap);
}

} // namespace

double invariant_density(const ImmersionPatch& p, double u, double v,
                         const PrincipalDirections& orientation, double tol_umb) {
    const CurvatureData c = curvature_data_general(p, u, v, tol_umb);
    return density_from(c, orientation);
}

double invariant_energy(const ImmersionPatch& p, const Domain& rect, int nu, int nv,
                        double tol_umb) {
    const GaussLegendre gu = GaussLegendre(nu).mapped(rect.u0, rect.u1);
    const GaussLegendre gv = GaussLegendre(nv).mapped(rect.v0, rect.v1);

    // Direction field propagated from the base corner: each node is oriented
    // against its left neighbor, the first node of a row against the row below.
    std::vector<PrincipalDirections> prev_row(static_cast<std::size_t>(nu));
    double acc = 0.0;
    for (int j = 0; j < nv; ++j) {
        std::vector<PrincipalDirections> row(static_cast<std::size_t>(nu));
        double row_acc = 0.0;
        for (int i = 0; i < nu; ++i) {
            PrincipalDirections ref;
            if (i > 0)
                ref = row[static_cast<std::size_t>(i - 1)];
            else if (j > 0)
                ref = prev_row[0];
            // else: the base corner anchors e1 to du, e2 to dv (default ref).

            const FormJets f = forms_at(p, gu.nodes[i], gv.nodes[j]);
            const CurvatureData c = curvature_data_general(f, p.sf, tol_umb);
            const double density = density_from(c, ref);

            // Record the matched orientation for the next neighbor.
            PrincipalDirections here{c.e1, c.e2};
            if (std::abs(dot2(c.e2, ref.e1)) + std::abs(dot2(c.e1, ref.e2)) >
                std::abs(dot2(c.e1, ref.e1)) + std::abs(dot2(c.e2, ref.e2)))
                std::swap(here.e1, here.e2);
            if (dot2(here.e1, ref.e1) < 0.0) {
                here.e1[0] = -here.e1[0];
                here.e1[1] = -here.e1[1];
            }
            if (dot2(here.e2, ref.e2) < 0.0) {
                here.e2[0] = -here.e2[0];
                here.e2[1] = -here.e2[1];
            }
            row[static_cast<std::size_t>(i)] = here;

            const double E = f.E.value(), F = f.F.value(), G = f.G.value();
            const double area = std::sqrt(E * G - F * F);
            row_acc += gu.weights[i] * density * area;
        }
        acc += gv.weights[j] * row_acc;
        prev_row = std::move(row);
    }
    return acc;
}

ChannelCheck is_channel(const ImmersionPatch& p, const Grid& grid, double tol) {
    ChannelCheck r;
    const double inv_len = 1.0 / patch_length_scale(p, grid);
    double k_scale = 0.0;
    for (double u : grid_axis(p.domain.u0, p.domain.u1, grid.nx))
        for (double v : grid_axis(p.domain.v0, p.domain.v1, grid.ny)) {
            const CurvatureData c = curvature_data(p, u, v);
            r.max_k1_u = std::max(r.max_k1_u, std::abs(c.k1_u));
            r.max_k2_v = std::max(r.max_k2_v, std::abs(c.k2_v));
            k_scale = std::max(k_scale, std::abs(c.k1) + std::abs(c.k2));
        }
    r.scale = k_scale + inv_len;
    const bool along_u = r.max_k1_u <= tol * r.scale;
    const bool along_v = r.max_k2_v <= tol * r.scale;
    r.channel = along_u || along_v;
    r.which = along_u ? ChannelCheck::Which::K1AlongU
                      : (along_v ? ChannelCheck::Which::K2AlongV : ChannelCheck::Which::None);
    return r;
}

double log_gap_residual(const CurvatureData& c) {
    if (!c.has_mixed_partials)
        throw DomainError("log_gap_residual: curvature jets carry no mixed partials");
    Jet2 gap_jet = c.k1_jet - c.k2_jet;
    if (gap_jet.value() < 0.0)
        gap_jet = -gap_jet;
    const Jet2 lg = log(gap_jet);
    const double gap = c.k1 - c.k2;
    const double Hu = 0.5 * (c.k1_u + c.k2_u);
    const double Hv = 0.5 * (c.k1_v + c.k2_v);
    return lg.partial(1, 1) - 4.0 * Hu * Hv / (gap * gap);
}

} // namespace liemin
