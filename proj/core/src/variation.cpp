#include "liemin/variation.hpp"

#include <cmath>

#include "liemin/errors.hpp"

namespace liemin {

BumpFunction::BumpFunction(std::array<double, 2> center, std::array<double, 2> radii,
                           double amplitude, const Domain& domain)
    : center_(center), radii_(radii), amplitude_(amplitude) {
    if (radii[0] <= 0.0 || radii[1] <= 0.0)
        throw DomainError("bump: radii must be positive");
    const Domain box = support_box();
    if (box.u0 <= domain.u0 || box.u1 >= domain.u1 || box.v0 <= domain.v0 ||
        box.v1 >= domain.v1)
        throw DomainError("bump: support touches the patch boundary");
}

Jet2 BumpFunction::eval(double u, double v) const {
    const Jet2 su = (Jet2::var_u(u) - center_[0]) / radii_[0];
    const Jet2 sv = (Jet2::var_v(v) - center_[1]) / radii_[1];
    const Jet2 s2 = su * su + sv * sv;
    // Outside (or hugging) the support ellipse every derivative vanishes; the
    // cutoff also keeps 1/(1-s^2) away from the division guard.
    if (s2.value() >= 1.0 - 1e-9)
        return Jet2::constant(0.0);
    return amplitude_ * exp(1.0 - 1.0 / (1.0 - s2));
}

ImmersionPatch perturb_normal(const ImmersionPatch& p, const BumpFunction& phi, double eps,
                              const Grid& focal_check) {
    // Focal bound: the offset distance must stay below min 1/|k_i| with margin.
    double k_max = 0.0;
    for (double u : grid_axis(p.domain.u0, p.domain.u1, focal_check.nx))
        for (double v : grid_axis(p.domain.v0, p.domain.v1, focal_check.ny)) {
            const CurvatureData c = curvature_data_general(p, u, v);
            k_max = std::max({k_max, std::abs(c.k1), std::abs(c.k2)});
        }
    if (std::abs(eps) * phi.amplitude() * k_max >= 0.5)
        throw FocalError("perturb_normal: |eps|*amplitude beyond the focal bound");

    ImmersionPatch q;
    q.sf = p.sf;
    q.domain = p.domain;
    q.label = p.label + "+bump";
    const auto base = p;
    q.eval = [base, phi, eps](double u, double v) -> Vec4j {
        const FormJets f = forms_at(base, u, v);
        return exp_normal(f.X, f.n, eps * phi.eval(u, v), base.sf);
    };
    return q;
}

double first_variation(const ImmersionPatch& p, const BumpFunction& phi, const Grid& quad,
                       double eps) {
    if (eps == 0.0)
        throw DomainError("first_variation: eps must be nonzero");
    const Domain box = phi.support_box();
    const ImmersionPatch plus = perturb_normal(p, phi, eps);
    const ImmersionPatch minus = perturb_normal(p, phi, -eps);
    const double lp = invariant_energy(plus, box, quad.nx, quad.ny);
    const double lm = invariant_energy(minus, box, quad.nx, quad.ny);
    return (lp - lm) / (2.0 * eps);
}

} // namespace liemin
