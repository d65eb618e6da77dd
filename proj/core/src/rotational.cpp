#include "liemin/rotational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "liemin/errors.hpp"
#include "liemin/numerics.hpp"

namespace liemin {

namespace {

// Jet of a function around the evaluation point from its local Taylor
// coefficients [f, f', f''/2, f'''/6, ...], Horner in the v increment.
Jet2 jet_from_v_taylor(const std::array<double, 5>& c) {
    const Jet2 p = Jet2::var_v(0.0);
    Jet2 r = Jet2::constant(c[4]);
    for (int k = 3; k >= 0; --k)
        r = r * p + c[static_cast<std::size_t>(k)];
    return r;
}

double profile_speed_defect(const ProfileCurve::Jets& j, int kappa) {
    const double r = j.r.value();
    const double rp = j.r.partial(0, 1), hp = j.h.partial(0, 1), kp = j.k.partial(0, 1);
    const double sgn = (kappa == -1) ? -1.0 : 1.0;
    const double speed2 = rp * rp + hp * hp + (kappa == 0 ? 0.0 : sgn * kp * kp);
    return std::abs(speed2 - r * r) / std::max(1e-12, r * r);
}

} // namespace

ImmersionPatch make_rotational(const ProfileCurve& profile, const SpaceForm& sf, double u0,
                               double u1, std::string label) {
    if (sf.kappa != profile.kappa)
        throw DomainError("make_rotational: profile built for kappa = " +
                          std::to_string(profile.kappa));
    // Reject nonpositive radius early.
    for (double v : grid_axis(profile.domain.a, profile.domain.b, 64))
        if (profile.eval(v).r.value() <= 0.0)
            throw DomainError(label + ": profile radius r <= 0 at v = " + std::to_string(v));

    ImmersionPatch p;
    p.sf = sf;
    p.domain = {u0, u1, profile.domain.a, profile.domain.b};
    p.label = std::move(label);
    const auto prof = profile.eval;
    const int kappa = sf.kappa;
    p.eval = [prof, kappa](double u, double v) -> Vec4j {
        const ProfileCurve::Jets g = prof(v);
        const Jet2 U = Jet2::var_u(u);
        const Jet2 cu = cos(U), su = sin(U);
        // Clockwise orbit keeps the positively oriented frame's normal on the
        // side the closed curvature formulas assume.
        Vec4j X{{g.r * cu, -(g.r * su), g.h, g.k}};
        if (kappa == 0)
            X[3] = Jet2::constant(1.0);
        return X;
    };
    return p;
}

std::pair<double, double> rotational_curvatures(const ProfileCurve& profile, double v,
                                                const SpaceForm& sf) {
    if (!profile.isothermic)
        throw DomainError("rotational_curvatures: profile lacks the isothermic normalization");
    const ProfileCurve::Jets g = profile.eval(v);
    if (profile_speed_defect(g, sf.kappa) > 1e-8)
        throw DomainError("rotational_curvatures: normalization violated at v = " +
                          std::to_string(v));
    const double r = g.r.value(), h = g.h.value(), k = g.k.value();
    const double rp = g.r.partial(0, 1), hp = g.h.partial(0, 1), kp = g.k.partial(0, 1);
    const double rpp = g.r.partial(0, 2), hpp = g.h.partial(0, 2), kpp = g.k.partial(0, 2);

    const double k1 = (k * hp - h * kp) / (r * r);
    // <gamma'', n> reduces to the plain determinant for every signature: the
    // ambient metric cancels against the index raising of the cofactor normal,
    // and |gamma x gamma'| = r by the (Minkowski) Lagrange identity.
    const double det = r * (hp * kpp - hpp * kp) - rp * (h * kpp - hpp * k) +
                       rpp * (h * kp - hp * k);
    const double k2 = det / (r * r * r);
    return {k1, k2};
}

namespace {

struct OdeCache {
    std::mutex lock;
    std::map<double, std::vector<double>> states;
};

// Memoized RK45 state lookup along the profile parameter, anchored at v0.
// Grid sweeps revisit the same v for every u; the lock keeps patch evaluation
// safe under parallel sweeps.
std::vector<double> cached_state(const std::shared_ptr<OdeCache>& cache, const Rk45& ode,
                                 double v0, const std::vector<double>& y0, double v) {
    {
        std::lock_guard<std::mutex> guard(cache->lock);
        auto it = cache->states.find(v);
        if (it != cache->states.end())
            return it->second;
    }
    std::vector<double> y = (v == v0) ? y0 : ode.solve(v0, y0, v);
    std::lock_guard<std::mutex> guard(cache->lock);
    cache->states.emplace(v, y);
    return y;
}

} // namespace

ProfileCurve delaunay_profile(double H, double r0, Interval span) {
    if (r0 <= 0.0)
        throw DomainError("delaunay_profile: r0 must be positive");

    // Isothermic-parameter system (ds = r dv applied to the arclength system).
    auto field = [H](double, const std::vector<double>& y) {
        const double r = y[0], psi = y[2];
        if (r < 1e-3)
            throw DomainError("delaunay_profile: neck collapse, r -> 0");
        return std::vector<double>{r * std::cos(psi), r * std::sin(psi),
                                   2.0 * H * r - std::sin(psi)};
    };
    auto ode = std::make_shared<Rk45>(field, 1e-13, 1e-11);
    auto cache = std::make_shared<OdeCache>();
    const double v0 = span.a;
    const std::vector<double> y0{r0, 0.0, M_PI / 2.0};

    ProfileCurve prof;
    prof.domain = span;
    prof.kappa = 0;
    prof.isothermic = true;
    prof.eval = [ode, cache, v0, y0, H](double v) -> ProfileCurve::Jets {
        const std::vector<double> y = cached_state(cache, *ode, v0, y0, v);
        // Picard iteration lifts the state to order-4 jets in v.
        Jet2 R = Jet2::constant(y[0]);
        Jet2 Hh = Jet2::constant(y[1]);
        Jet2 Psi = Jet2::constant(y[2]);
        for (int it = 0; it < 5; ++it) {
            const Jet2 Rn = (R * cos(Psi)).antiderivative_v(y[0]);
            const Jet2 Hn = (R * sin(Psi)).antiderivative_v(y[1]);
            const Jet2 Pn = (2.0 * H * R - sin(Psi)).antiderivative_v(y[2]);
            R = Rn;
            Hh = Hn;
            Psi = Pn;
        }
        return {R, Hh, Jet2::constant(1.0)};
    };

    // Surface the collapse error at construction, not first evaluation.
    for (double v : grid_axis(span.a, span.b, 128))
        (void)cached_state(cache, *ode, v0, y0, v);
    return prof;
}

ProfileCurve profile_from_radius_spline(std::vector<double> knots, std::vector<double> values) {
    const Interval span{knots.front(), knots.back()};
    auto spline = std::make_shared<CubicSpline>(std::move(knots), std::move(values));

    // The slope bound keeps h' = sqrt(r^2 - r'^2) real with margin.
    for (double v : grid_axis(span.a, span.b, 256)) {
        const auto t = spline->taylor(v);
        if (t[0] * t[0] - t[1] * t[1] < 0.05)
            throw DomainError("radius spline too steep for the isothermic normalization near v = " +
                              std::to_string(v));
    }

    auto h_field = [spline](double v, const std::vector<double>&) {
        const auto t = spline->taylor(v);
        return std::vector<double>{std::sqrt(t[0] * t[0] - t[1] * t[1])};
    };
    auto ode = std::make_shared<Rk45>(h_field, 1e-13, 1e-11);
    auto cache = std::make_shared<OdeCache>();
    const double v0 = span.a;
    const std::vector<double> y0{0.0};

    ProfileCurve prof;
    prof.domain = span;
    prof.kappa = 0;
    prof.isothermic = true;
    prof.eval = [spline, ode, cache, v0, y0](double v) -> ProfileCurve::Jets {
        const Jet2 r = jet_from_v_taylor(spline->taylor(v));
        const Jet2 rp = r.dv();
        const double h0 = cached_state(cache, *ode, v0, y0, v)[0];
        const Jet2 h = sqrt(r * r - rp * rp).antiderivative_v(h0);
        return {r, h, Jet2::constant(1.0)};
    };
    return prof;
}

ProfileCurve spline_profile(std::uint64_t seed, Interval span) {
    Rng rng(seed);
    const int n_ctrl = 6;
    const std::vector<double> knots = grid_axis(span.a, span.b, n_ctrl);
    // Redraw until the profile keeps a healthy principal curvature gap:
    // near-umbilic fixtures would amplify roundoff in every gap-normalized
    // quantity. Deterministic for a fixed seed.
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> values(static_cast<std::size_t>(n_ctrl));
        for (double& y : values)
            y = 0.8 + rng.uniform(-0.01, 0.01);
        const CubicSpline s(knots, values);
        bool ok = true;
        for (double v : grid_axis(span.a, span.b, 256)) {
            const auto t = s.taylor(v);
            const double r = t[0], rp = t[1], rpp = 2.0 * t[2];
            const double disc = r * r - rp * rp;
            if (disc < 0.05) {
                ok = false;
                break;
            }
            const double hp = std::sqrt(disc);
            const double hpp = (r * rp - rp * rpp) / hp;
            const double k1 = hp / (r * r);
            const double k2 = (rp * hpp - hp * rpp) / (r * r * r);
            if (std::abs(k1 - k2) < 0.2) {
                ok = false;
                break;
            }
        }
        if (ok)
            return profile_from_radius_spline(knots, std::move(values));
    }
    throw DomainError("spline_profile: no umbilic-free profile found for seed " +
                      std::to_string(seed));
}

ProfileCurve band_profile(int kappa, Interval span) {
    if (kappa != 1 && kappa != -1)
        throw DomainError("band_profile: kappa must be +1 or -1");

    // Analytic radius; phi solved so the parametrization is isothermic.
    auto radius = [kappa](double v) {
        return kappa == 1 ? Jet2{0.55 + 0.06 * sin(1.3 * Jet2::var_v(v))}
                          : Jet2{0.80 + 0.10 * sin(1.1 * Jet2::var_v(v))};
    };
    auto phi_rate = [kappa, radius](double v) -> Jet2 {
        const Jet2 r = radius(v);
        const Jet2 rp = r.dv();
        if (kappa == 1) {
            const Jet2 q = sqrt(1.0 - r * r);
            const Jet2 qp = q.dv();
            return sqrt(r * r - rp * rp - qp * qp) / q;
        }
        const Jet2 s = sqrt(1.0 + r * r);
        const Jet2 sp = s.dv();
        return sqrt(r * r - rp * rp + sp * sp) / s;
    };

    auto field = [phi_rate](double v, const std::vector<double>&) {
        return std::vector<double>{phi_rate(v).value()};
    };
    auto ode = std::make_shared<Rk45>(field, 1e-13, 1e-11);
    auto cache = std::make_shared<OdeCache>();
    const double v0 = span.a;
    const std::vector<double> y0{0.0};

    ProfileCurve prof;
    prof.domain = span;
    prof.kappa = kappa;
    prof.isothermic = true;
    prof.eval = [kappa, radius, phi_rate, ode, cache, v0, y0](double v) -> ProfileCurve::Jets {
        const Jet2 r = radius(v);
        const double phi0 = cached_state(cache, *ode, v0, y0, v)[0];
        const Jet2 phi = phi_rate(v).antiderivative_v(phi0);
        if (kappa == 1) {
            const Jet2 q = sqrt(1.0 - r * r);
            return {r, q * cos(phi), q * sin(phi)};
        }
        const Jet2 s = sqrt(1.0 + r * r);
        return {r, s * sinh(phi), s * cosh(phi)};
    };
    return prof;
}

ProfileCurve channel_to_rotational(const std::function<Jet2(double)>& E,
                                   const std::function<Jet2(double)>& k_profile,
                                   const std::function<Jet2(double)>& k_orbit, Interval domain,
                                   double tol) {
    // Validate the Codazzi constraint and the implied isothermic normalization.
    for (double v : grid_axis(domain.a, domain.b, 64)) {
        const Jet2 Ej = E(v);
        if (Ej.value() <= 0.0)
            throw DomainError("channel_to_rotational: E <= 0 at v = " + std::to_string(v));
        const Jet2 kp = k_profile(v);
        const Jet2 ko = k_orbit(v);
        const double gap = kp.value() - ko.value();
        if (std::abs(gap) <= 1e-12 * (std::abs(kp.value()) + std::abs(ko.value()) + 1.0))
            throw UmbilicError("channel_to_rotational: k_profile = k_orbit at v = " +
                               std::to_string(v));
        const double codazzi = ko.partial(0, 1) / gap - (0.5 * log(Ej)).partial(0, 1);
        if (std::abs(codazzi) > tol)
            throw DomainError("channel_to_rotational: Codazzi violation " +
                              std::to_string(codazzi) + " at v = " + std::to_string(v));
        const Jet2 r = sqrt(Ej);
        const double rp = r.partial(0, 1);
        const double hp = Ej.value() * ko.value();
        const double norm_defect =
            std::abs(rp * rp + hp * hp - Ej.value()) / Ej.value();
        if (norm_defect > tol)
            throw DomainError("channel_to_rotational: normalization defect " +
                              std::to_string(norm_defect) + " at v = " + std::to_string(v));
    }

    auto h_field = [E, k_orbit](double v, const std::vector<double>&) {
        return std::vector<double>{E(v).value() * k_orbit(v).value()};
    };
    auto ode = std::make_shared<Rk45>(h_field, 1e-13, 1e-11);
    auto cache = std::make_shared<OdeCache>();
    const double v0 = domain.a;
    const std::vector<double> y0{0.0};

    ProfileCurve prof;
    prof.domain = domain;
    prof.kappa = 0;
    prof.isothermic = true;
    prof.eval = [E, k_orbit, ode, cache, v0, y0](double v) -> ProfileCurve::Jets {
        const Jet2 r = sqrt(E(v));
        const double h0 = cached_state(cache, *ode, v0, y0, v)[0];
        const Jet2 h = (E(v) * k_orbit(v)).antiderivative_v(h0);
        return {r, h, Jet2::constant(1.0)};
    };
    return prof;
}

namespace {

double param(const FixtureParams& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

ProfileCurve analytic_profile(std::function<ProfileCurve::Jets(double)> eval, Interval dom,
                              bool isothermic, int kappa = 0) {
    ProfileCurve prof;
    prof.eval = std::move(eval);
    prof.domain = dom;
    prof.isothermic = isothermic;
    prof.kappa = kappa;
    return prof;
}

} // namespace

std::optional<ProfileCurve> builtin_profile(const std::string& name,
                                            const FixtureParams& params) {
    if (name == "cylinder") {
        const double a = param(params, "radius", 1.0);
        return analytic_profile(
            [a](double v) -> ProfileCurve::Jets {
                return {Jet2::constant(a), a * Jet2::var_v(v), Jet2::constant(1.0)};
            },
            {-1.0, 1.0}, true);
    }
    if (name == "cone") {
        // Log-spiral isothermic parametrization of a 45-degree half-angle cone.
        const double alpha = 1.0 / std::sqrt(2.0);
        const double s0 = param(params, "scale", 1.2);
        return analytic_profile(
            [alpha, s0](double v) -> ProfileCurve::Jets {
                const Jet2 s = s0 * exp(alpha * Jet2::var_v(v));
                return {alpha * s, alpha * s, Jet2::constant(1.0)};
            },
            {0.0, 1.0}, true);
    }
    if (name == "sphere") {
        // Rising profile (h' > 0) keeps the inward normal of the rotational
        // convention, so L/E = N/G = 1/R. Umbilic; for error-path tests only.
        const double R = param(params, "radius", 1.0);
        return analytic_profile(
            [R](double v) -> ProfileCurve::Jets {
                const Jet2 V = Jet2::var_v(v);
                return {R * sin(V), -(R * cos(V)), Jet2::constant(1.0)};
            },
            {0.4, 1.2}, false);
    }
    if (name == "catenoid") {
        return analytic_profile(
            [](double v) -> ProfileCurve::Jets {
                const Jet2 V = Jet2::var_v(v);
                return {cosh(V), V, Jet2::constant(1.0)};
            },
            {-1.0, 1.0}, true);
    }
    if (name == "torus") {
        const double R = param(params, "R", 2.0);
        const double rr = param(params, "r", 0.5);
        if (rr <= 0.0 || R <= rr)
            throw FixtureError("torus: need R > r > 0");
        return analytic_profile(
            [R, rr](double v) -> ProfileCurve::Jets {
                const Jet2 V = Jet2::var_v(v);
                return {R + rr * cos(V), rr * sin(V), Jet2::constant(1.0)};
            },
            {0.0, 2.0 * M_PI}, false);
    }
    if (name == "unduloid" || name == "nodoid") {
        const double H = param(params, "H", 0.5);
        const double r0 = param(params, "r0", name == "unduloid" ? 0.6 : 2.2);
        const double span = param(params, "span", name == "unduloid" ? 2.5 : 0.8);
        return delaunay_profile(H, r0, {0.0, span});
    }
    if (name == "spline-profile")
        return spline_profile(static_cast<std::uint64_t>(param(params, "seed", 1.0)));
    if (name == "band-spherical")
        return band_profile(1);
    if (name == "band-hyperbolic")
        return band_profile(-1);
    if (name == "plane" || name == "enneper")
        return std::nullopt;
    throw FixtureError("unknown fixture: " + name);
}

ImmersionPatch builtin_fixture(const std::string& name, const FixtureParams& params) {
    const SpaceForm r3 = SpaceForm::euclidean();

    if (name == "plane") {
        ImmersionPatch p;
        p.sf = r3;
        p.domain = {0.0, 1.0, 0.0, 1.0};
        p.label = "plane";
        p.umbilic_only = true;
        p.eval = [](double u, double v) -> Vec4j {
            return {{Jet2::var_u(u), Jet2::var_v(v), Jet2::constant(0.0), Jet2::constant(1.0)}};
        };
        return p;
    }
    if (name == "enneper") {
        ImmersionPatch p;
        p.sf = r3;
        p.domain = {-1.0, 1.0, -1.0, 1.0};
        p.label = "enneper";
        p.eval = [](double u, double v) -> Vec4j {
            const Jet2 U = Jet2::var_u(u), V = Jet2::var_v(v);
            const Jet2 x = U - U * U * U / 3.0 + U * V * V;
            const Jet2 y = V - V * V * V / 3.0 + V * U * U;
            return {{x, -y, U * U - V * V, Jet2::constant(1.0)}};
        };
        return p;
    }

    const std::optional<ProfileCurve> prof = builtin_profile(name, params);
    if (!prof)
        throw FixtureError("unknown fixture: " + name);
    const SpaceForm sf{prof->kappa};
    ImmersionPatch p = make_rotational(*prof, sf, 0.0, 2.0 * M_PI, name);
    p.umbilic_only = (name == "sphere");
    return p;
}

std::vector<std::string> builtin_fixture_names() {
    return {"plane",   "cylinder", "cone",           "sphere",         "catenoid",
            "torus",   "unduloid", "nodoid",         "enneper",        "spline-profile",
            "band-spherical", "band-hyperbolic"};
}

} // namespace liemin
