#include "curvetk/classify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvetk {

namespace {

// Gate for the two analytically identical routes; they differ only by
// rounding, so a breach means a formula regression, not noise.
void check_routes_agree(const Vec3& calculus, const Vec3& closed, double t, const char* which) {
    for (int i = 0; i < 3; ++i) {
        const double scale = std::max({1.0, std::abs(calculus[i]), std::abs(closed[i])});
        if (std::abs(calculus[i] - closed[i]) > 1e-9 * scale)
            raise(errc::guard_violation,
                  std::string(which) + " Laplacian routes disagree at t = " + std::to_string(t) +
                      " component " + std::to_string(i) + ": " + format_value(calculus[i]) +
                      " vs " + format_value(closed[i]));
    }
}

RouteResult classify_route(const std::vector<Vec3>& h, const std::vector<Vec3>& lap, double scale,
                           const Tolerances& tol) {
    RouteResult r;
    for (const Vec3& v : lap) r.max_laplacian_norm = std::max(r.max_laplacian_norm, v.norm());

    if (r.max_laplacian_norm <= tol.eps_class * scale) {
        r.verdict = Verdict::Biharmonic;
        return r;
    }

    // Delta H = c H fit: least squares for c, then per-sample ratios for
    // the constancy check.
    double num = 0.0, den = 0.0;
    std::vector<double> ratios;
    ratios.reserve(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        num += lap[i].dot(h[i]);
        den += h[i].squaredNorm();
        if (h[i].squaredNorm() > 0.0) ratios.push_back(lap[i].dot(h[i]) / h[i].squaredNorm());
    }
    if (den <= 0.0 || ratios.empty()) {
        r.verdict = Verdict::Neither;
        return r;
    }
    r.fit_constant = num / den;
    for (std::size_t i = 0; i < h.size(); ++i)
        r.fit_residual = std::max(r.fit_residual, (lap[i] - r.fit_constant * h[i]).norm());
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    r.ratio_spread = (*hi - *lo) / std::max(1e-300, std::abs(r.fit_constant));

    if (r.fit_residual <= tol.eps_class * scale && r.ratio_spread <= 1e-6) {
        r.verdict = Verdict::OneTypeHarmonic;
        r.harmonic_constant = r.fit_constant;
    } else {
        r.verdict = Verdict::Neither;
    }
    return r;
}

ClassificationReport degenerate_report(std::string reason, std::optional<BertrandPair> pair) {
    ClassificationReport report;
    report.full.verdict = Verdict::Degenerate;
    report.normal.verdict = Verdict::Degenerate;
    report.degenerate_reason = std::move(reason);
    report.pair = std::move(pair);
    return report;
}

} // namespace

const char* verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::Biharmonic: return "Biharmonic";
        case Verdict::OneTypeHarmonic: return "OneTypeHarmonic";
        case Verdict::Neither: return "Neither";
        case Verdict::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

FrameField mean_curvature(const FrenetFrame& frame) {
    const Jet vk = frame.speed * frame.kappa;
    const int order = vk.order();
    return {Jet::constant(0.0, order), vk, Jet::constant(0.0, order)};
}

FrameField partner_mean_curvature(const BertrandPair& pair, const FrenetFrame& base,
                                  const Tolerances& tol) {
    const DerivationCoefficients co =
        derivation_coefficients(base, pair.lambda, pair.mu, pair.angles(), tol);
    if (!co.a1)
        raise(errc::degenerate_denominator,
              "partner mean curvature undefined: mu*sin(theta) = " +
                  format_value(pair.mu * pair.sin_theta));

    // Independent route: speed per unit base arclength times the signed
    // closed-form curvature. Equal to a1 as an identity; verified here.
    const Jet kappa_b = (pair.lambda * base.kappa - pair.sin_theta * pair.sin_theta) /
                        (pair.lambda * (1.0 - pair.lambda * base.kappa));
    const Jet dt = 1.0 - pair.lambda * base.kappa;
    const Jet db = pair.lambda * base.tau;
    const Jet speed_b = sqrt(dt * dt + db * db);
    const Jet route2 = speed_b * kappa_b;
    const int order = std::min(co.a1->order(), route2.order());
    for (int k = 0; k <= order; ++k) {
        const double a = co.a1->derivative(k), b = route2.derivative(k);
        if (std::abs(a - b) > 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}))
            raise(errc::guard_violation,
                  "mean-curvature routes disagree: a1 coefficient " + std::to_string(k) + " is " +
                      format_value(a) + " vs speed*kappa_b " + format_value(b));
    }

    const int out_order = co.a1->order();
    return {Jet::constant(0.0, out_order), *co.a1, Jet::constant(0.0, out_order)};
}

std::array<double, 3> harmonicity_conditions(double lambda, const PairAngles& angles,
                                             const FrenetFrame& base) {
    const double k = base.kappa.value(), kp = base.kappa_p(), kpp = base.kappa_pp();
    const double tau = base.tau.value(), tp = base.tau_p();
    const double s2 = angles.sin_theta * angles.sin_theta;
    const double omc = 1.0 - angles.cos_theta;
    return {(3.0 * lambda * k - s2) * kp,
            (lambda * k - s2) * omc * omc * (k * k + tau * tau) - lambda * kpp * s2,
            s2 * tp - lambda * k * tp - 2.0 * lambda * kp * tau};
}

std::array<double, 2> normal_harmonicity_conditions(double lambda, const PairAngles& angles,
                                                    const FrenetFrame& base) {
    const double k = base.kappa.value(), kp = base.kappa_p(), kpp = base.kappa_pp();
    const double s2 = angles.sin_theta * angles.sin_theta;
    const double omc = 1.0 - angles.cos_theta;
    return {3.0 * lambda * k * kp - s2 * kp,
            (lambda * k - s2) * omc * omc * k * k - lambda * kpp * s2};
}

std::pair<double, double> helix_harmonic_constants(const BertrandPair& pair) {
    if (!pair.base.is_helix())
        raise(errc::not_helix_base,
              std::string("closed-form harmonic constants need a helix base, got ") +
                  family_name(pair.base.family));
    // Constant curvature collapses the conditions to their (k^2 + t^2) and
    // k^2 terms, so the eigenvalues carry the invariants of the base helix.
    // On the canonical unit helix (k = t = 1/sqrt(2)) they reduce to c^2
    // and c^2 / 2.
    const auto oracle = catalog_oracle(pair.base, pair.grid.t_start);
    const double k = oracle->kappa.value();
    const double t = oracle->tau.value();
    const double c = (pair.cos_theta - 1.0) / pair.sin_theta;
    return {c * c * (k * k + t * t), c * c * k * k};
}

ClassificationReport classify_pair(const BertrandPair& pair, const Tolerances& tol) {
    ClassificationReport report;
    report.pair = pair;

    std::vector<Vec3> h_values, lap_full, lap_normal;
    const std::vector<double> ts = pair.grid.points();

    for (double t : ts) {
        const FrenetFrame base =
            frenet_apparatus(eval_jet(pair.base, t, pair.jet_order), tol.eps_flat);
        const DerivationCoefficients co =
            derivation_coefficients(base, pair.lambda, pair.mu, pair.angles(), tol);
        if (!co.a1)
            return degenerate_report("mu*sin(theta) vanishes at t = " + std::to_string(t),
                                     pair);

        const int order = co.a1->order();
        const FrameField h{Jet::constant(0.0, order), *co.a1, Jet::constant(0.0, order)};

        LaplacianSample sample;
        sample.t = t;
        sample.h = h.values();
        sample.lap_full = laplacian_B(h, co).values();
        sample.lap_normal = normal_laplacian_B(h, co).values();

        // Closed-form components from the raw conditions.
        ConditionSample cond;
        cond.t = t;
        cond.full = harmonicity_conditions(pair.lambda, pair.angles(), base);
        cond.normal = normal_harmonicity_conditions(pair.lambda, pair.angles(), base);
        const double den_tb = pair.mu * (1.0 + pair.cos_theta);
        const double den_n = pair.mu * pair.sin_theta * pair.sin_theta * pair.sin_theta;
        sample.lap_full_closed = Vec3(cond.full[0] / den_tb, cond.full[1] / den_n,
                                      cond.full[2] / den_tb);
        sample.lap_normal_closed = Vec3(cond.normal[0] / den_tb, cond.normal[1] / den_n, 0.0);

        check_routes_agree(sample.lap_full, sample.lap_full_closed, t, "full");
        check_routes_agree(sample.lap_normal, sample.lap_normal_closed, t, "normal");

        report.conditions.push_back(cond);
        report.laplacians.push_back(sample);
        h_values.push_back(sample.h);
        lap_full.push_back(sample.lap_full);
        lap_normal.push_back(sample.lap_normal);
        report.scale = std::max(report.scale, sample.h.norm());
    }

    report.full = classify_route(h_values, lap_full, report.scale, tol);
    report.normal = classify_route(h_values, lap_normal, report.scale, tol);
    if (pair.base.is_helix()) report.helix_constants = helix_harmonic_constants(pair);
    return report;
}

ClassificationReport classify(const CurveSpec& base, double lambda, const Grid& grid,
                              int jet_order, const Tolerances& tol) {
    BertrandPair pair;
    try {
        pair = validate_pair(base, lambda, grid, jet_order, tol);
    } catch (const Error& e) {
        switch (e.code()) {
            case errc::frame_undefined:
            case errc::singular_speed:
            case errc::torsion_zero:
            case errc::theta_degenerate:
            case errc::degenerate_denominator:
                return degenerate_report(e.what(), std::nullopt);
            case errc::not_bertrand:
                // A partner whose frame cannot even be built is a geometric
                // degeneracy; a failed constancy check is a genuine refusal.
                if (e.cause() == errc::frame_undefined || e.cause() == errc::singular_speed)
                    return degenerate_report(e.what(), std::nullopt);
                throw;
            default:
                throw;
        }
    }
    return classify_pair(pair, tol);
}

} // namespace curvetk
