#include "curvetk/bertrand.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvetk {

namespace {

std::string at_t(double t) { return " at t = " + std::to_string(t); }

double relative_gap(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

Vec3 partner_point(const CurveSpec& base, double lambda, double t, int jet_order, double eps_flat) {
    const VecJet position = eval_jet(base, t, jet_order);
    const FrenetFrame frame = frenet_apparatus(position, eps_flat);
    return position.value() + lambda * frame.N;
}

VecJet partner_position_jet(const VecJet& base_position, double lambda, double eps_flat) {
    return base_position + lambda * unit_normal_jet(base_position, eps_flat);
}

double derive_mu(const CurveSpec& base, double lambda, const Grid& grid, int jet_order,
                 const Tolerances& tol) {
    double sum = 0.0;
    std::vector<double> samples;
    samples.reserve(grid.samples);
    for (double t : grid.points()) {
        const FrenetFrame frame = frenet_apparatus(eval_jet(base, t, jet_order), tol.eps_flat);
        const double tau = frame.tau.value();
        if (std::abs(tau) <= eps_div)
            raise(errc::torsion_zero, "base torsion vanishes" + at_t(t));
        samples.push_back((1.0 - lambda * frame.kappa.value()) / tau);
        sum += samples.back();
    }
    const double mean = sum / static_cast<double>(samples.size());
    double spread = 0.0;
    for (double m : samples) spread = std::max(spread, std::abs(m - mean));
    if (spread > tol.tol_pair * std::max(1.0, std::abs(mean)))
        raise(errc::not_bertrand,
              "mu = (1 - lambda*kappa)/tau is not constant (spread " + format_value(spread) +
                  "), not a Bertrand mate for lambda = " + format_value(lambda));
    return mean;
}

PairAngles compute_theta(const FrenetFrame& base, const FrenetFrame& partner, const Tolerances& tol) {
    const double cos_theta = partner.T.dot(base.T);
    const double sin_theta = partner.T.dot(base.B);
    const double off_plane = partner.T.dot(base.N);
    if (std::abs(off_plane) > 1e-8)
        raise(errc::not_bertrand,
              "partner tangent leaves span{T, B} (<T_b, N> = " + format_value(off_plane) + ")");
    if (std::abs(cos_theta * cos_theta + sin_theta * sin_theta - 1.0) > 1e-10)
        raise(errc::not_bertrand, "tangent angle fails cos^2 + sin^2 = 1");
    if (std::abs(sin_theta) <= tol.eps_theta)
        raise(errc::theta_degenerate,
              "tangents nearly parallel (sin theta = " + format_value(sin_theta) + ")");
    return {cos_theta, sin_theta};
}

PairAngles pair_angles_from_invariants(double kappa, double tau, double lambda, const Tolerances& tol) {
    // beta' = speed * ((1 - lambda*kappa) T + lambda*tau B); speed cancels.
    const double ct = 1.0 - lambda * kappa;
    const double st = lambda * tau;
    const double d = std::hypot(ct, st);
    if (d <= eps_div)
        raise(errc::theta_degenerate, "partner tangent direction vanishes");
    PairAngles angles{ct / d, st / d};
    if (std::abs(angles.sin_theta) <= tol.eps_theta)
        raise(errc::theta_degenerate,
              "tangents nearly parallel (sin theta = " + format_value(angles.sin_theta) + ")");
    return angles;
}

PartnerFrame partner_frame_closed_form(const PairAngles& angles, const FrenetFrame& base) {
    PartnerFrame f;
    f.T = angles.cos_theta * base.T + angles.sin_theta * base.B;
    f.N = base.N;
    f.B = -angles.sin_theta * base.T + angles.cos_theta * base.B;
    return f;
}

PartnerCurvatures partner_curvatures_closed_form(double kappa, double tau, double lambda,
                                                 const PairAngles& angles) {
    const double sin_sq = angles.sin_theta * angles.sin_theta;
    const double kappa_den = lambda * (1.0 - lambda * kappa);
    const double tau_den = lambda * lambda * tau;
    if (std::abs(kappa_den) <= eps_div || std::abs(tau_den) <= eps_div)
        raise(errc::degenerate_denominator, "partner curvature formulas divide by zero");
    return {(lambda * kappa - sin_sq) / kappa_den, sin_sq / tau_den};
}

double partner_speed(double tau, const BertrandPair& pair) {
    return std::abs(tau) * std::hypot(pair.lambda, pair.mu);
}

BertrandPair validate_pair(const CurveSpec& base, double lambda, const Grid& grid, int jet_order,
                           const Tolerances& tol) {
    BertrandPair pair;
    pair.base = base;
    pair.grid = grid;
    pair.jet_order = jet_order;
    pair.lambda = lambda;

    const std::vector<double> ts = grid.points();
    pair.mu = derive_mu(base, lambda, grid, jet_order, tol);

    struct Sample {
        double t;
        FrenetFrame alpha;
        FrenetFrame beta;
        PairAngles angles;
        int sign;
    };
    std::vector<Sample> samples;
    samples.reserve(ts.size());

    for (double t : ts) {
        const FrenetFrame fa = frenet_apparatus(eval_jet(base, t, jet_order), tol.eps_flat);
        // The partner jets cost two orders, so the base is evaluated two
        // orders higher to hand the partner a full order-K frame.
        const VecJet beta_jet =
            partner_position_jet(eval_jet(base, t, jet_order + 2), lambda, tol.eps_flat);
        FrenetFrame fb;
        try {
            fb = frenet_apparatus(beta_jet, tol.eps_flat);
        } catch (const Error& e) {
            if (e.code() == errc::frame_undefined || e.code() == errc::singular_speed)
                throw Error(errc::not_bertrand,
                            std::string("partner frame undefined") + at_t(t) + ": " + e.what(), e.code());
            throw;
        }

        const PairAngles angles = compute_theta(fa, fb, tol);

        const double n_dot = fb.N.dot(fa.N);
        if (std::abs(std::abs(n_dot) - 1.0) > 1e-8)
            raise(errc::not_bertrand,
                  "partner normal is not collinear with the base normal" + at_t(t) +
                      " (<N_b, N> = " + format_value(n_dot) + ")");
        const int sign = n_dot > 0.0 ? 1 : -1;

        // Pair identity with the aggregated mu.
        const double identity =
            std::abs(lambda * fa.kappa.value() + pair.mu * fa.tau.value() - 1.0);
        pair.max_pair_identity_error = std::max(pair.max_pair_identity_error, identity);
        if (identity > tol.tol_pair)
            raise(errc::not_bertrand,
                  "pair identity lambda*kappa + mu*tau = 1 fails" + at_t(t) +
                      " (error " + format_value(identity) + ")");

        // Closed-form frame against the direct one; N and B flip together
        // with the recorded sign (T_b is fixed, the frame stays right-handed).
        const PartnerFrame closed = partner_frame_closed_form(angles, fa);
        const double frame_err =
            std::max({(fb.T - closed.T).cwiseAbs().maxCoeff(),
                      (fb.N - sign * closed.N).cwiseAbs().maxCoeff(),
                      (fb.B - sign * closed.B).cwiseAbs().maxCoeff()});
        pair.max_frame_error = std::max(pair.max_frame_error, frame_err);
        if (frame_err > 1e-8)
            raise(errc::not_bertrand,
                  "closed-form partner frame deviates from the computed one" + at_t(t) +
                      " (error " + format_value(frame_err) + ")");

        // Closed-form curvatures; the signed kappa must agree with the
        // normal orientation. At lambda*kappa = 1 the formula is 0/0
        // while the partner frame itself is fine, so a degenerate
        // denominator skips this comparison instead of failing the pair.
        try {
            const PartnerCurvatures pc =
                partner_curvatures_closed_form(fa.kappa.value(), fa.tau.value(), lambda, angles);
            const double kappa_err = relative_gap(std::abs(pc.kappa), fb.kappa.value());
            const double tau_err = relative_gap(pc.tau, fb.tau.value());
            pair.max_curvature_error = std::max({pair.max_curvature_error, kappa_err, tau_err});
            if (kappa_err > 1e-8 || tau_err > 1e-8)
                raise(errc::not_bertrand,
                      "closed-form partner curvatures deviate from the computed ones" + at_t(t));
            const int kappa_sign = pc.kappa >= 0.0 ? 1 : -1;
            if (kappa_sign != sign)
                raise(errc::not_bertrand,
                      "closed-form curvature sign disagrees with the normal orientation" + at_t(t));
        } catch (const Error& e) {
            if (e.code() != errc::degenerate_denominator) throw;
        }

        // Speed identity |beta'| = speed_alpha * tau * sqrt(lambda^2 + mu^2).
        const double predicted =
            fa.speed.value() * std::abs(fa.tau.value()) * std::hypot(lambda, pair.mu);
        const double speed_err = relative_gap(predicted, fb.speed.value());
        pair.max_speed_error = std::max(pair.max_speed_error, speed_err);
        if (speed_err > 1e-10)
            raise(errc::not_bertrand, "partner speed identity fails" + at_t(t));

        samples.push_back({t, fa, fb, angles, sign});
    }

    // Constant theta and a consistent normal orientation across the grid.
    double cos_sum = 0.0, sin_sum = 0.0;
    for (const Sample& s : samples) {
        cos_sum += s.angles.cos_theta;
        sin_sum += s.angles.sin_theta;
        if (s.sign != samples.front().sign)
            raise(errc::not_bertrand, "normal orientation flips across the grid" + at_t(s.t));
    }
    pair.cos_theta = cos_sum / static_cast<double>(samples.size());
    pair.sin_theta = sin_sum / static_cast<double>(samples.size());
    pair.normal_sign = samples.front().sign;
    for (const Sample& s : samples) {
        pair.theta_spread = std::max({pair.theta_spread,
                                      std::abs(s.angles.cos_theta - pair.cos_theta),
                                      std::abs(s.angles.sin_theta - pair.sin_theta)});
        pair.theta_samples.push_back({s.t, s.angles.cos_theta, s.angles.sin_theta});
    }
    if (pair.theta_spread > tol.tol_pair)
        raise(errc::not_bertrand,
              "tangent angle is not constant (spread " + format_value(pair.theta_spread) + ")");

    // Recompute the mu spread for the record (derive_mu already gated it).
    double mu_spread = 0.0;
    for (const Sample& s : samples) {
        const double m = (1.0 - lambda * s.alpha.kappa.value()) / s.alpha.tau.value();
        mu_spread = std::max(mu_spread, std::abs(m - pair.mu));
    }
    pair.mu_spread = mu_spread;
    return pair;
}

} // namespace curvetk
