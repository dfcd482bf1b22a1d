#include "curvetk/frenet.hpp"

#include <cmath>
#include <string>

#include "curvetk/curve.hpp"

namespace curvetk {

namespace {

struct FrameParts {
    VecJet d1;
    Jet speed;
    VecJet cross12;
    Jet cross_sq;
};

FrameParts frame_parts(const VecJet& position, double eps_flat) {
    if (position.order() < 3)
        raise(errc::jet_order_exhausted,
              "frenet apparatus needs a position jet of order >= 3, got " + std::to_string(position.order()));
    FrameParts p{position.differentiate(), Jet{}, VecJet{}, Jet{}};
    const Jet speed_sq = squared_norm(p.d1);
    if (speed_sq.value() <= eps_div)
        raise(errc::singular_speed, "curve speed vanishes (|a'|^2 = " + format_value(speed_sq.value()) + ")");
    p.speed = sqrt(speed_sq);
    const VecJet d2 = p.d1.differentiate();
    p.cross12 = cross(p.d1, d2);
    p.cross_sq = squared_norm(p.cross12);
    const double cross_norm = std::sqrt(p.cross_sq.value());
    const double speed_cubed = p.speed.value() * p.speed.value() * p.speed.value();
    // Relative flatness test: kappa = |a' x a''| / |a'|^3 <= eps_flat.
    if (cross_norm <= eps_flat * speed_cubed)
        raise(errc::frame_undefined,
              "curvature below flatness threshold (|a' x a''| = " + format_value(cross_norm) + ")");
    return p;
}

} // namespace

FrenetFrame frenet_apparatus(const VecJet& position, double eps_flat) {
    FrameParts p = frame_parts(position, eps_flat);
    const VecJet d3 = position.differentiate().differentiate().differentiate();

    FrenetFrame frame;
    frame.speed = p.speed;
    const Jet cross_norm = sqrt(p.cross_sq);
    frame.kappa = cross_norm / (p.speed * p.speed * p.speed);
    frame.tau = dot(p.cross12, d3) / p.cross_sq;

    frame.T = p.d1.value() / p.speed.value();
    const Vec3 b_hat = p.cross12.value() / cross_norm.value();
    frame.N = b_hat.cross(frame.T).normalized();
    frame.B = frame.T.cross(frame.N);  // exactly right-handed
    return frame;
}

VecJet unit_tangent_jet(const VecJet& position, double eps_flat) {
    FrameParts p = frame_parts(position, eps_flat);
    return p.d1 / p.speed;
}

VecJet unit_binormal_jet(const VecJet& position, double eps_flat) {
    FrameParts p = frame_parts(position, eps_flat);
    return p.cross12 / sqrt(p.cross_sq);
}

VecJet unit_normal_jet(const VecJet& position, double eps_flat) {
    FrameParts p = frame_parts(position, eps_flat);
    return cross(p.cross12 / sqrt(p.cross_sq), p.d1 / p.speed);
}

double frenet_ode_residual(const CurveSpec& spec, double t, int jet_order, double step) {
    const auto frame_at = [&](double s) { return frenet_apparatus(eval_jet(spec, s, jet_order)); };

    const FrenetFrame fm2 = frame_at(t - 2 * step);
    const FrenetFrame fm1 = frame_at(t - step);
    const FrenetFrame f0 = frame_at(t);
    const FrenetFrame fp1 = frame_at(t + step);
    const FrenetFrame fp2 = frame_at(t + 2 * step);

    // 5-point central first derivative of each frame vector.
    const auto fd = [&](const Vec3& m2, const Vec3& m1, const Vec3& p1, const Vec3& p2) {
        return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * step);
    };

    const double vk = f0.speed.value() * f0.kappa.value();
    const double vt = f0.speed.value() * f0.tau.value();

    const Vec3 rT = fd(fm2.T, fm1.T, fp1.T, fp2.T) - vk * f0.N;
    const Vec3 rN = fd(fm2.N, fm1.N, fp1.N, fp2.N) - (-vk * f0.T + vt * f0.B);
    const Vec3 rB = fd(fm2.B, fm1.B, fp1.B, fp2.B) - (-vt * f0.N);

    return std::max({rT.cwiseAbs().maxCoeff(), rN.cwiseAbs().maxCoeff(), rB.cwiseAbs().maxCoeff()});
}

} // namespace curvetk
