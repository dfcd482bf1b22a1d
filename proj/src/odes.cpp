#include "curvetk/odes.hpp"

#include <cmath>
#include <string>

namespace curvetk {

namespace {

void require_nonzero(double value, const char* what) {
    if (std::abs(value) <= eps_div)
        raise(errc::degenerate_denominator,
              std::string(what) + " is too small to divide by (" + format_value(value) + ")");
}

double combo_residual(const FrameField& d3, const FrameField& d2, const FrameField& d1,
                      const FrameField& x, const OdeCoefficients& co) {
    const Vec3 r = d3.values() + co.lambda2 * d2.values() + co.lambda1 * d1.values() +
                   co.lambda0 * x.values();
    return r.cwiseAbs().maxCoeff();
}

} // namespace

OdeCoefficients tangent_ode_coefficients(const FrenetFrame& frame) {
    const double v = frame.speed.value(), vp = frame.speed_p(), vpp = frame.speed_pp();
    const double k = frame.kappa.value(), kp = frame.kappa_p(), kpp = frame.kappa_pp();
    const double t = frame.tau.value(), tp = frame.tau_p();
    require_nonzero(t, "torsion");
    require_nonzero(k, "curvature");
    require_nonzero(v, "speed");

    OdeCoefficients co;
    co.lambda2 = -(3.0 * vp / v + 2.0 * kp / k + tp / t);
    co.lambda1 = v * v * (k * k + t * t) - vpp / v - kpp / k +
                 (vp / v + kp / k) * (3.0 * vp / v + tp / t) + 2.0 * (kp / k) * (kp / k);
    // v^2 k t (k/t)' expanded to avoid the quotient jet.
    co.lambda0 = v * v * k * (kp * t - k * tp) / t;
    return co;
}

double tangent_ode_residual(const FrenetFrame& frame) {
    const OdeCoefficients co = tangent_ode_coefficients(frame);
    const FrameField x = FrameField::basis_T(frame.tau.order() + 3);
    const FrameField d1 = derive_T(x, frame);
    const FrameField d2 = derive_T(d1, frame);
    const FrameField d3 = derive_T(d2, frame);
    return combo_residual(d3, d2, d1, x, co);
}

OdeCoefficients binormal_ode_coefficients(const FrenetFrame& frame, const PairAngles& angles) {
    const double k = frame.kappa.value(), kp = frame.kappa_p();
    const double t = frame.tau.value(), tp = frame.tau_p(), tpp = frame.tau_pp();
    require_nonzero(t, "torsion");
    require_nonzero(k, "curvature");
    require_nonzero(angles.sin_theta, "sin theta");
    const double C = (1.0 - angles.cos_theta) / angles.sin_theta;

    OdeCoefficients co;
    co.lambda2 = -(kp / k + 2.0 * tp / t);
    co.lambda1 = C * C * (k * k + t * t) + 2.0 * (tp / t) * (tp / t) + kp * tp / (k * t) - tpp / t;
    // k t C^2 (t/k)' expanded.
    co.lambda0 = C * C * t * (tp * k - t * kp) / k;
    return co;
}

OdeCoefficients binormal_ode_coefficients_connection(const DerivationCoefficients& co) {
    const double a1 = co.alpha1.value(), a1p = co.alpha1.derivative(1);
    const double a2 = co.alpha2.value(), a2p = co.alpha2.derivative(1);
    const double a2pp = co.alpha2.derivative(2);
    require_nonzero(a1, "alpha1");
    require_nonzero(a2, "alpha2");

    OdeCoefficients out;
    out.lambda2 = -(a1p / a1 + 2.0 * a2p / a2);
    out.lambda1 = a1 * a1 + a2 * a2 + 2.0 * (a2p / a2) * (a2p / a2) + a1p * a2p / (a1 * a2) -
                  a2pp / a2;
    out.lambda0 = a2p * a2 - (a1p / a1) * a2 * a2;
    return out;
}

double binormal_ode_residual(const FrenetFrame& frame, const DerivationCoefficients& co,
                             const PairAngles& angles) {
    const OdeCoefficients coeffs = binormal_ode_coefficients(frame, angles);
    const FrameField x = FrameField::basis_B(co.alpha2.order() + 3);
    const FrameField d1 = derive_B(x, co);
    const FrameField d2 = derive_B(d1, co);
    const FrameField d3 = derive_B(d2, co);
    return combo_residual(d3, d2, d1, x, coeffs);
}

std::array<double, 2> normal_ode_residuals(const DerivationCoefficients& co) {
    const double a1 = co.alpha1.value();
    const double a1p = co.alpha1.derivative(1);
    require_nonzero(a1, "alpha1");

    const auto residual = [&](const FrameField& x) {
        const FrameField d1 = normal_derive_B(x, co);
        const FrameField d2 = normal_derive_B(d1, co);
        const Vec3 r = a1 * d2.values() - a1p * d1.values() + (a1 * a1 * a1) * x.values();
        return r.cwiseAbs().maxCoeff();
    };
    const int order = co.alpha1.order() + 2;
    return {residual(FrameField::basis_T(order)), residual(FrameField::basis_N(order))};
}

std::optional<OdeCoefficients> fit_ode_coefficients(const FrameField& d3, const FrameField& d2,
                                                    const FrameField& d1, const FrameField& x) {
    Eigen::Matrix3d a;
    a.col(0) = d2.values();
    a.col(1) = d1.values();
    a.col(2) = x.values();
    const Eigen::Vector3d b = -d3.values();
    const auto qr = a.colPivHouseholderQr();
    if (qr.rank() < 3) return std::nullopt;
    const Eigen::Vector3d sol = qr.solve(b);
    return OdeCoefficients{sol[0], sol[1], sol[2]};
}

} // namespace curvetk
