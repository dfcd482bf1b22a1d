#include "curvetk/framefield.hpp"

#include <cmath>
#include <string>

namespace curvetk {

FrameField FrameField::zero(int order) {
    return {Jet::constant(0.0, order), Jet::constant(0.0, order), Jet::constant(0.0, order)};
}

FrameField FrameField::basis_T(int order) {
    return {Jet::constant(1.0, order), Jet::constant(0.0, order), Jet::constant(0.0, order)};
}

FrameField FrameField::basis_N(int order) {
    return {Jet::constant(0.0, order), Jet::constant(1.0, order), Jet::constant(0.0, order)};
}

FrameField FrameField::basis_B(int order) {
    return {Jet::constant(0.0, order), Jet::constant(0.0, order), Jet::constant(1.0, order)};
}

FrameField operator+(const FrameField& a, const FrameField& b) {
    return {a.f_T + b.f_T, a.f_N + b.f_N, a.f_B + b.f_B};
}

FrameField operator-(const FrameField& a, const FrameField& b) {
    return {a.f_T - b.f_T, a.f_N - b.f_N, a.f_B - b.f_B};
}

FrameField operator*(const Jet& s, const FrameField& f) {
    return {s * f.f_T, s * f.f_N, s * f.f_B};
}

FrameField operator*(double s, const FrameField& f) {
    return {s * f.f_T, s * f.f_N, s * f.f_B};
}

DerivationCoefficients derivation_coefficients(const FrenetFrame& base, double lambda, double mu,
                                               const PairAngles& angles, const Tolerances& tol) {
    if (std::abs(angles.sin_theta) <= tol.eps_theta)
        raise(errc::theta_degenerate,
              "derivation coefficients undefined for sin theta = " + format_value(angles.sin_theta));
    DerivationCoefficients co;
    co.lambda = lambda;
    co.mu = mu;
    co.cos_theta = angles.cos_theta;
    co.sin_theta = angles.sin_theta;
    const double c = (1.0 - angles.cos_theta) / angles.sin_theta;
    co.alpha1 = c * base.kappa;
    co.alpha2 = -c * base.tau;  // (cos - 1)/sin * tau
    const double a1_den = mu * angles.sin_theta;
    if (std::abs(a1_den) > eps_div) {
        const double sin_sq = angles.sin_theta * angles.sin_theta;
        co.a1 = (lambda * base.kappa - sin_sq) / a1_den;
    }
    return co;
}

FrameField derive_T(const FrameField& field, const FrenetFrame& frame) {
    const Jet vk = frame.speed * frame.kappa;
    const Jet vt = frame.speed * frame.tau;
    return {field.f_T.differentiate() - vk * field.f_N,
            field.f_N.differentiate() + vk * field.f_T - vt * field.f_B,
            field.f_B.differentiate() + vt * field.f_N};
}

FrameField derive_B(const FrameField& field, const DerivationCoefficients& co) {
    return {field.f_T.differentiate() - co.alpha1 * field.f_N,
            field.f_N.differentiate() + co.alpha1 * field.f_T + co.alpha2 * field.f_B,
            field.f_B.differentiate() - co.alpha2 * field.f_N};
}

FrameField normal_derive_B(const FrameField& field, const DerivationCoefficients& co) {
    for (int k = 0; k <= field.f_B.order(); ++k)
        if (std::abs(field.f_B.derivative(k)) > eps_div)
            raise(errc::not_normal_field,
                  "normal derivation needs a vanishing binormal component (coefficient " +
                      std::to_string(k) + " is " + format_value(field.f_B.derivative(k)) + ")");
    Jet out_t = field.f_T.differentiate() - co.alpha1 * field.f_N;
    Jet out_n = field.f_N.differentiate() + co.alpha1 * field.f_T;
    const int order = std::min(out_t.order(), out_n.order());
    return {out_t.truncated(order), out_n.truncated(order), Jet::constant(0.0, order)};
}

FrameField laplacian_T(const FrameField& field, const FrenetFrame& frame) {
    return laplacian(field, [&](const FrameField& f) { return derive_T(f, frame); });
}

FrameField laplacian_B(const FrameField& field, const DerivationCoefficients& co) {
    return laplacian(field, [&](const FrameField& f) { return derive_B(f, co); });
}

FrameField normal_laplacian_B(const FrameField& field, const DerivationCoefficients& co) {
    return laplacian(field, [&](const FrameField& f) { return normal_derive_B(f, co); });
}

} // namespace curvetk
