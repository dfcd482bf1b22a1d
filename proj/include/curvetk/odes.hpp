#pragma once

#include <array>
#include <optional>

#include "curvetk/framefield.hpp"

namespace curvetk {

// Coefficients of a third-order frame ODE
//   D^3 X + lambda2 D^2 X + lambda1 D X + lambda0 X = 0.
struct OdeCoefficients {
    double lambda2 = 0.0;
    double lambda1 = 0.0;
    double lambda0 = 0.0;
};

// Characterizing ODE of the unit tangent under derivation along the curve
// (D = derive_T, primes are parameter derivatives, v = speed):
//   lambda2 = -(3v'/v + 2k'/k + t'/t)
//   lambda1 = v^2(k^2+t^2) - v''/v - k''/k + (v'/v + k'/k)(3v'/v + t'/t) + 2(k'/k)^2
//   lambda0 = v^2 k t (k/t)'
// Needs tau bounded away from zero (degenerate_denominator otherwise).
OdeCoefficients tangent_ode_coefficients(const FrenetFrame& frame);

// Largest absolute component of D^3 T + lambda2 D^2 T + lambda1 D T + lambda0 T.
double tangent_ode_residual(const FrenetFrame& frame);

// Characterizing ODE of the base binormal under derivation along the
// pair's transverse direction, statement form (C = (1-cos)/sin):
//   lambda2 = -(k'/k + 2t'/t)
//   lambda1 = C^2(k^2+t^2) + 2(t'/t)^2 + k't'/(kt) - t''/t
//   lambda0 = k t C^2 (t/k)'
OdeCoefficients binormal_ode_coefficients(const FrenetFrame& frame, const PairAngles& angles);

// Same coefficients from the derivation data instead (alpha1 = C k,
// alpha2 = -C t); the two routes are compared in tests, not assumed equal:
//   lambda2 = -(a1'/a1 + 2 a2'/a2)
//   lambda1 = a1^2 + a2^2 + 2(a2'/a2)^2 + a1'a2'/(a1 a2) - a2''/a2
//   lambda0 = a2' a2 - (a1'/a1) a2^2
OdeCoefficients binormal_ode_coefficients_connection(const DerivationCoefficients& co);

double binormal_ode_residual(const FrenetFrame& frame, const DerivationCoefficients& co,
                             const PairAngles& angles);

// Normal-connection ODEs alpha1 D*D*X - alpha1' D*X + alpha1^3 X = 0 for
// X = T and X = N (D* = normal_derive_B). Returns the two residuals.
std::array<double, 2> normal_ode_residuals(const DerivationCoefficients& co);

// Independent route: recover (lambda2, lambda1, lambda0) by solving the
// 3x3 system the four iterated fields span at one sample. Empty when the
// system is singular (constant-curvature data collapses it).
std::optional<OdeCoefficients> fit_ode_coefficients(const FrameField& d3, const FrameField& d2,
                                                    const FrameField& d1, const FrameField& x);

} // namespace curvetk
