#pragma once

#include "curvetk/jet.hpp"
#include "curvetk/tolerances.hpp"
#include "curvetk/vecjet.hpp"

namespace curvetk {

struct CurveSpec;

// Frenet data of a curve at one parameter value. The frame vectors are
// unit and right-handed (B = T x N by construction). speed, kappa and tau
// are jets in the curve parameter, so their derivatives up to the
// surviving jet order come along for free; the _p/_pp accessors throw
// jet_order_exhausted instead of fabricating values the jets cannot
// support. All primes are parameter derivatives, never arclength ones;
// speed carries the conversion.
struct FrenetFrame {
    Vec3 T = Vec3::UnitX();
    Vec3 N = Vec3::UnitY();
    Vec3 B = Vec3::UnitZ();
    Jet speed;  // order K-1 for an order-K position jet
    Jet kappa;  // order K-2
    Jet tau;    // order K-3

    double speed_p() const { return speed.derivative(1); }
    double speed_pp() const { return speed.derivative(2); }
    double kappa_p() const { return kappa.derivative(1); }
    double kappa_pp() const { return kappa.derivative(2); }
    double tau_p() const { return tau.derivative(1); }
    double tau_pp() const { return tau.derivative(2); }
};

// Full Frenet apparatus from a position jet of order >= 3 (order >= 5 for
// second-derivative scalars of tau, the default pipeline order is 6).
//   T = a'/|a'|, B = (a' x a'')/|a' x a''|, N = B x T
//   kappa = |a' x a''| / |a'|^3      (non-negative by convention)
//   tau   = det(a', a'', a''') / |a' x a''|^2
// Refuses a frame when |a' x a''| <= eps_flat * |a'|^3 (frame_undefined)
// or when the speed is near zero (singular_speed).
FrenetFrame frenet_apparatus(const VecJet& position, double eps_flat = Tolerances{}.eps_flat);

// Unit tangent / normal / binormal as vector jets, for building derived
// curves (the Bertrand partner needs N as a function of t, not a value).
VecJet unit_tangent_jet(const VecJet& position, double eps_flat = Tolerances{}.eps_flat);
VecJet unit_normal_jet(const VecJet& position, double eps_flat = Tolerances{}.eps_flat);
VecJet unit_binormal_jet(const VecJet& position, double eps_flat = Tolerances{}.eps_flat);

// Independent check that the computed frame satisfies
//   T' = v k N,  N' = -v k T + v t B,  B' = -v t N
// with frame derivatives taken by central finite differences in t.
// Returns the largest absolute component mismatch over the three rows.
double frenet_ode_residual(const CurveSpec& spec, double t, int jet_order = 6, double step = 1e-4);

} // namespace curvetk
