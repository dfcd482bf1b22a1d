#pragma once

#include <vector>

#include "curvetk/curve.hpp"
#include "curvetk/frenet.hpp"
#include "curvetk/tolerances.hpp"

namespace curvetk {

// Angle between the pair's tangents. Signed convention: cos = <T_b, T>,
// sin = <T_b, B>, so T_b = cos*T + sin*B holds as an identity for every
// valid pair, including negative offsets (where sin < 0).
struct PairAngles {
    double cos_theta = 1.0;
    double sin_theta = 0.0;
};

struct ThetaSample {
    double t = 0.0;
    double cos_theta = 1.0;
    double sin_theta = 0.0;
};

// A validated Bertrand mate relation beta(t) = alpha(t) + lambda * N(t).
// mu is the grid-aggregated companion constant in lambda*kappa + mu*tau = 1.
// normal_sign records whether the directly computed partner normal is +N
// or -N; the closed-form partner curvature carries the same sign (asserted
// during validation, recorded, never dropped).
struct BertrandPair {
    CurveSpec base;
    Grid grid;
    int jet_order = 6;
    double lambda = 0.0;
    double mu = 0.0;
    double cos_theta = 1.0;
    double sin_theta = 0.0;
    int normal_sign = 1;
    double mu_spread = 0.0;
    double theta_spread = 0.0;
    double max_pair_identity_error = 0.0;  // |lambda*kappa + mu*tau - 1| over grid
    double max_frame_error = 0.0;          // closed-form frame vs direct frame
    double max_curvature_error = 0.0;      // closed-form kappa/tau vs direct, relative
    double max_speed_error = 0.0;          // |beta'| vs speed * tau * sqrt(l^2 + m^2), relative
    std::vector<ThetaSample> theta_samples;

    PairAngles angles() const { return {cos_theta, sin_theta}; }
};

// beta(t) = alpha(t) + lambda * N(t) at one parameter value.
Vec3 partner_point(const CurveSpec& base, double lambda, double t, int jet_order = 6,
                   double eps_flat = Tolerances{}.eps_flat);

// Partner position as a jet; costs two orders (N needs alpha'').
VecJet partner_position_jet(const VecJet& base_position, double lambda,
                            double eps_flat = Tolerances{}.eps_flat);

// mu = (1 - lambda*kappa)/tau sampled over the grid; the mean is returned
// only when the spread stays within tol_pair (otherwise not_bertrand).
double derive_mu(const CurveSpec& base, double lambda, const Grid& grid, int jet_order = 6,
                 const Tolerances& tol = {});

// Signed angles from the two computed frames. Rejects |sin| <= eps_theta
// (theta_degenerate) and a tangent leaning out of span{T, B} (not_bertrand).
PairAngles compute_theta(const FrenetFrame& base, const FrenetFrame& partner,
                         const Tolerances& tol = {});

// Same angles from the pair invariants alone: T_b is parallel to
// (1 - lambda*kappa) T + lambda*tau B regardless of parametrization speed.
// Lets condition formulas be evaluated even where the partner frame cannot
// be built (degenerate lambdas).
PairAngles pair_angles_from_invariants(double kappa, double tau, double lambda,
                                       const Tolerances& tol = {});

struct PartnerFrame {
    Vec3 T, N, B;
};

// T_b = cos*T + sin*B, N_b = N, B_b = -sin*T + cos*B. For pairs whose
// recorded normal_sign is -1, N and B both flip relative to this.
PartnerFrame partner_frame_closed_form(const PairAngles& angles, const FrenetFrame& base);

struct PartnerCurvatures {
    double kappa = 0.0;  // signed; |kappa| matches the direct frame value
    double tau = 0.0;
};

// kappa_b = (lambda*kappa - sin^2) / (lambda * (1 - lambda*kappa)),
// tau_b = sin^2 / (lambda^2 * tau).
PartnerCurvatures partner_curvatures_closed_form(double kappa, double tau, double lambda,
                                                 const PairAngles& angles);

// Partner speed per unit of base arclength: |tau| * sqrt(lambda^2 + mu^2),
// which equals sqrt((1 - lambda*kappa)^2 + (lambda*tau)^2). The
// parameter-space speed |beta'(t)| is this times the base speed.
double partner_speed(double tau, const BertrandPair& pair);

// Full validation over a grid: constant mu and theta, the pair identity,
// collinear normals with a consistent sign, closed-form frame/curvature/
// speed equivalence against the directly computed partner frame.
BertrandPair validate_pair(const CurveSpec& base, double lambda, const Grid& grid,
                           int jet_order = 6, const Tolerances& tol = {});

} // namespace curvetk
