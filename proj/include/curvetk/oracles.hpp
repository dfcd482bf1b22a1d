#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "curvetk/error.hpp"

namespace curvetk {

// Finite-difference oracles. Everything here differentiates by sampling a
// plain callable on a 5-point central stencil, with no jets involved, so
// agreement with the jet pipeline is a real cross-check and not a tautology.

// k-th derivative of f at t, k in {0,1,2,3}. The default steps balance
// truncation against roundoff for functions with O(1) derivatives; expect
// roughly 1e-8 absolute accuracy for k <= 2 and 1e-6 for k = 3.
double fd_derivative(const std::function<double(double)>& f, double t, int k);
double fd_derivative(const std::function<double(double)>& f, double t, int k, double h);

Eigen::Vector3d fd_derivative(const std::function<Eigen::Vector3d(double)>& f, double t, int k);
Eigen::Vector3d fd_derivative(const std::function<Eigen::Vector3d(double)>& f, double t, int k,
                              double h);

// Frenet data computed purely from finite differences of a position
// callable. Accuracy is stencil-limited (around 1e-6 relative), which is
// exactly what makes it a fair referee for the analytic pipeline.
struct FdFrame {
    Eigen::Vector3d T;
    Eigen::Vector3d N;
    Eigen::Vector3d B;
    double speed = 0.0;
    double kappa = 0.0;
    double tau = 0.0;
};

FdFrame fd_frenet(const std::function<Eigen::Vector3d(double)>& position, double t,
                  double eps_flat = 1e-9);

// Closed-form data for the curve (a cos t, a sin t, b t) paired with its
// normal offset by lambda. Every field below is written straight from the
// parametrization, so the toolkit's Frenet, pair, and classification
// output can be checked against numbers that never touch its code paths.
//
// Curvature of the partner is signed by the orientation of its principal
// normal against the base normal: offsets past the axis (lambda > a) flip
// both, and kappa_beta goes negative with normal_sign.
struct HelixPairFixture {
    double a = 0.0;
    double b = 0.0;
    double lambda = 0.0;

    double speed = 0.0; // sqrt(a^2 + b^2)
    double kappa = 0.0; // a / (a^2 + b^2)
    double tau = 0.0;   // b / (a^2 + b^2)

    double mu = 0.0; // (a^2 + b^2 - lambda a) / b, so lambda kappa + mu tau = 1
    double cos_theta = 0.0;
    double sin_theta = 0.0; // signed: lambda b over the product of speeds
    int normal_sign = 0;    // sign of (a - lambda)

    double kappa_beta = 0.0; // (a - lambda) / ((a - lambda)^2 + b^2), signed
    double tau_beta = 0.0;   // b / ((a - lambda)^2 + b^2)
    double speed_beta = 0.0; // sqrt((a - lambda)^2 + b^2)

    // Partner mean-curvature coefficient (lambda kappa - sin^2) / (mu sin);
    // absent when mu sin vanishes and the coefficient has no value.
    std::optional<double> a1;

    // Constants chi with Delta H = chi H for the full and normal-connection
    // Laplacians. With c = (cos - 1)/sin these are c^2 (kappa^2 + tau^2)
    // and c^2 kappa^2; the canonical unit helix collapses them to c^2 and
    // c^2 / 2.
    double harmonic_constant_full = 0.0;
    double harmonic_constant_normal = 0.0;

    Eigen::Vector3d base_point(double t) const;
    Eigen::Vector3d base_tangent(double t) const;
    Eigen::Vector3d base_normal(double t) const;
    Eigen::Vector3d base_binormal(double t) const;
    Eigen::Vector3d partner_point(double t) const;
};

// Builds the fixture and self-checks its internal identities (the pair
// relation, the angle normalization, the alternative curvature and speed
// formulas) to 1e-9 before handing it out. Degenerate inputs, where the
// pair construction itself has no meaning, raise degenerate_fixture.
HelixPairFixture helix_pair_fixture(double a, double b, double lambda);

} // namespace curvetk
