#pragma once

#include <cmath>
#include <random>
#include <string>

#include <doctest.h>

#include "curvetk/bertrand.hpp"
#include "curvetk/framefield.hpp"
#include "curvetk/jet.hpp"

namespace testsupport {

// Relative gap against a floor of 1, the same yardstick the library's
// internal guards use.
inline double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline void check_close(double actual, double expected, double tol = 1e-12) {
    CAPTURE(actual);
    CAPTURE(expected);
    CHECK(rel_gap(actual, expected) <= tol);
}

inline void check_vec(const curvetk::Vec3& actual, const curvetk::Vec3& expected,
                      double tol = 1e-12) {
    for (int i = 0; i < 3; ++i) {
        CAPTURE(i);
        check_close(actual[i], expected[i], tol);
    }
}

// Deterministic RNG for property tests; never seeded from the clock.
inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eed5eedULL) {
    return std::mt19937_64(seed);
}

// A smooth scalar jet with all derivatives populated and value bounded
// away from zero, for synthetic-frame property tests. Values land in
// [floor + 0.18, floor + 0.82].
inline curvetk::Jet positive_jet(std::mt19937_64& rng, int order, double floor = 0.3) {
    std::uniform_real_distribution<double> coeff(-0.4, 0.4);
    std::uniform_real_distribution<double> phase(-0.7, 0.7);
    curvetk::Jet t = curvetk::Jet::variable(0.0, order);
    curvetk::Jet u = curvetk::Jet::constant(phase(rng), order);
    for (int k = 1; k <= 3; ++k) u = u + coeff(rng) * pow(t, k);
    return floor + 0.5 + 0.5 * sin(u);
}

// Synthetic Bertrand derivation data with genuinely nonconstant curvature:
// pick lambda, mu and kappa(t); tau = (1 - lambda*kappa)/mu then satisfies
// the pair identity by construction and theta comes from the invariants.
struct SyntheticPair {
    double lambda = 0.0;
    double mu = 0.0;
    curvetk::PairAngles angles;
    curvetk::Jet kappa;
    curvetk::Jet tau;
    curvetk::FrenetFrame frame;  // T/N/B left at defaults; jets carry the data
    curvetk::DerivationCoefficients co;
};

inline SyntheticPair make_synthetic_pair(std::mt19937_64& rng, int order = 8,
                                         double lambda = 0.5, double mu = 1.3) {
    SyntheticPair p;
    p.lambda = lambda;
    p.mu = mu;
    const double d = std::hypot(lambda, mu);
    p.angles = {mu / d, lambda / d};
    p.kappa = positive_jet(rng, order);
    p.tau = (1.0 - lambda * p.kappa) / mu;
    p.frame.speed = positive_jet(rng, order);
    p.frame.kappa = p.kappa;
    p.frame.tau = p.tau;

    const double c = (1.0 - p.angles.cos_theta) / p.angles.sin_theta;
    p.co.lambda = lambda;
    p.co.mu = mu;
    p.co.cos_theta = p.angles.cos_theta;
    p.co.sin_theta = p.angles.sin_theta;
    p.co.alpha1 = c * p.kappa;
    p.co.alpha2 = -c * p.tau;
    p.co.a1 = (lambda * p.kappa - p.angles.sin_theta * p.angles.sin_theta) /
              (mu * p.angles.sin_theta);
    return p;
}

} // namespace testsupport
