#pragma once

#include <optional>
#include <utility>

#include "curvetk/bertrand.hpp"
#include "curvetk/frenet.hpp"
#include "curvetk/jet.hpp"

namespace curvetk {

// A vector field along the base curve written in its Frenet frame:
// X = f_T T + f_N N + f_B B, with each coefficient a jet in the curve
// parameter. Derivations consume one jet order per application and raise
// jet_order_exhausted when the coefficients run out.
struct FrameField {
    Jet f_T;
    Jet f_N;
    Jet f_B;

    int order() const { return std::min({f_T.order(), f_N.order(), f_B.order()}); }
    Vec3 values() const { return {f_T.value(), f_N.value(), f_B.value()}; }

    FrameField operator-() const { return {-f_T, -f_N, -f_B}; }

    static FrameField zero(int order);
    static FrameField basis_T(int order);
    static FrameField basis_N(int order);
    static FrameField basis_B(int order);
};

FrameField operator+(const FrameField& a, const FrameField& b);
FrameField operator-(const FrameField& a, const FrameField& b);
FrameField operator*(const Jet& s, const FrameField& f);
FrameField operator*(double s, const FrameField& f);

// Derivation data for the direction transverse to the pair's tangents:
//   D_B T = alpha1 N, D_B N = -alpha1 T - alpha2 B, D_B B = alpha2 N
// with alpha1 = (1-cos)/sin * kappa and alpha2 = (cos-1)/sin * tau, both
// jets so their parameter derivatives ride along. a1 is the partner
// mean-curvature coefficient (lambda*kappa - sin^2)/(mu*sin); it is absent
// when mu*sin is too small to divide by (the degenerate-partner case).
struct DerivationCoefficients {
    double lambda = 0.0;
    double mu = 0.0;
    double cos_theta = 1.0;
    double sin_theta = 0.0;
    Jet alpha1;
    Jet alpha2;
    std::optional<Jet> a1;
};

DerivationCoefficients derivation_coefficients(const FrenetFrame& base, double lambda, double mu,
                                               const PairAngles& angles, const Tolerances& tol = {});

// Derivative of a field along the curve parameter, expanding the frame via
// T' = vkN, N' = -vkT + vtB, B' = -vtN (v = speed). On a unit-speed curve
// this is the covariant derivative along T.
FrameField derive_T(const FrameField& field, const FrenetFrame& frame);

// Derivative along the transverse direction B using the pair rules above.
FrameField derive_B(const FrameField& field, const DerivationCoefficients& co);

// Normal-connection derivative along B: same rules with the binormal row
// projected out. The field must have no B component (not_normal_field).
FrameField normal_derive_B(const FrameField& field, const DerivationCoefficients& co);

// Laplacian convention: Delta = -D(D(.)) for any derivation D.
template <typename Deriv>
FrameField laplacian(const FrameField& field, Deriv&& derive) {
    return -derive(derive(field));
}

FrameField laplacian_T(const FrameField& field, const FrenetFrame& frame);
FrameField laplacian_B(const FrameField& field, const DerivationCoefficients& co);
FrameField normal_laplacian_B(const FrameField& field, const DerivationCoefficients& co);

} // namespace curvetk
