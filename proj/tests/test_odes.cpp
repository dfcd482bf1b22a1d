#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "curvetk/classify.hpp"
#include "curvetk/odes.hpp"
#include "support.hpp"

using namespace curvetk;
using namespace testsupport;

namespace {

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    REQUIRE_MESSAGE(false, "expected an Error to be thrown");
    return errc::config_error;
}

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kSqrt2 = 1.41421356237309504880;

Grid default_grid() {
    Grid grid;
    grid.t_start = 0.0;
    grid.t_end = 6.283185307179586;
    grid.samples = 50;
    return grid;
}

void check_coeffs(const OdeCoefficients& got, const OdeCoefficients& want, double tol) {
    check_close(got.lambda2, want.lambda2, tol);
    check_close(got.lambda1, want.lambda1, tol);
    check_close(got.lambda0, want.lambda0, tol);
}

} // namespace

TEST_CASE("tangent ODE of the (2,1) helix is D^3 T + D T = 0") {
    const FrenetFrame frame =
        frenet_apparatus(eval_jet(CurveSpec::general_helix(2.0, 1.0), 0.4, 8));
    const OdeCoefficients co = tangent_ode_coefficients(frame);
    check_close(co.lambda2, 0.0, 1e-13);
    check_close(co.lambda1, 1.0, 1e-12); // v^2 (k^2 + t^2) = 5 * (4 + 1)/25
    check_close(co.lambda0, 0.0, 1e-13);
    CHECK(tangent_ode_residual(frame) < 1e-12);
}

TEST_CASE("tangent ODE vanishes identically on nonconstant synthetic data") {
    auto rng = make_rng(0x7a17);
    for (int trial = 0; trial < 12; ++trial) {
        const SyntheticPair p = make_synthetic_pair(rng);
        CHECK(tangent_ode_residual(p.frame) < 1e-9);
    }
}

TEST_CASE("tangent ODE needs nonvanishing torsion") {
    const FrenetFrame circle = frenet_apparatus(eval_jet(CurveSpec::circle(1.0), 0.2, 8));
    CHECK(code_of([&] { tangent_ode_coefficients(circle); }) == errc::degenerate_denominator);
}

TEST_CASE("binormal ODE of the unit helix pair, both routes and the fit") {
    const CurveSpec base = CurveSpec::circular_helix(kInvSqrt2, kInvSqrt2);
    const BertrandPair pair = validate_pair(base, 0.25 * kSqrt2, default_grid());
    const FrenetFrame frame = frenet_apparatus(eval_jet(base, 0.8, 8));
    const DerivationCoefficients co =
        derivation_coefficients(frame, pair.lambda, pair.mu, pair.angles());

    // Constant curvature: lambda2 = lambda0 = 0 and lambda1 = C^2(k^2+t^2),
    // which for this helix is the harmonic constant itself.
    const OdeCoefficients stmt = binormal_ode_coefficients(frame, pair.angles());
    check_close(stmt.lambda2, 0.0, 1e-13);
    check_close(stmt.lambda1, 0.026334038989724043, 1e-10);
    check_close(stmt.lambda0, 0.0, 1e-13);

    const OdeCoefficients conn = binormal_ode_coefficients_connection(co);
    check_coeffs(conn, stmt, 1e-12);

    CHECK(binormal_ode_residual(frame, co, pair.angles()) < 1e-14);

    const FrameField x = FrameField::basis_B(co.alpha2.order() + 3);
    const FrameField d1 = derive_B(x, co);
    const FrameField d2 = derive_B(d1, co);
    const FrameField d3 = derive_B(d2, co);
    const auto fit = fit_ode_coefficients(d3, d2, d1, x);
    REQUIRE(fit.has_value());
    check_coeffs(*fit, stmt, 1e-9);
}

TEST_CASE("binormal routes agree on nonconstant synthetic data") {
    auto rng = make_rng(0xb1a0);
    for (int trial = 0; trial < 12; ++trial) {
        const SyntheticPair p = make_synthetic_pair(rng);
        const OdeCoefficients stmt = binormal_ode_coefficients(p.frame, p.angles);
        const OdeCoefficients conn = binormal_ode_coefficients_connection(p.co);
        CHECK(std::abs(stmt.lambda2 - conn.lambda2) < 1e-9);
        CHECK(std::abs(stmt.lambda1 - conn.lambda1) < 1e-9);
        CHECK(std::abs(stmt.lambda0 - conn.lambda0) < 1e-9);

        CHECK(binormal_ode_residual(p.frame, p.co, p.angles) < 1e-9);

        // Third opinion: solving the 3x3 system the iterates span gives the
        // same coefficients back.
        const FrameField x = FrameField::basis_B(p.co.alpha2.order() + 3);
        const FrameField d1 = derive_B(x, p.co);
        const FrameField d2 = derive_B(d1, p.co);
        const FrameField d3 = derive_B(d2, p.co);
        const auto fit = fit_ode_coefficients(d3, d2, d1, x);
        REQUIRE(fit.has_value());
        check_coeffs(*fit, stmt, 1e-7);
    }
}

TEST_CASE("normal-connection ODE residuals vanish for T and N") {
    const CurveSpec base = CurveSpec::circular_helix(kInvSqrt2, kInvSqrt2);
    const BertrandPair pair = validate_pair(base, 0.25 * kSqrt2, default_grid());
    const FrenetFrame frame = frenet_apparatus(eval_jet(base, 1.6, 8));
    const DerivationCoefficients co =
        derivation_coefficients(frame, pair.lambda, pair.mu, pair.angles());

    // Constant alpha1 makes both residuals exact zeros.
    const auto res = normal_ode_residuals(co);
    CHECK(res[0] < 1e-15);
    CHECK(res[1] < 1e-15);

    auto rng = make_rng(0x42);
    for (int trial = 0; trial < 12; ++trial) {
        const SyntheticPair p = make_synthetic_pair(rng);
        const auto r = normal_ode_residuals(p.co);
        CHECK(r[0] < 1e-9);
        CHECK(r[1] < 1e-9);
    }
}

TEST_CASE("connection-route guards reject vanishing coefficients") {
    DerivationCoefficients flat;
    flat.alpha1 = Jet::constant(0.0, 6);
    flat.alpha2 = Jet::constant(0.5, 6);
    CHECK(code_of([&] { binormal_ode_coefficients_connection(flat); }) ==
          errc::degenerate_denominator);
    CHECK(code_of([&] { normal_ode_residuals(flat); }) == errc::degenerate_denominator);
}

TEST_CASE("coefficient fit reports rank deficiency instead of inventing values") {
    const auto constant_field = [](double v) {
        return FrameField{Jet::constant(v, 4), Jet::constant(0.0, 4), Jet::constant(0.0, 4)};
    };
    // All four iterates collinear: the system cannot determine anything.
    const auto fit = fit_ode_coefficients(constant_field(4.0), constant_field(3.0),
                                          constant_field(2.0), constant_field(1.0));
    CHECK_FALSE(fit.has_value());
}

TEST_CASE("coefficient fit recovers the tangent ODE of a helix") {
    const FrenetFrame frame =
        frenet_apparatus(eval_jet(CurveSpec::general_helix(2.0, 1.0), 0.4, 8));
    const FrameField x = FrameField::basis_T(frame.tau.order() + 3);
    const FrameField d1 = derive_T(x, frame);
    const FrameField d2 = derive_T(d1, frame);
    const FrameField d3 = derive_T(d2, frame);
    const auto fit = fit_ode_coefficients(d3, d2, d1, x);
    REQUIRE(fit.has_value());
    check_coeffs(*fit, OdeCoefficients{0.0, 1.0, 0.0}, 1e-10);
}
