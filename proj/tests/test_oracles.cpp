#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "curvetk/classify.hpp"
#include "curvetk/oracles.hpp"
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

} // namespace

TEST_CASE("scalar stencils recover derivatives of exp") {
    const auto f = [](double t) { return std::exp(t); };
    const double t = 0.3;
    const double e = std::exp(t);
    CHECK(fd_derivative(f, t, 0) == e);
    check_close(fd_derivative(f, t, 1), e, 1e-8);
    check_close(fd_derivative(f, t, 2), e, 1e-6);
    check_close(fd_derivative(f, t, 3), e, 1e-5);
}

TEST_CASE("explicit step overload and unsupported orders") {
    const auto f = [](double t) { return std::sin(3.0 * t); };
    check_close(fd_derivative(f, 0.5, 1, 1e-3), 3.0 * std::cos(1.5), 1e-8);
    CHECK(code_of([&] { fd_derivative(f, 0.5, 4); }) == errc::domain_error);
    CHECK(code_of([&] { fd_derivative(f, 0.5, -1); }) == errc::domain_error);
}

TEST_CASE("vector stencil matches the helix parametrization") {
    const double a = 2.0, b = 1.0, t = 0.9;
    const auto pos = [&](double s) {
        return Eigen::Vector3d(a * std::cos(s), a * std::sin(s), b * s);
    };
    check_vec(fd_derivative(pos, t, 1),
              Eigen::Vector3d(-a * std::sin(t), a * std::cos(t), b), 1e-8);
    check_vec(fd_derivative(pos, t, 2),
              Eigen::Vector3d(-a * std::cos(t), -a * std::sin(t), 0.0), 1e-6);
    check_vec(fd_derivative(pos, t, 3),
              Eigen::Vector3d(a * std::sin(t), -a * std::cos(t), 0.0), 1e-5);
}

TEST_CASE("fd_frenet agrees with the helix closed form") {
    const HelixPairFixture fx = helix_pair_fixture(kInvSqrt2, kInvSqrt2, 0.25 * kSqrt2);
    const auto pos = [&](double s) { return fx.base_point(s); };
    const double t = 0.6;

    const FdFrame frame = fd_frenet(pos, t);
    check_vec(frame.T, fx.base_tangent(t), 1e-6);
    check_vec(frame.N, fx.base_normal(t), 1e-6);
    check_vec(frame.B, fx.base_binormal(t), 1e-6);
    check_close(frame.speed, fx.speed, 1e-6);
    check_close(frame.kappa, fx.kappa, 1e-6);
    check_close(frame.tau, fx.tau, 1e-6);
}

TEST_CASE("fd_frenet refuses straight curves") {
    const auto line = [](double s) { return Eigen::Vector3d(s, 2.0 * s, -s); };
    CHECK(code_of([&] { fd_frenet(line, 0.0); }) == errc::frame_undefined);
}

TEST_CASE("fixture freezes the quarter-offset helix pair") {
    const HelixPairFixture fx = helix_pair_fixture(kInvSqrt2, kInvSqrt2, 0.25 * kSqrt2);
    check_close(fx.speed, 1.0);
    check_close(fx.kappa, kInvSqrt2);
    check_close(fx.tau, kInvSqrt2);
    check_close(fx.mu, 1.0606601717798212);
    check_close(fx.cos_theta, 0.94868329805051381);
    check_close(fx.sin_theta, 0.31622776601683794);
    CHECK(fx.normal_sign == 1);
    check_close(fx.kappa_beta, 0.56568542494923801);
    check_close(fx.tau_beta, 1.1313708498984760);
    check_close(fx.speed_beta, 0.79056941504209483);
    REQUIRE(fx.a1.has_value());
    check_close(*fx.a1, 0.44721359549995782);
    check_close(fx.harmonic_constant_full, 0.026334038989723908, 1e-11);
    check_close(fx.harmonic_constant_normal, 0.013167019494861954, 1e-11);

    // Offset point sits one lambda along the inward normal.
    check_vec(fx.partner_point(0.0), Eigen::Vector3d(kInvSqrt2 - 0.25 * kSqrt2, 0.0, 0.0));
    const double t = 1.1;
    check_vec(fx.partner_point(t), fx.base_point(t) + fx.lambda * fx.base_normal(t));
}

TEST_CASE("fixture handles a negative offset") {
    const HelixPairFixture fx = helix_pair_fixture(kInvSqrt2, kInvSqrt2, -kSqrt2);
    check_close(fx.mu, 2.8284271247461903);
    check_close(fx.cos_theta, 0.89442719099991597);
    check_close(fx.sin_theta, -0.44721359549995798); // sign tracks lambda b
    CHECK(fx.normal_sign == 1);
    check_close(fx.kappa_beta, 0.42426406871192851);
    check_close(fx.tau_beta, 0.14142135623730948);
    REQUIRE(fx.a1.has_value());
    check_close(*fx.a1, 0.94868329805051388);
    check_close(fx.harmonic_constant_full, 0.055728090000841106, 1e-11);
    check_close(fx.harmonic_constant_normal, 0.027864045000420553, 1e-11);
}

TEST_CASE("offset through the axis flips the partner normal") {
    const HelixPairFixture fx = helix_pair_fixture(kInvSqrt2, kInvSqrt2, kSqrt2);
    CHECK(std::abs(fx.mu) < 1e-12);
    CHECK(std::abs(fx.cos_theta) < 1e-12);
    check_close(fx.sin_theta, 1.0);
    CHECK(fx.normal_sign == -1);
    check_close(fx.kappa_beta, -kInvSqrt2); // signed: normal points away
    check_close(fx.tau_beta, kInvSqrt2);
    check_close(fx.speed_beta, 1.0);
    CHECK_FALSE(fx.a1.has_value()); // mu sin = 0, coefficient has no value
    check_close(fx.harmonic_constant_full, 1.0);
    check_close(fx.harmonic_constant_normal, 0.5);
}

TEST_CASE("fixture works for negative pitch and offsets past the axis") {
    const HelixPairFixture neg = helix_pair_fixture(1.0, -0.5, 0.4);
    check_close(neg.tau, -0.4);
    CHECK(neg.sin_theta < 0.0); // lambda b < 0
    CHECK(neg.normal_sign == 1);
    CHECK(neg.kappa_beta > 0.0);

    const HelixPairFixture past = helix_pair_fixture(1.0, 0.7, 1.8);
    CHECK(past.normal_sign == -1);
    CHECK(past.kappa_beta < 0.0);
    check_close(past.kappa_beta, (1.0 - 1.8) / ((1.0 - 1.8) * (1.0 - 1.8) + 0.49));
}

TEST_CASE("frame callables stay orthonormal along the curve") {
    const HelixPairFixture fx = helix_pair_fixture(2.0, 1.0, 0.5);
    for (const double t : {-2.0, 0.0, 0.7, 3.1}) {
        const Eigen::Vector3d T = fx.base_tangent(t);
        const Eigen::Vector3d N = fx.base_normal(t);
        const Eigen::Vector3d B = fx.base_binormal(t);
        check_close(T.norm(), 1.0);
        check_close(N.norm(), 1.0);
        check_close(B.norm(), 1.0);
        check_vec(T.cross(N), B);
        // Tangent is the normalized velocity of the point callable.
        const auto pos = [&](double s) { return fx.base_point(s); };
        check_vec(fd_derivative(pos, t, 1).normalized(), T, 1e-8);
    }
}

TEST_CASE("fixture oracle matches the independently generated table") {
    std::ifstream in(TEST_DATA_DIR "/helix_pair_fixtures.json");
    REQUIRE_MESSAGE(in.good(), "fixture table must exist");
    const nlohmann::json table = nlohmann::json::parse(in);
    REQUIRE(table.at("fixtures").size() >= 8);

    for (const nlohmann::json& row : table.at("fixtures")) {
        const HelixPairFixture fx = helix_pair_fixture(
            row.at("a").get<double>(), row.at("b").get<double>(), row.at("lambda").get<double>());
        const auto field = [&](const char* name) { return row.at(name).get<double>(); };
        check_close(fx.speed, field("speed"));
        check_close(fx.kappa, field("kappa"));
        check_close(fx.tau, field("tau"));
        check_close(fx.mu, field("mu"));
        check_close(fx.cos_theta, field("cos_theta"));
        check_close(fx.sin_theta, field("sin_theta"));
        CHECK(fx.normal_sign == row.at("normal_sign").get<int>());
        check_close(fx.kappa_beta, field("kappa_beta"));
        check_close(fx.tau_beta, field("tau_beta"));
        check_close(fx.speed_beta, field("speed_beta"));
        if (row.at("a1").is_null()) {
            CHECK_FALSE(fx.a1.has_value());
        } else {
            REQUIRE(fx.a1.has_value());
            check_close(*fx.a1, field("a1"));
        }
        check_close(fx.harmonic_constant_full, field("harmonic_constant_full"), 1e-11);
        check_close(fx.harmonic_constant_normal, field("harmonic_constant_normal"), 1e-11);
    }
}

TEST_CASE("pair pipeline reproduces the table across the parameter range") {
    std::ifstream in(TEST_DATA_DIR "/helix_pair_fixtures.json");
    REQUIRE(in.good());
    const nlohmann::json table = nlohmann::json::parse(in);

    Grid grid;
    grid.t_start = 0.0;
    grid.t_end = 6.283185307179586;
    grid.samples = 50;

    for (const nlohmann::json& row : table.at("fixtures")) {
        const double a = row.at("a").get<double>();
        const double b = row.at("b").get<double>();
        const double lambda = row.at("lambda").get<double>();
        INFO("a = " << a << ", b = " << b << ", lambda = " << lambda);

        const CurveSpec base = CurveSpec::circular_helix(a, b);
        const BertrandPair pair = validate_pair(base, lambda, grid);
        check_close(pair.mu, row.at("mu").get<double>(), 1e-10);
        check_close(pair.cos_theta, row.at("cos_theta").get<double>(), 1e-10);
        check_close(pair.sin_theta, row.at("sin_theta").get<double>(), 1e-10);
        CHECK(pair.normal_sign == row.at("normal_sign").get<int>());

        const FrenetFrame frame = frenet_apparatus(eval_jet(base, 0.37, 8));
        check_close(partner_speed(frame.tau.value(), pair),
                    row.at("speed_beta").get<double>() / row.at("speed").get<double>(), 1e-10);

        const ClassificationReport report = classify(base, lambda, grid);
        if (row.at("a1").is_null()) {
            // lambda*kappa = 1: the closed curvature form is 0/0 and the
            // mean-curvature coefficient has no value.
            CHECK(report.full.verdict == Verdict::Degenerate);
        } else {
            const PartnerCurvatures pc = partner_curvatures_closed_form(
                frame.kappa.value(), frame.tau.value(), lambda, pair.angles());
            check_close(pc.kappa, row.at("kappa_beta").get<double>(), 1e-9);
            check_close(pc.tau, row.at("tau_beta").get<double>(), 1e-9);
            CHECK(report.full.verdict == Verdict::OneTypeHarmonic);
            REQUIRE(report.full.harmonic_constant.has_value());
            check_close(*report.full.harmonic_constant,
                        row.at("harmonic_constant_full").get<double>(), 1e-9);
            check_close(*report.normal.harmonic_constant,
                        row.at("harmonic_constant_normal").get<double>(), 1e-9);
            check_close(report.scale, std::abs(row.at("a1").get<double>()), 1e-9);
        }
    }
}

TEST_CASE("degenerate fixtures are refused") {
    CHECK(code_of([] { helix_pair_fixture(0.0, 1.0, 0.5); }) == errc::degenerate_fixture);
    CHECK(code_of([] { helix_pair_fixture(-1.0, 1.0, 0.5); }) == errc::degenerate_fixture);
    CHECK(code_of([] { helix_pair_fixture(1.0, 0.0, 0.5); }) == errc::degenerate_fixture);
    CHECK(code_of([] { helix_pair_fixture(1.0, 1e-12, 0.5); }) == errc::degenerate_fixture);
    CHECK(code_of([] { helix_pair_fixture(1.0, 1.0, 0.0); }) == errc::degenerate_fixture);
    // lambda = a puts the partner on the axis with zero curvature radius.
    CHECK(code_of([] { helix_pair_fixture(1.0, 1.0, 1.0); }) == errc::degenerate_fixture);
}
