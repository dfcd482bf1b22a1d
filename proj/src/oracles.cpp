#include "curvetk/oracles.hpp"

#include <cmath>
#include <string>

#include "curvetk/tolerances.hpp"

namespace curvetk {

namespace {

double default_step(int k) { return k == 3 ? 1e-3 : 1e-4; }

template <typename Value, typename Fn>
Value stencil(const Fn& f, double t, int k, double h) {
    switch (k) {
    case 0:
        return f(t);
    case 1:
        return (f(t - 2 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2 * h)) / (12.0 * h);
    case 2:
        return (-f(t - 2 * h) + 16.0 * f(t - h) - 30.0 * f(t) + 16.0 * f(t + h) - f(t + 2 * h)) /
               (12.0 * h * h);
    case 3:
        return (f(t + 2 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2 * h)) / (2.0 * h * h * h);
    default:
        raise(errc::domain_error,
              "finite-difference stencils cover derivative orders 0 through 3, got " +
                  std::to_string(k));
    }
}

void check(bool ok, const char* what) {
    if (!ok)
        raise(errc::guard_violation, std::string("helix fixture self-check failed: ") + what);
}

bool close(double x, double y) {
    return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
}

} // namespace

double fd_derivative(const std::function<double(double)>& f, double t, int k) {
    return stencil<double>(f, t, k, default_step(k));
}

double fd_derivative(const std::function<double(double)>& f, double t, int k, double h) {
    return stencil<double>(f, t, k, h);
}

Eigen::Vector3d fd_derivative(const std::function<Eigen::Vector3d(double)>& f, double t, int k) {
    return stencil<Eigen::Vector3d>(f, t, k, default_step(k));
}

Eigen::Vector3d fd_derivative(const std::function<Eigen::Vector3d(double)>& f, double t, int k,
                              double h) {
    return stencil<Eigen::Vector3d>(f, t, k, h);
}

FdFrame fd_frenet(const std::function<Eigen::Vector3d(double)>& position, double t,
                  double eps_flat) {
    const Eigen::Vector3d d1 = fd_derivative(position, t, 1);
    const Eigen::Vector3d d2 = fd_derivative(position, t, 2);
    const Eigen::Vector3d d3 = fd_derivative(position, t, 3);

    const double speed_sq = d1.squaredNorm();
    if (speed_sq <= eps_div)
        raise(errc::singular_speed, "finite-difference velocity vanishes at the sample point");
    const double speed = std::sqrt(speed_sq);

    const Eigen::Vector3d c = d1.cross(d2);
    const double cn = c.norm();
    if (cn <= eps_flat * speed * speed * speed)
        raise(errc::frame_undefined,
              "finite-difference acceleration is collinear with the velocity");

    FdFrame out;
    out.speed = speed;
    out.T = d1 / speed;
    out.B = c / cn;
    out.N = out.B.cross(out.T);
    out.kappa = cn / (speed * speed * speed);
    out.tau = c.dot(d3) / (cn * cn);
    return out;
}

Eigen::Vector3d HelixPairFixture::base_point(double t) const {
    return {a * std::cos(t), a * std::sin(t), b * t};
}

Eigen::Vector3d HelixPairFixture::base_tangent(double t) const {
    return Eigen::Vector3d(-a * std::sin(t), a * std::cos(t), b) / speed;
}

Eigen::Vector3d HelixPairFixture::base_normal(double t) const {
    return {-std::cos(t), -std::sin(t), 0.0};
}

Eigen::Vector3d HelixPairFixture::base_binormal(double t) const {
    return Eigen::Vector3d(b * std::sin(t), -b * std::cos(t), a) / speed;
}

Eigen::Vector3d HelixPairFixture::partner_point(double t) const {
    return {(a - lambda) * std::cos(t), (a - lambda) * std::sin(t), b * t};
}

HelixPairFixture helix_pair_fixture(double a, double b, double lambda) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(lambda) || a <= 0.0)
        raise(errc::degenerate_fixture, "fixture needs finite parameters and a positive radius");
    if (std::abs(b) <= 1e-9)
        raise(errc::degenerate_fixture, "pitch near zero, the base curve is a circle");
    if (std::abs(lambda) <= 1e-9)
        raise(errc::degenerate_fixture, "offset near zero, the partner collapses onto the base");
    if (std::abs(a - lambda) <= 1e-9)
        raise(errc::degenerate_fixture, "offset lands on the axis, the partner is a line");

    HelixPairFixture fx;
    fx.a = a;
    fx.b = b;
    fx.lambda = lambda;

    const double w = a * a + b * b;
    fx.speed = std::sqrt(w);
    fx.kappa = a / w;
    fx.tau = b / w;
    fx.mu = (w - lambda * a) / b;

    const double r = a - lambda;
    const double wb = r * r + b * b;
    fx.speed_beta = std::sqrt(wb);
    fx.kappa_beta = r / wb;
    fx.tau_beta = b / wb;
    fx.normal_sign = r > 0.0 ? 1 : -1;

    fx.cos_theta = (a * r + b * b) / (fx.speed * fx.speed_beta);
    fx.sin_theta = lambda * b / (fx.speed * fx.speed_beta);

    check(close(lambda * fx.kappa + fx.mu * fx.tau, 1.0), "lambda kappa + mu tau = 1");
    check(close(fx.cos_theta * fx.cos_theta + fx.sin_theta * fx.sin_theta, 1.0),
          "cos^2 + sin^2 = 1");
    check(close(fx.speed_beta,
                fx.speed * std::abs(fx.tau) * std::hypot(lambda, fx.mu)),
          "partner speed identity");

    const double sin_sq = fx.sin_theta * fx.sin_theta;
    const double one_minus = 1.0 - lambda * fx.kappa;
    if (std::abs(lambda * one_minus) > eps_div)
        check(close(fx.kappa_beta, (lambda * fx.kappa - sin_sq) / (lambda * one_minus)),
              "partner curvature, pair form");
    check(close(fx.tau_beta, sin_sq / (lambda * lambda * fx.tau)), "partner torsion, pair form");

    if (std::abs(fx.mu * fx.sin_theta) > eps_div) {
        fx.a1 = (lambda * fx.kappa - sin_sq) / (fx.mu * fx.sin_theta);
        check(close(*fx.a1, std::abs(fx.tau) * std::hypot(lambda, fx.mu) * fx.kappa_beta),
              "mean-curvature coefficient vs scaled partner curvature");
    }

    const double c = (fx.cos_theta - 1.0) / fx.sin_theta;
    fx.harmonic_constant_full = c * c * (fx.kappa * fx.kappa + fx.tau * fx.tau);
    fx.harmonic_constant_normal = c * c * fx.kappa * fx.kappa;
    return fx;
}

} // namespace curvetk
