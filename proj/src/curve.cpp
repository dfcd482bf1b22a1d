#include "curvetk/curve.hpp"

#include <cmath>
#include <string>

namespace curvetk {

namespace {

std::string arity_message(const CurveSpec& spec, const char* expected) {
    return std::string(family_name(spec.family)) + " takes " + expected + ", got " +
           std::to_string(spec.params.size()) + " parameter(s)";
}

// Derivative cycles of a cos t and a sin t, applied per order modulo 4.
VecJet helix_jet(double a, double b, double t, int order) {
    const double c = std::cos(t), s = std::sin(t);
    const double xc[4] = {a * c, -a * s, -a * c, a * s};
    const double yc[4] = {a * s, a * c, -a * s, -a * c};
    std::vector<Vec3> coeff(order + 1, Vec3::Zero());
    coeff[0] = Vec3(xc[0], yc[0], b * t);
    for (int k = 1; k <= order; ++k) {
        coeff[k] = Vec3(xc[k % 4], yc[k % 4], k == 1 ? b : 0.0);
    }
    return VecJet::from_derivatives(std::move(coeff));
}

FrenetFrame helix_oracle(double a, double b, double t) {
    const double w = a * a + b * b;
    const double root = std::sqrt(w);
    const double c = std::cos(t), s = std::sin(t);
    FrenetFrame frame;
    frame.T = Vec3(-a * s, a * c, b) / root;
    frame.N = Vec3(-c, -s, 0.0);
    frame.B = frame.T.cross(frame.N);
    // Constant speed/curvature/torsion: order 4 leaves room for any
    // second-derivative query, every derivative coefficient is zero.
    frame.speed = Jet::constant(root, 4);
    frame.kappa = Jet::constant(a / w, 4);
    frame.tau = Jet::constant(b / w, 4);
    return frame;
}

} // namespace

const char* family_name(CurveFamily family) {
    switch (family) {
        case CurveFamily::CircularHelix: return "circular_helix";
        case CurveFamily::GeneralHelix: return "general_helix";
        case CurveFamily::Circle: return "circle";
        case CurveFamily::TwistedCubic: return "twisted_cubic";
        case CurveFamily::Line: return "line";
        case CurveFamily::Expression: return "expression";
    }
    return "unknown";
}

CurveSpec CurveSpec::circular_helix(double a, double b) {
    CurveSpec spec;
    spec.family = CurveFamily::CircularHelix;
    spec.params = {a, b};
    validate_spec(spec);
    return spec;
}

CurveSpec CurveSpec::general_helix(double a, double b) {
    CurveSpec spec;
    spec.family = CurveFamily::GeneralHelix;
    spec.params = {a, b};
    validate_spec(spec);
    return spec;
}

CurveSpec CurveSpec::circle(double r) {
    CurveSpec spec;
    spec.family = CurveFamily::Circle;
    spec.params = {r};
    validate_spec(spec);
    return spec;
}

CurveSpec CurveSpec::twisted_cubic() {
    CurveSpec spec;
    spec.family = CurveFamily::TwistedCubic;
    return spec;
}

CurveSpec CurveSpec::line(const Vec3& point, const Vec3& direction) {
    CurveSpec spec;
    spec.family = CurveFamily::Line;
    spec.params = {point.x(), point.y(), point.z(), direction.x(), direction.y(), direction.z()};
    validate_spec(spec);
    return spec;
}

CurveSpec CurveSpec::expression(const std::string& x, const std::string& y, const std::string& z) {
    CurveSpec spec;
    spec.family = CurveFamily::Expression;
    spec.components = {parse_expression(x), parse_expression(y), parse_expression(z)};
    return spec;
}

void validate_spec(const CurveSpec& spec) {
    switch (spec.family) {
        case CurveFamily::CircularHelix:
        case CurveFamily::GeneralHelix:
            if (spec.params.size() != 2)
                raise(errc::config_error, arity_message(spec, "radius a and pitch b"));
            if (spec.params[0] <= 0.0)
                raise(errc::config_error, "helix radius must be positive");
            return;
        case CurveFamily::Circle:
            if (spec.params.size() != 1)
                raise(errc::config_error, arity_message(spec, "radius r"));
            if (spec.params[0] <= 0.0)
                raise(errc::config_error, "circle radius must be positive");
            return;
        case CurveFamily::TwistedCubic:
            if (!spec.params.empty())
                raise(errc::config_error, arity_message(spec, "no parameters"));
            return;
        case CurveFamily::Line: {
            if (spec.params.size() != 6 && spec.params.size() != 3)
                raise(errc::config_error, arity_message(spec, "point + direction (6) or direction (3)"));
            const std::size_t d = spec.params.size() == 6 ? 3 : 0;
            const Vec3 dir(spec.params[d], spec.params[d + 1], spec.params[d + 2]);
            if (dir.norm() <= 0.0)
                raise(errc::config_error, "line direction must be nonzero");
            return;
        }
        case CurveFamily::Expression:
            return;
    }
}

VecJet eval_jet(const CurveSpec& spec, double t, int order) {
    if (order < 0)
        raise(errc::config_error, "jet order must be non-negative");
    validate_spec(spec);
    switch (spec.family) {
        case CurveFamily::CircularHelix:
        case CurveFamily::GeneralHelix:
            return helix_jet(spec.params[0], spec.params[1], t, order);
        case CurveFamily::Circle:
            return helix_jet(spec.params[0], 0.0, t, order);
        case CurveFamily::TwistedCubic: {
            std::vector<Vec3> coeff(order + 1, Vec3::Zero());
            coeff[0] = Vec3(t, t * t, t * t * t);
            if (order >= 1) coeff[1] = Vec3(1.0, 2.0 * t, 3.0 * t * t);
            if (order >= 2) coeff[2] = Vec3(0.0, 2.0, 6.0 * t);
            if (order >= 3) coeff[3] = Vec3(0.0, 0.0, 6.0);
            return VecJet::from_derivatives(std::move(coeff));
        }
        case CurveFamily::Line: {
            const std::size_t d = spec.params.size() == 6 ? 3 : 0;
            const Vec3 point = spec.params.size() == 6
                                   ? Vec3(spec.params[0], spec.params[1], spec.params[2])
                                   : Vec3::Zero();
            const Vec3 dir(spec.params[d], spec.params[d + 1], spec.params[d + 2]);
            std::vector<Vec3> coeff(order + 1, Vec3::Zero());
            coeff[0] = point + t * dir;
            if (order >= 1) coeff[1] = dir;
            return VecJet::from_derivatives(std::move(coeff));
        }
        case CurveFamily::Expression: {
            const Jet seed = Jet::variable(t, order);
            return VecJet::from_components(evaluate_jet(spec.components[0], seed),
                                           evaluate_jet(spec.components[1], seed),
                                           evaluate_jet(spec.components[2], seed));
        }
    }
    raise(errc::config_error, "unknown curve family");
}

std::vector<double> Grid::points() const {
    if (samples < 2)
        raise(errc::config_error, "grid needs at least 2 samples, got " + std::to_string(samples));
    if (!(t_start < t_end))
        raise(errc::config_error, "grid requires t_start < t_end");
    std::vector<double> ts(samples);
    const double h = (t_end - t_start) / (samples - 1);
    for (int i = 0; i < samples; ++i) ts[i] = t_start + h * i;
    ts.back() = t_end;
    return ts;
}

std::optional<FrenetFrame> catalog_oracle(const CurveSpec& spec, double t) {
    validate_spec(spec);
    switch (spec.family) {
        case CurveFamily::CircularHelix:
        case CurveFamily::GeneralHelix:
            return helix_oracle(spec.params[0], spec.params[1], t);
        case CurveFamily::Circle:
            return helix_oracle(spec.params[0], 0.0, t);
        default:
            return std::nullopt;
    }
}

} // namespace curvetk
