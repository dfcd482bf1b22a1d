#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvetk/expr.hpp"
#include "curvetk/frenet.hpp"
#include "curvetk/vecjet.hpp"

namespace curvetk {

// Catalog families plus free-form expression curves.
//   CircularHelix / GeneralHelix: (a cos t, a sin t, b t), params {a, b}, a > 0.
//     Two names, one parametrization; the circular-helix name marks the
//     constant-curvature bases the closed-form harmonic constants apply to.
//   Circle: (r cos t, r sin t, 0), params {r}, r > 0.
//   TwistedCubic: (t, t^2, t^3), no params.
//   Line: point + t * direction, params {px,py,pz,dx,dy,dz} or {dx,dy,dz}.
//   Expression: three component expressions in t.
enum class CurveFamily { CircularHelix, GeneralHelix, Circle, TwistedCubic, Line, Expression };

const char* family_name(CurveFamily family);

struct CurveSpec {
    CurveFamily family = CurveFamily::CircularHelix;
    std::vector<double> params;
    std::array<ExprNode, 3> components{};

    static CurveSpec circular_helix(double a, double b);
    static CurveSpec general_helix(double a, double b);
    static CurveSpec circle(double r);
    static CurveSpec twisted_cubic();
    static CurveSpec line(const Vec3& point, const Vec3& direction);
    static CurveSpec expression(const std::string& x, const std::string& y, const std::string& z);

    bool is_helix() const {
        return family == CurveFamily::CircularHelix || family == CurveFamily::GeneralHelix;
    }
};

// Arity and positivity checks; throws config_error with a precise message.
void validate_spec(const CurveSpec& spec);

// Position jet at t, exact to the requested order.
VecJet eval_jet(const CurveSpec& spec, double t, int order);

// Uniform sampling grid, endpoints included.
struct Grid {
    double t_start = 0.0;
    double t_end = 1.0;
    int samples = 50;

    std::vector<double> points() const;  // throws config_error on bad bounds/counts
};

// Closed-form Frenet data where the catalog has it (helices and circles;
// constant curvature and torsion, so all derivative scalars vanish).
// Empty for the twisted cubic, lines, and expression curves.
std::optional<FrenetFrame> catalog_oracle(const CurveSpec& spec, double t);

} // namespace curvetk
