#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvetk/bertrand.hpp"
#include "curvetk/framefield.hpp"

namespace curvetk {

enum class Verdict { Biharmonic, OneTypeHarmonic, Neither, Degenerate };

const char* verdict_name(Verdict verdict);

// Raw left-hand sides of the harmonicity conditions at one sample.
// full:   { (3lk - s^2) k',
//           (lk - s^2)(1-c)^2 (k^2 + t^2) - l k'' s^2,
//           s^2 t' - l k t' - 2 l k' t }
// normal: { 3 l k k' - s^2 k',
//           (lk - s^2)(1-c)^2 k^2 - l k'' s^2 }
// The Laplacian components are these over mu(1+cos) (T and B rows) and
// mu sin^3 (N row); vanishing conditions mean a vanishing Laplacian.
struct ConditionSample {
    double t = 0.0;
    std::array<double, 3> full{};
    std::array<double, 2> normal{};
};

// Per-sample Laplacians of the partner mean curvature, each computed two
// ways: through the frame calculus and through the closed-form components.
// Both routes must agree (hard error otherwise); both are reported.
struct LaplacianSample {
    double t = 0.0;
    Vec3 h = Vec3::Zero();              // H_b in the base frame: (0, a1, 0)
    Vec3 lap_full = Vec3::Zero();
    Vec3 lap_full_closed = Vec3::Zero();
    Vec3 lap_normal = Vec3::Zero();
    Vec3 lap_normal_closed = Vec3::Zero();
};

struct RouteResult {
    Verdict verdict = Verdict::Degenerate;
    std::optional<double> harmonic_constant;  // present only for OneTypeHarmonic
    double fit_constant = 0.0;                // least-squares ratio, always recorded
    double fit_residual = 0.0;                // max |Delta H - c H| over the grid
    double ratio_spread = 0.0;                // relative spread of per-sample ratios
    double max_laplacian_norm = 0.0;
};

struct ClassificationReport {
    RouteResult full;    // Laplacian of the full connection
    RouteResult normal;  // normal-connection Laplacian
    std::vector<ConditionSample> conditions;
    std::vector<LaplacianSample> laplacians;
    double scale = 0.0;  // max |H_b| over the grid, the relative yardstick
    std::optional<std::pair<double, double>> helix_constants;
    std::optional<BertrandPair> pair;  // absent when degeneracy precedes validation
    std::string degenerate_reason;     // set when both verdicts are Degenerate
};

// H = v k N for the given frame (v = speed; reduces to k N at unit speed).
FrameField mean_curvature(const FrenetFrame& frame);

// Partner mean curvature (0, a1, 0) with a1 = (lk - s^2)/(mu s), cross-
// checked against the speed route tau*sqrt(l^2+m^2) * kappa_b; any
// disagreement is a hard error (guard_violation). Throws
// degenerate_denominator when mu*sin is too small.
FrameField partner_mean_curvature(const BertrandPair& pair, const FrenetFrame& base,
                                  const Tolerances& tol = {});

std::array<double, 3> harmonicity_conditions(double lambda, const PairAngles& angles,
                                             const FrenetFrame& base);
std::array<double, 2> normal_harmonicity_conditions(double lambda, const PairAngles& angles,
                                                    const FrenetFrame& base);

// The constant-curvature closed forms of the Laplacian eigenvalues, with
// c = (cos-1)/sin: c^2 (k^2 + t^2) for the full connection and c^2 k^2
// for the normal one. Requires a helix-family base (not_helix_base
// otherwise); the canonical unit helix gives c^2 and c^2 / 2.
std::pair<double, double> helix_harmonic_constants(const BertrandPair& pair);

// Classification of a validated pair over its grid.
ClassificationReport classify_pair(const BertrandPair& pair, const Tolerances& tol = {});

// Convenience orchestration: validates, then classifies. Geometric
// degeneracies (no base frame, no partner frame, theta ~ 0, mu*sin ~ 0,
// vanishing torsion) yield a Degenerate report; a mu-spread failure is a
// genuine NotBertrand and is rethrown.
ClassificationReport classify(const CurveSpec& base, double lambda, const Grid& grid,
                              int jet_order = 6, const Tolerances& tol = {});

} // namespace curvetk
