// Acceptance gate: eight pass/fail checks covering the toolkit's headline
// guarantees at their stated tolerances. Each criterion prints exactly one
// line; the process exits nonzero if any line says FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "curvetk/classify.hpp"
#include "curvetk/odes.hpp"
#include "curvetk/oracles.hpp"

using namespace curvetk;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kTwoPi = 6.28318530717958647692;

int g_failures = 0;

void report(int index, const char* what, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double rel(double got, double want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// Property-suite flags accumulated while the criteria run (criterion 8
// asserts them over every sample every run touched).
bool g_orthonormal = true;
double g_worst_ortho = 0.0;
bool g_angles_normalized = true;
bool g_pair_identity = true;

void track_orthonormality(const FrenetFrame& f) {
    const double worst = std::max(
        {std::abs(f.T.norm() - 1.0), std::abs(f.N.norm() - 1.0), std::abs(f.B.norm() - 1.0),
         std::abs(f.T.dot(f.N)), std::abs(f.T.dot(f.B)), std::abs(f.N.dot(f.B)),
         (f.T.cross(f.N) - f.B).norm()});
    g_worst_ortho = std::max(g_worst_ortho, worst);
    if (worst > 1e-10) g_orthonormal = false;
}

Grid acceptance_grid() {
    Grid grid;
    grid.t_start = 0.0;
    grid.t_end = kTwoPi;
    grid.samples = 50;
    return grid;
}

const CurveSpec& unit_helix() {
    static const CurveSpec spec = CurveSpec::circular_helix(kInvSqrt2, kInvSqrt2);
    return spec;
}

char buf_storage[256];

std::string fmt(const char* format, double a, double b = 0.0) {
    std::snprintf(buf_storage, sizeof buf_storage, format, a, b);
    return buf_storage;
}

void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xacce901);
    std::uniform_real_distribution<double> ts(-10.0, 10.0);

    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const FrenetFrame f = frenet_apparatus(eval_jet(unit_helix(), ts(rng), 6));
        track_orthonormality(f);
        worst = std::max({worst, rel(f.kappa.value(), kInvSqrt2), rel(f.tau.value(), kInvSqrt2),
                          rel(f.speed.value(), 1.0)});
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(1, "helix curvature/torsion/speed at 100 random parameters",
           worst <= 1e-9 && elapsed < 1.0,
           fmt("worst rel err %.3g, %.3f s", worst, elapsed));
}

void criterion_2() {
    const double lambda = 0.25 * kSqrt2;
    const BertrandPair pair = validate_pair(unit_helix(), lambda, acceptance_grid());

    double worst_curv = 0.0, worst_speed = 0.0;
    for (double t : acceptance_grid().points()) {
        const VecJet base_jet = eval_jet(unit_helix(), t, 8);
        const FrenetFrame base = frenet_apparatus(base_jet);
        const FrenetFrame direct = frenet_apparatus(partner_position_jet(base_jet, lambda));
        track_orthonormality(base);
        track_orthonormality(direct);

        const PartnerCurvatures closed = partner_curvatures_closed_form(
            base.kappa.value(), base.tau.value(), lambda, pair.angles());
        worst_curv = std::max({worst_curv, rel(closed.kappa, direct.kappa.value()),
                               rel(closed.tau, direct.tau.value())});

        const double theta_hat = partner_speed(base.tau.value(), pair);
        worst_speed = std::max(
            worst_speed, rel(theta_hat * base.speed.value(), direct.speed.value()));

        if (std::abs(pair.cos_theta * pair.cos_theta + pair.sin_theta * pair.sin_theta - 1.0) >
            1e-12)
            g_angles_normalized = false;
        if (std::abs(pair.lambda * base.kappa.value() + pair.mu * base.tau.value() - 1.0) >
            1e-10)
            g_pair_identity = false;
    }

    const bool frozen_ok =
        std::abs(partner_speed(kInvSqrt2, pair) - 0.7905694) < 5e-8 &&
        rel(partner_curvatures_closed_form(kInvSqrt2, kInvSqrt2, lambda, pair.angles()).kappa,
            0.5656854) < 1e-7 &&
        rel(partner_curvatures_closed_form(kInvSqrt2, kInvSqrt2, lambda, pair.angles()).tau,
            1.1313708) < 1e-7;
    report(2, "partner closed-form curvature/torsion/speed equivalence",
           worst_curv <= 1e-8 && worst_speed <= 1e-10 && frozen_ok,
           fmt("worst curvature rel %.3g, speed rel %.3g", worst_curv, worst_speed));
}

void criterion_3() {
    const ClassificationReport rep = classify(unit_helix(), 0.25 * kSqrt2, acceptance_grid());
    const double expected =
        rep.pair ? [&] {
            const double c = (rep.pair->cos_theta - 1.0) / rep.pair->sin_theta;
            return c * c;
        }()
                 : 0.0;
    const bool ok = rep.full.verdict == Verdict::OneTypeHarmonic &&
                    rep.full.harmonic_constant.has_value() &&
                    std::abs(*rep.full.harmonic_constant - expected) <= 1e-9 &&
                    std::abs(expected - 0.0263340) < 5e-8;
    report(3, "full-connection verdict OneTypeHarmonic with closed-form constant", ok,
           fmt("fitted %.10g", rep.full.fit_constant));
}

void criterion_4() {
    const ClassificationReport rep = classify(unit_helix(), 0.25 * kSqrt2, acceptance_grid());
    const double expected =
        rep.pair ? [&] {
            const double c = (rep.pair->cos_theta - 1.0) / rep.pair->sin_theta;
            return 0.5 * c * c;
        }()
                 : 0.0;
    const bool ok = rep.normal.verdict == Verdict::OneTypeHarmonic &&
                    rep.normal.harmonic_constant.has_value() &&
                    std::abs(*rep.normal.harmonic_constant - expected) <= 1e-9 &&
                    std::abs(expected - 0.0131670) < 5e-8;
    report(4, "normal-connection verdict OneTypeHarmonic with half constant", ok,
           fmt("fitted %.10g", rep.normal.fit_constant));
}

void criterion_5() {
    // Frame-calculus Laplacian vs the componentwise expansion, all three
    // components, across several valid constant-curvature pairs.
    double worst = 0.0;
    bool all_present = true;
    for (double lambda : {0.25 * kSqrt2, -kSqrt2, 0.2, 3.0}) {
        const ClassificationReport rep = classify(unit_helix(), lambda, acceptance_grid());
        if (rep.laplacians.empty()) {
            all_present = false;
            continue;
        }
        for (const LaplacianSample& s : rep.laplacians) {
            for (int i = 0; i < 3; ++i) {
                const double scale = std::max(
                    {1e-300, std::abs(s.lap_full[i]), std::abs(s.lap_full_closed[i])});
                if (std::abs(s.lap_full[i]) + std::abs(s.lap_full_closed[i]) == 0.0) continue;
                worst = std::max(worst,
                                 std::abs(s.lap_full[i] - s.lap_full_closed[i]) / scale);
            }
        }
    }
    report(5, "Laplacian frame-calculus route equals componentwise expansion",
           all_present && worst <= 1e-9, fmt("worst rel gap %.3g", worst));
}

void criterion_6() {
    std::mt19937_64 rng(0xacce906);
    std::uniform_real_distribution<double> helix_t(-8.0, 8.0);
    std::uniform_real_distribution<double> cubic_t(0.1, 2.0);

    double worst_tangent = 0.0;
    const CurveSpec cubic = CurveSpec::twisted_cubic();
    for (int i = 0; i < 100; ++i) {
        const FrenetFrame fh = frenet_apparatus(eval_jet(unit_helix(), helix_t(rng), 8));
        worst_tangent = std::max(worst_tangent, tangent_ode_residual(fh));
        const FrenetFrame fc = frenet_apparatus(eval_jet(cubic, cubic_t(rng), 8));
        worst_tangent = std::max(worst_tangent, tangent_ode_residual(fc));
    }

    double worst_pair = 0.0;
    for (double lambda : {0.25 * kSqrt2, -kSqrt2, 0.5}) {
        const BertrandPair pair = validate_pair(unit_helix(), lambda, acceptance_grid());
        for (double t : acceptance_grid().points()) {
            const FrenetFrame base = frenet_apparatus(eval_jet(unit_helix(), t, 8));
            const DerivationCoefficients co =
                derivation_coefficients(base, pair.lambda, pair.mu, pair.angles());
            worst_pair = std::max(worst_pair, binormal_ode_residual(base, co, pair.angles()));
            const auto nr = normal_ode_residuals(co);
            worst_pair = std::max({worst_pair, nr[0], nr[1]});
        }
    }

    // Reduced constant-curvature equations: the binormal ODE collapses to
    // D^3 B + C^2 D B = 0 and the normal one to D*D*X + (C k)^2 X = 0.
    const BertrandPair pair = validate_pair(unit_helix(), 0.25 * kSqrt2, acceptance_grid());
    const FrenetFrame base = frenet_apparatus(eval_jet(unit_helix(), 0.7, 8));
    const DerivationCoefficients co =
        derivation_coefficients(base, pair.lambda, pair.mu, pair.angles());
    const double C = (1.0 - pair.cos_theta) / pair.sin_theta;
    const OdeCoefficients stmt = binormal_ode_coefficients(base, pair.angles());
    const double a1sq = co.alpha1.value() * co.alpha1.value();
    const bool reduced_ok = std::abs(stmt.lambda2) <= 1e-12 &&
                            std::abs(stmt.lambda1 - C * C) <= 1e-12 &&
                            std::abs(stmt.lambda0) <= 1e-12 &&
                            std::abs(a1sq - 0.5 * C * C) <= 1e-12;

    report(6, "frame ODE residuals and reduced-equation coefficients",
           worst_tangent <= 1e-6 && worst_pair <= 1e-9 && reduced_ok,
           fmt("tangent worst %.3g, pair worst %.3g", worst_tangent, worst_pair));
}

void criterion_7() {
    bool cubic_refused = true;
    for (double lambda : {0.5, -1.0, 2.0}) {
        Grid grid;
        grid.t_start = 0.2;
        grid.t_end = 1.2;
        grid.samples = 25;
        try {
            classify(CurveSpec::twisted_cubic(), lambda, grid);
            cubic_refused = false;
        } catch (const Error& e) {
            if (e.code() != errc::not_bertrand || e.cause()) cubic_refused = false;
        }
    }

    const ClassificationReport line = classify(unit_helix(), kInvSqrt2, acceptance_grid());
    const bool line_degenerate = line.full.verdict == Verdict::Degenerate &&
                                 line.full.verdict != Verdict::Biharmonic &&
                                 line.normal.verdict == Verdict::Degenerate;

    report(7, "negative controls refuse the cubic and the axis offset",
           cubic_refused && line_degenerate, "");
}

void criterion_8() {
    std::mt19937_64 rng(0xacce908);
    std::uniform_real_distribution<double> ts(0.3, 2.0);

    const std::vector<CurveSpec> catalog = {
        unit_helix(),
        CurveSpec::general_helix(2.0, 1.0),
        CurveSpec::circle(1.5),
        CurveSpec::twisted_cubic(),
        CurveSpec::line(Vec3(1.0, -2.0, 0.5), Vec3(0.3, 1.0, -0.7)),
        CurveSpec::expression("exp(t/4) * cos(2*t)", "sin(t)^3 - t", "sqrt(t + 5)"),
    };

    double worst = 0.0;
    for (const CurveSpec& spec : catalog) {
        const auto position = [&](double s) { return eval_jet(spec, s, 0).value(); };
        for (int i = 0; i < 10; ++i) {
            const double t = ts(rng);
            const VecJet jet = eval_jet(spec, t, 6);
            for (int k = 1; k <= 3; ++k) {
                const Vec3 fd = fd_derivative(position, t, k);
                for (int axis = 0; axis < 3; ++axis) {
                    const double scale =
                        std::max({1.0, std::abs(jet.derivative(k)[axis]), std::abs(fd[axis])});
                    worst = std::max(worst, std::abs(jet.derivative(k)[axis] - fd[axis]) / scale);
                }
            }
        }
    }

    const bool properties = g_orthonormal && g_angles_normalized && g_pair_identity;
    report(8, "jet derivatives match finite differences; property suite holds",
           worst <= 1e-5 && properties,
           fmt("worst fd rel %.3g, worst frame defect %.3g", worst, g_worst_ortho));
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
    } catch (const Error& e) {
        std::printf("FAIL  unexpected error [%s]: %s\n", errc_name(e.code()), e.what());
        ++g_failures;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  (%d/8 criteria, %.2f s total)\n",
                g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                8 - g_failures, elapsed);
    if (elapsed >= 10.0) {
        std::printf("FAIL  runtime budget exceeded: %.2f s >= 10 s\n", elapsed);
        return 1;
    }
    return g_failures == 0 ? 0 : 1;
}
