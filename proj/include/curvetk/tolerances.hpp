#pragma once

namespace curvetk {

// Numeric guards shared across the pipeline. eps_div protects every jet
// division and square root; the others gate geometric constructions.
inline constexpr double eps_div = 1e-12;

struct Tolerances {
    double eps_flat = 1e-9;   // relative flatness threshold for refusing a Frenet frame
    double tol_pair = 1e-8;   // relative constancy tolerance for mu and theta over a grid
    double eps_theta = 1e-6;  // |sin theta| below this makes the pair angle degenerate
    double eps_class = 1e-7;  // relative threshold for classification verdicts
};

} // namespace curvetk
