#pragma once

// Escape-side coordinates: Green's function, the Boettcher coordinate at
// infinity (phi o f = phi^3), equipotentials, external rays traced by
// potential-step inverse iteration, and landing points.

#include "parab/angles.hpp"
#include "parab/cubic.hpp"
#include "parab/curve.hpp"
#include "parab/errors.hpp"

#include <vector>

namespace parab {

struct GreenResult {
    double value = 0.0;  // 0 for points that did not escape within budget
    bool escaped = false;
    int iterations = 0;
};

GreenResult green(const CubicMap& map, Cx z, int budget = 4096);

// phi_infty via the telescoping product z * prod (f(z_n)/z_n^3)^{1/3^{n+1}}
// with principal-branch factors.  Throws DeepPointError when green(z) < 1e-6
// or a factor leaves the right half-plane (branch tracking unreliable).
Cx boettcher_value(const CubicMap& map, Cx z);

struct RayOptions {
    double v_high = 8.0;
    double v_low = 1e-4;
    int steps_per_division = 8;
    std::vector<double> extra_potentials;  // e.g. exactly 1.0 for graph junctions
};

TracedCurve trace_ray(const CubicMap& map, const RationalAngle& angle, const RayOptions& opt);

enum class LandingMode { geometric, cesaro };

struct LandingResult {
    Cx point{0.0, 0.0};
    bool converged = false;
    double residual = 0.0;
    LandingMode mode = LandingMode::geometric;
};

struct LandingOptions {
    double v_high = 8.0;
    double v_floor = 1e-18;  // documented depth ceiling
    int steps_per_division = 8;
    double geometric_tol = 1e-6;
    double cesaro_tol = 1e-4;
    int cesaro_window = 64;
};

// Continues the ray to decreasing potentials.  Geometric convergence: tail
// window diameter < geometric_tol.  Otherwise the parabolic tail (~C/n per
// division) is resolved by an averaged asymptotic-tail fit; cesaro mode
// converges when the fitted estimates agree within cesaro_tol.
LandingResult landing_point(const CubicMap& map, const RationalAngle& angle,
                            const LandingOptions& opt = {});

TracedCurve equipotential(const CubicMap& map, double v, int n_samples);

}  // namespace parab
