#pragma once

// Parabolic Fatou coordinate phi_0 on an attracting petal of f(z)=z+az^2+z^3,
// normalized by phi_0(f(c0)) = 1, its extension to the whole basin, and the
// lines E_0(k).
//
// Coordinate at 0: u(z) = -1/(az), giving u o f = u + 1 + kappa/u + O(u^-2)
// with kappa = 1 - 1/a^2.  The control case a = 0 (f = z + z^3) has two
// petals along +-i; there u(z) = -1/(2 z^2) and kappa = 3/4.

#include "parab/cubic.hpp"
#include "parab/curve.hpp"
#include "parab/errors.hpp"

#include <optional>

namespace parab {

// Preliminary attracting petal {Re u > C}: the disk tangent at 0 in the
// attracting direction -1/a of radius 1/(2C|a|), certified forward-invariant
// by sampling (C is doubled until the drift margin holds).
struct Petal {
    CubicMap map{Cx(0.0)};
    bool symmetric = false;  // a = 0 two-petal case
    int sign = +1;           // which symmetric petal (+i / -i)
    double C = 10.0 / 3.0;

    static Petal generic(const CubicMap& map, double threshold_factor = 0.15);
    static Petal symmetric_pair(const CubicMap& map, int sign, double threshold_factor = 0.15);

    Cx u(Cx z) const;
    Cx u_inverse(Cx w) const;
    bool contains(Cx z) const;

    // First orbit index entering the petal, or nullopt (escape or budget).
    std::optional<int> entry(Cx z, int budget) const;
};

struct FatouChartOptions {
    double petal_threshold_factor = 0.15;
    double trunc_radius = 1e4;  // iterate until |u| exceeds this
    int budget = 200000;        // orbit steps allowed to reach the petal
};

class FatouChart {
public:
    using Options = FatouChartOptions;

    // Generic chart for a != 0; c0 is designated as the critical point whose
    // orbit reaches the petal.
    FatouChart(const CubicMap& map, const Options& opt = Options());
    // Symmetric-case chart for a = 0: the petal along +i (sign > 0) or -i.
    static FatouChart symmetric_petal(const CubicMap& map, int sign, const Options& opt = Options());

    const CubicMap& map() const { return map_; }
    const Petal& petal() const { return petal_; }
    Cx kappa() const { return kappa_; }
    Cx normalization_shift() const { return shift_; }
    Cx designated_critical() const { return c0_; }
    Cx critical_value() const { return v0_; }

    Cx fatou_coord(Cx z) const;     // throws NotInPetalReachError
    Cx extended_fatou(Cx z) const;  // throws NotInBasinError

    struct ValueAndDeriv {
        Cx value;
        Cx deriv;
    };
    // Value and complex derivative of phi_0 in one orbit pass; nullopt when
    // the orbit never reaches the petal.
    std::optional<ValueAndDeriv> eval(Cx z) const;

    bool petal_contains(Cx z) const;  // Re phi_0 > 1, strictly

    // Newton solve extended_fatou(z) = target from a seed.
    Cx solve(Cx target, Cx seed, double tol = 1e-9) const;

    // Level line {Re = k} for k >= 1 by Newton continuation (levels k <= 0
    // are pull-backs; see the partition module).
    TracedCurve line_E0(int k, double t_lo, double t_hi, int n_samples) const;

private:
    FatouChart() = default;
    void calibrate();

    CubicMap map_{Cx(0.0)};
    Petal petal_;
    Cx c0_{}, v0_{};
    Cx kappa_{};
    Cx shift_{};
    double trunc_radius_ = 1e4;
    int budget_ = 200000;
};

}  // namespace parab
