#pragma once

// The cubic family f_a(z) = z + a z^2 + z^3 with a parabolic fixed point of
// multiplier 1 at the origin.

#include <array>
#include <complex>

namespace parab {

using Cx = std::complex<double>;

class CubicMap {
public:
    explicit CubicMap(Cx a);

    Cx a() const { return a_; }
    // Critical points, roots of 3z^2 + 2az + 1; c0 is the designated one
    // (attracted to 0 once classification has succeeded).
    Cx c0() const { return c0_; }
    Cx c() const { return c_; }
    double escape_radius() const { return escape_radius_; }

    Cx eval(Cx z) const { return z * (Cx(1.0) + z * (a_ + z)); }
    Cx derivative(Cx z) const { return Cx(1.0) + z * (2.0 * a_ + 3.0 * z); }
    Cx second_derivative(Cx z) const { return 2.0 * a_ + 6.0 * z; }

    Cx iterate(Cx z, int n) const;

    // Swaps the designation of the two critical points.
    CubicMap designated(Cx basin_critical) const;

    // The three solutions of f(x) = w (closed form plus Newton polish).
    std::array<Cx, 3> preimages(Cx w) const;

private:
    Cx a_;
    Cx c0_, c_;
    double escape_radius_;
};

// Roots of the monic cubic x^3 + c2 x^2 + c1 x + c0 (Cardano with branch
// sorting, polished by Newton).
std::array<Cx, 3> solve_monic_cubic(Cx c2, Cx c1, Cx c0);

}  // namespace parab
