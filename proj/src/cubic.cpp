#include "parab/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace parab {

namespace {

// Lexicographic key so critical-point ordering is reproducible.
bool cx_less(Cx u, Cx v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
}

}  // namespace

CubicMap::CubicMap(Cx a) : a_(a) {
    Cx disc = std::sqrt(a * a - Cx(3.0));
    Cx r1 = (-a + disc) / 3.0;
    Cx r2 = (-a - disc) / 3.0;
    if (cx_less(r2, r1)) std::swap(r1, r2);
    c0_ = r1;
    c_ = r2;
    escape_radius_ = std::abs(a) + 2.0;
}

Cx CubicMap::iterate(Cx z, int n) const {
    for (int i = 0; i < n; ++i) z = eval(z);
    return z;
}

CubicMap CubicMap::designated(Cx basin_critical) const {
    CubicMap m = *this;
    if (std::abs(basin_critical - c_) < std::abs(basin_critical - c0_))
        std::swap(m.c0_, m.c_);
    return m;
}

std::array<Cx, 3> CubicMap::preimages(Cx w) const {
    // f(x) = w  <=>  x^3 + a x^2 + x - w = 0
    auto roots = solve_monic_cubic(a_, Cx(1.0), -w);
    for (Cx& r : roots) {
        for (int it = 0; it < 2; ++it) {
            Cx d = derivative(r);
            if (std::abs(d) < 1e-300) break;
            r -= (eval(r) - w) / d;
        }
    }
    return roots;
}

std::array<Cx, 3> solve_monic_cubic(Cx c2, Cx c1, Cx c0) {
    // Depress: x = t - c2/3,  t^3 + P t + Q = 0
    Cx s = c2 / 3.0;
    Cx P = c1 - c2 * s;
    Cx Q = c0 - c1 * s + 2.0 * s * s * s;

    std::array<Cx, 3> roots;
    double scaleP = std::abs(P), scaleQ = std::abs(Q);
    if (scaleP == 0.0 && scaleQ == 0.0) {
        roots = {-s, -s, -s};
        return roots;
    }

    Cx D = std::sqrt(Q * Q / 4.0 + P * P * P / 27.0);
    // Pick the sign giving the larger |u^3| to avoid cancellation.
    Cx u3a = -Q / 2.0 + D;
    Cx u3b = -Q / 2.0 - D;
    Cx u3 = (std::abs(u3a) >= std::abs(u3b)) ? u3a : u3b;
    Cx u = std::pow(u3, 1.0 / 3.0);
    const Cx omega(-0.5, std::sqrt(3.0) / 2.0);
    for (int k = 0; k < 3; ++k) {
        Cx uk = u;
        if (k == 1) uk *= omega;
        if (k == 2) uk *= std::conj(omega);
        Cx t = (std::abs(uk) < 1e-300) ? Cx(0.0) : uk - P / (3.0 * uk);
        roots[k] = t - s;
    }

    // Newton polish on the original cubic.
    auto f = [&](Cx x) { return ((x + c2) * x + c1) * x + c0; };
    auto fp = [&](Cx x) { return (3.0 * x + 2.0 * c2) * x + c1; };
    for (Cx& r : roots) {
        for (int it = 0; it < 3; ++it) {
            Cx d = fp(r);
            if (std::abs(d) < 1e-300) break;
            Cx step = f(r) / d;
            r -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(r))) break;
        }
    }
    return roots;
}

}  // namespace parab
