#include "parab/orbits.hpp"

#include <cmath>

namespace parab {

std::string to_string(OrbitKind k) {
    switch (k) {
        case OrbitKind::ConvergesToParabolic: return "ConvergesToParabolic";
        case OrbitKind::EscapesToInfinity: return "EscapesToInfinity";
        case OrbitKind::OtherBounded: return "OtherBounded";
        default: return "HitsZeroExactly";
    }
}

OrbitClass classify_orbit(const CubicMap& map, const Petal& petal, Cx z, int budget) {
    const double esc = map.escape_radius();
    for (int n = 0; n < budget; ++n) {
        if (std::abs(z) < 1e-13) return {OrbitKind::HitsZeroExactly, n};
        if (petal.contains(z)) return {OrbitKind::ConvergesToParabolic, n};
        if (std::abs(z) > esc) return {OrbitKind::EscapesToInfinity, n};
        z = map.eval(z);
    }
    return {OrbitKind::OtherBounded, budget};
}

Assumption1Result check_assumption1(const CubicMap& map, int budget) {
    Assumption1Result res;
    if (map.a() == Cx(0.0)) {
        res.status = Assumption1Status::Violated;
        res.reason = "a=0: z^3+z symmetric case";
        return res;
    }
    Petal petal = Petal::generic(map);
    OrbitClass k0 = classify_orbit(map, petal, map.c0(), budget);
    OrbitClass k1 = classify_orbit(map, petal, map.c(), budget);
    res.orbit_c0 = k0;
    res.orbit_c = k1;
    auto is = [](const OrbitClass& o, OrbitKind k) { return o.kind == k; };
    if (is(k0, OrbitKind::HitsZeroExactly) || is(k1, OrbitKind::HitsZeroExactly)) {
        res.status = Assumption1Status::Violated;
        res.reason = "critical orbit hits the fixed point";
        return res;
    }
    if (is(k0, OrbitKind::EscapesToInfinity) || is(k1, OrbitKind::EscapesToInfinity)) {
        res.status = Assumption1Status::Violated;
        res.reason = "critical point in basin of infinity";
        return res;
    }
    bool b0 = is(k0, OrbitKind::ConvergesToParabolic);
    bool b1 = is(k1, OrbitKind::ConvergesToParabolic);
    if (b0 && b1) {
        res.status = Assumption1Status::Violated;
        res.reason = "both critical points in the parabolic basin";
        return res;
    }
    if (!b0 && !b1) {
        res.status = Assumption1Status::Inconclusive;
        res.reason = "no critical orbit certified in the basin within budget";
        return res;
    }
    res.status = Assumption1Status::Satisfied;
    res.c0 = b0 ? map.c0() : map.c();
    res.c = b0 ? map.c() : map.c0();
    if (!b0) std::swap(res.orbit_c0, res.orbit_c);
    res.reason = "exactly one critical orbit converges to the parabolic point";
    return res;
}

}  // namespace parab
