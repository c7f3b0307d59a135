#pragma once

// Orbit classification for the cubic family and the Assumption-1 gate: only
// one critical point in the parabolic basin, none escaping, no critical orbit
// through the fixed point.

#include "parab/cubic.hpp"
#include "parab/fatou.hpp"

#include <string>
#include <vector>

namespace parab {

enum class OrbitKind { ConvergesToParabolic, EscapesToInfinity, OtherBounded, HitsZeroExactly };

struct OrbitClass {
    OrbitKind kind = OrbitKind::OtherBounded;
    int witness_iterations = 0;
};

std::string to_string(OrbitKind k);

// Petal membership certifies basin membership; |z| < 1e-13 before petal entry
// counts as hitting the fixed point; budget exhaustion folds into
// OtherBounded with witness_iterations = budget.
OrbitClass classify_orbit(const CubicMap& map, const Petal& petal, Cx z, int budget);

enum class Assumption1Status { Satisfied, Violated, Inconclusive };

struct Assumption1Result {
    Assumption1Status status = Assumption1Status::Inconclusive;
    std::string reason;
    Cx c0{}, c{};  // designated when Satisfied
    OrbitClass orbit_c0, orbit_c;
};

Assumption1Result check_assumption1(const CubicMap& map, int budget);

}  // namespace parab
