#pragma once

// Periodic cycles of the cubic by Newton iteration on f^k(z) - z seeded on a
// grid, with multiplier-based classification; feeds the renormalization /
// Brjuno reporting.

#include "parab/brjuno.hpp"
#include "parab/cubic.hpp"

#include <string>
#include <vector>

namespace parab {

enum class CycleKind { attracting, repelling, parabolic, irrationally_indifferent };

struct Cycle {
    std::vector<Cx> points;  // lexicographically smallest point first
    int period = 1;
    Cx multiplier{};
    CycleKind kind = CycleKind::repelling;
};

std::string to_string(CycleKind k);

struct GridSpec {
    int n = 64;          // n x n seeds
    double half_width;   // square |Re|,|Im| <= half_width (default escape radius)
};

struct CycleSearchResult {
    std::vector<Cycle> cycles;
    // completeness bookkeeping per period k: expected 3^k fixed points of f^k
    std::vector<std::pair<long, long>> expected_vs_found;
};

CycleSearchResult find_cycles(const CubicMap& map, int max_period);
CycleSearchResult find_cycles(const CubicMap& map, int max_period, const GridSpec& grid);

struct CycleRenormReport {
    Cycle cycle;
    std::string conclusion;  // renormalization-expected / brjuno analysis / parabolic
    bool renormalizable_expected = false;
    double rotation_number = 0.0;  // for |multiplier| ~ 1
    BrjunoReport brjuno;           // attached for irrationally indifferent cycles
    bool has_brjuno = false;
    std::string visit_note;
};

// Multiplier-based report for a non-repelling cycle away from 0: attracting
// and parabolic cycles are flagged renormalization-expected; irrationally
// indifferent ones get the Brjuno analysis of their rotation number.
CycleRenormReport classify_cycle_for_renormalization(const CubicMap& map, const Cycle& cycle,
                                                     int brjuno_terms = 40);

}  // namespace parab
