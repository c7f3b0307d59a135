#include "parab/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace parab {

std::string to_string(CycleKind k) {
    switch (k) {
        case CycleKind::attracting: return "attracting";
        case CycleKind::repelling: return "repelling";
        case CycleKind::parabolic: return "parabolic";
        default: return "irrationally_indifferent";
    }
}

namespace {

bool cx_less(Cx u, Cx v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
}

// Newton on g(z) = f^k(z) - z.  The parabolic point is a multiple root, so
// convergence there is only linear; require the step itself to die out.
bool newton_fk(const CubicMap& map, int k, Cx& z) {
    for (int it = 0; it < 220; ++it) {
        Cx w = z;
        Cx chain(1.0);
        for (int j = 0; j < k; ++j) {
            chain *= map.derivative(w);
            w = map.eval(w);
            if (std::abs(w) > 1e12) return false;
        }
        Cx g = w - z;
        Cx gp = chain - Cx(1.0);
        // Near 0 the root is multiple and gp cancels; 0 is an exact fixed
        // point of every f^k, so snap the cluster.
        if (std::abs(z) < 1e-6 && std::abs(g) < std::abs(z) * std::abs(z)) {
            z = Cx(0.0);
            return true;
        }
        if (std::abs(gp) < 1e-14) {
            if (std::abs(g) < 1e-13 * (1.0 + std::abs(z))) return true;
            z -= g;
            continue;
        }
        Cx step = g / gp;
        if (std::abs(step) > 1.0) step /= std::abs(step);
        z -= step;
        if (std::abs(step) < 1e-12 * (1.0 + std::abs(z)) &&
            std::abs(g) < 1e-11 * (1.0 + std::abs(z)))
            return true;
    }
    Cx w = map.iterate(z, k);
    return std::abs(w - z) < 1e-11 * (1.0 + std::abs(z));
}

// Rational rotation detector: |p/q - x| < tol with modest q.
bool looks_rational(double x, int max_q, double tol) {
    x -= std::floor(x);
    for (int q = 1; q <= max_q; ++q) {
        double p = std::round(x * q);
        if (std::abs(x - p / q) < tol) return true;
    }
    return false;
}

CycleKind classify_multiplier(Cx lambda) {
    double m = std::abs(lambda);
    if (m < 1.0 - 1e-8) return CycleKind::attracting;
    if (m > 1.0 + 1e-8) return CycleKind::repelling;
    double theta = std::arg(lambda) / (2.0 * std::numbers::pi);
    if (looks_rational(theta, 64, 1e-9)) return CycleKind::parabolic;
    return CycleKind::irrationally_indifferent;
}

}  // namespace

CycleSearchResult find_cycles(const CubicMap& map, int max_period) {
    GridSpec g;
    g.n = 64;
    g.half_width = map.escape_radius();
    return find_cycles(map, max_period, g);
}

CycleSearchResult find_cycles(const CubicMap& map, int max_period, const GridSpec& grid) {
    if (max_period > 6) throw std::invalid_argument("find_cycles: max_period <= 6 (3^k roots)");
    CycleSearchResult out;
    std::vector<Cx> fixed_points;  // of f^k across all k, deduplicated
    const double dedupe = 1e-8;

    for (int k = 1; k <= max_period; ++k) {
        std::vector<Cx> roots;
        auto consider = [&](Cx seed) {
            Cx z = seed;
            if (!newton_fk(map, k, z)) return;
            for (Cx r : roots)
                if (std::abs(r - z) < dedupe) return;
            roots.push_back(z);
        };
        consider(Cx(0.0));
        consider(-map.a());
        for (int iy = 0; iy < grid.n; ++iy)
            for (int ix = 0; ix < grid.n; ++ix) {
                double x = -grid.half_width + 2.0 * grid.half_width * (ix + 0.5) / grid.n;
                double y = -grid.half_width + 2.0 * grid.half_width * (iy + 0.5) / grid.n;
                consider(Cx(x, y));
            }
        out.expected_vs_found.emplace_back(long(std::pow(3.0, k)), long(roots.size()));

        for (Cx z : roots) {
            // exact period of the cycle through z
            std::vector<Cx> cyc;
            Cx w = z;
            int p = 0;
            for (int j = 0; j < k; ++j) {
                cyc.push_back(w);
                w = map.eval(w);
                ++p;
                if (std::abs(w - z) < dedupe) break;
            }
            if (std::abs(w - z) > dedupe) continue;  // not closed at this k (numeric drift)
            if (int(cyc.size()) < p) continue;
            // canonical representative
            auto mn = std::min_element(cyc.begin(), cyc.end(), cx_less);
            std::rotate(cyc.begin(), mn, cyc.end());
            bool dup = false;
            for (const Cycle& c : out.cycles)
                if (c.period == p && std::abs(c.points[0] - cyc[0]) < dedupe) dup = true;
            if (dup) continue;
            Cycle c;
            c.points = cyc;
            c.period = p;
            Cx mult(1.0);
            for (Cx q : cyc) mult *= map.derivative(q);
            c.multiplier = mult;
            c.kind = classify_multiplier(mult);
            out.cycles.push_back(std::move(c));
        }
    }
    std::sort(out.cycles.begin(), out.cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.period != b.period) return a.period < b.period;
        return cx_less(a.points[0], b.points[0]);
    });
    return out;
}

CycleRenormReport classify_cycle_for_renormalization(const CubicMap& map, const Cycle& cycle,
                                                     int brjuno_terms) {
    if (cycle.kind == CycleKind::repelling)
        throw std::invalid_argument("classify_cycle_for_renormalization: cycle must be non-repelling");
    for (Cx p : cycle.points)
        if (std::abs(p) < 1e-12)
            throw std::invalid_argument("classify_cycle_for_renormalization: cycle through 0");
    CycleRenormReport rep;
    rep.cycle = cycle;
    (void)map;
    switch (cycle.kind) {
        case CycleKind::attracting:
        case CycleKind::parabolic:
            rep.renormalizable_expected = true;
            rep.conclusion = cycle.kind == CycleKind::attracting
                                 ? "attracting cycle: renormalization expected"
                                 : "parabolic cycle: renormalization expected, no Brjuno analysis";
            break;
        case CycleKind::irrationally_indifferent: {
            double theta = std::arg(cycle.multiplier) / (2.0 * std::numbers::pi);
            theta -= std::floor(theta);
            rep.rotation_number = theta;
            rep.brjuno = brjuno_partial(theta, brjuno_terms);
            rep.has_brjuno = true;
            rep.renormalizable_expected = true;
            rep.conclusion = rep.brjuno.verdict == BrjunoVerdict::likely_brjuno
                                 ? "irrationally indifferent: likely Brjuno, linearizable expected"
                                 : (rep.brjuno.verdict == BrjunoVerdict::likely_not_brjuno
                                        ? "irrationally indifferent: likely not Brjuno"
                                        : "irrationally indifferent: Brjuno test undecided");
            break;
        }
        default:
            break;
    }
    return rep;
}

}  // namespace parab
