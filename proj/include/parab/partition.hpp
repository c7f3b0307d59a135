#pragma once

// The itinerary machinery on and around the immediate basin boundary: the
// graph S0 = E0(1) u R(0) u {0}, its pull-back S1 through the critical point,
// the Xi0/Xi1 side oracle, the itinerary map Theta (conjugating f on dB to
// angle doubling), dyadic boundary points, the U_n dichotomy diagnostic,
// wakes, and the Jordan-curve certificate.

#include "parab/angles.hpp"
#include "parab/boettcher.hpp"
#include "parab/curve.hpp"
#include "parab/fatou.hpp"
#include "parab/geometry.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace parab {

enum class Side { Xi0, Xi1, OnGraph };

struct PartitionOptions {
    double e0_t_max = 40.0;  // E0(1) traced over [-T, T]
    int e0_samples = 1600;   // polyline resolution of E0(1)
    RayOptions ray;          // for R(0) and the eta-ray of S1
    double graph_tube = 1e-9;
    double far_radius = 1e5;  // parity anchor / asymptotic ray extension
    double zero_tol = 1e-13;  // orbit "hits 0" threshold
    PartitionOptions() { ray.v_low = 1e-6; }
};

struct Itinerary {
    std::vector<int> digits;
    bool exact = false;
    std::optional<RationalAngle> value;  // set when exact
    double approx = 0.0;                 // Sum digits[k] 2^{-(k+1)}
    int graph_hit_step = -1;             // >= 0: orbit met the graph off 0
};

struct BoundaryChart {
    int depth = 0;
    std::vector<Cx> samples;  // samples[j] at angle j / 2^depth
    int fallback_picks = 0;   // preimage selections that needed the prediction tiebreak

    Cx at(const RationalAngle& t) const;
};

class PartitionGraph {
public:
    PartitionGraph(const FatouChart& chart, const PartitionOptions& opt = PartitionOptions());

    const CubicMap& map() const { return map_; }
    const FatouChart& chart() const { return *chart_; }
    Cx beta() const { return beta_; }
    const RationalAngle& eta() const { return eta_; }

    Side side(Cx z) const;
    double graph_distance(Cx z) const;

    const TracedCurve& e0_line() const { return e0_; }
    const TracedCurve& ray0() const { return ray0_; }
    const std::vector<TracedCurve>& s1_arcs() const { return s1_arcs_; }
    const TracedCurve& ray_eta() const { return ray_eta_; }

    Itinerary theta_of(Cx z, int n_digits) const;

    Cx boundary_point(const RationalAngle& t) const;
    BoundaryChart boundary_chart(int depth) const;

private:
    CubicMap map_{Cx(0.0)};
    const FatouChart* chart_ = nullptr;
    PartitionOptions opt_;
    TracedCurve e0_, ray0_, ray_eta_;
    std::vector<TracedCurve> s1_arcs_;  // four pulled strands of E0(0)
    Cx beta_{};
    RationalAngle eta_;
    std::vector<Cx> spine_;  // simple arc infinity -> 0 -> c0 -> beta -> infinity
    SegmentGrid spine_grid_;
    SegmentGrid graph_grid_;  // S1 u R(0) for the exclusion tube
    int xi0_parity_ = 0;      // crossing parity of Xi0 relative to the far anchor

    void fill_chart_level(BoundaryChart& chart, int d) const;
};

struct UnDiagnostic {
    enum class Verdict { XIsPoint, XNontrivial, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::vector<double> diameters;  // diam(U_n window on dB), n = 0..n_max
    LandingResult half_ray_landing;
    bool landing_checked = false;
};

UnDiagnostic u_n_diagnostic(const PartitionGraph& partition, int n_max);

struct WakeInfo {
    Itinerary angle;
    std::optional<std::pair<RationalAngle, RationalAngle>> bounding_rays;
};

// Theta(z) plus, for exactly periodic or dyadic values, the external-ray pair
// bounding the wake (degenerate pair when a single ray lands).
WakeInfo wake_of(const PartitionGraph& partition, Cx z, int n_digits);

struct JordanCertificate {
    int depth = 0;
    double equivariance_max_err = 0.0;
    double min_gap = 0.0;
    std::vector<double> max_gap_by_depth;  // index d-1: max consecutive gap at depth d
    bool cyclic_order_ok = false;
    int fallback_picks = 0;
    bool pass = false;
    std::string failure;
};

JordanCertificate jordan_certificate(const PartitionGraph& partition, int depth);

}  // namespace parab
