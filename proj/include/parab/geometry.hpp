#pragma once

// Planar polyline utilities: segment intersection, crossing counts for
// point-location, spatial hashing, distances.

#include <complex>
#include <optional>
#include <vector>

namespace parab {

using Cx = std::complex<double>;

inline double cross(Cx u, Cx v) { return u.real() * v.imag() - u.imag() * v.real(); }

struct Segment {
    Cx a, b;
};

// Proper or touching intersection of two closed segments; returns the
// intersection point of the supporting lines when the segments overlap a
// point within eps-slack.
std::optional<Cx> segment_intersection(const Segment& s, const Segment& t, double eps = 0.0);

double point_segment_distance(Cx p, const Segment& s);
double segment_segment_distance(const Segment& s, const Segment& t);

// Number of crossings of segment (a,b) with the polyline; near-degenerate
// hits (running through a vertex or tangentially) are reported so callers can
// retry with a jittered probe.
struct CrossingCount {
    int crossings = 0;
    bool degenerate = false;
};
CrossingCount count_crossings(Cx a, Cx b, const std::vector<Cx>& polyline,
                              double degenerate_eps = 1e-12);

double polyline_length(const std::vector<Cx>& pts);
double point_polyline_distance(Cx p, const std::vector<Cx>& pts);
double polyline_diameter(const std::vector<Cx>& pts);

// Grid over segments of many polylines for neighborhood queries.
class SegmentGrid {
public:
    SegmentGrid() = default;
    void build(const std::vector<std::vector<Cx>>& polylines, double cell_hint = 0.0);

    double distance(Cx p, double cutoff = 1e300) const;
    CrossingCount count_crossings(Cx a, Cx b, double degenerate_eps = 1e-12) const;
    bool any_segment_within(const Segment& s, double dist) const;
    void candidates(const Segment& s, double slack, std::vector<int>& out) const;

    const std::vector<Segment>& segments() const { return segs_; }

private:
    std::vector<Segment> segs_;
    double x0_ = 0, y0_ = 0, cell_ = 1;
    int nx_ = 0, ny_ = 0;
    std::vector<std::vector<int>> cells_;

    void cells_overlapping(Cx lo, Cx hi, std::vector<int>& out) const;
};

// Minimal pairwise distance between two point sets (brute force below a size
// threshold, grid otherwise).
double min_pairwise_distance(const std::vector<Cx>& pts);
double min_cross_distance(const std::vector<Cx>& a, const std::vector<Cx>& b);

// True when the closed polygon through pts (cyclic) has a self-intersection
// beyond shared consecutive endpoints.
bool closed_polygon_self_intersects(const std::vector<Cx>& pts, double eps = 0.0);

}  // namespace parab
