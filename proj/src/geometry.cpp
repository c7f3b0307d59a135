#include "parab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace parab {

std::optional<Cx> segment_intersection(const Segment& s, const Segment& t, double eps) {
    Cx r = s.b - s.a;
    Cx d = t.b - t.a;
    double denom = cross(r, d);
    Cx qp = t.a - s.a;
    if (denom == 0.0) {
        // Parallel: report a touching overlap only if collinear within eps.
        if (eps > 0.0 && point_segment_distance(t.a, s) <= eps) return t.a;
        return std::nullopt;
    }
    double u = cross(qp, d) / denom;
    double v = cross(qp, r) / denom;
    double lo = -eps, hi = 1.0 + eps;
    if (u < lo || u > hi || v < lo || v > hi) return std::nullopt;
    return s.a + u * r;
}

double point_segment_distance(Cx p, const Segment& s) {
    Cx d = s.b - s.a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - s.a);
    double t = std::clamp(((p - s.a).real() * d.real() + (p - s.a).imag() * d.imag()) / len2,
                          0.0, 1.0);
    return std::abs(p - (s.a + t * d));
}

double segment_segment_distance(const Segment& s, const Segment& t) {
    if (segment_intersection(s, t)) return 0.0;
    return std::min(std::min(point_segment_distance(s.a, t), point_segment_distance(s.b, t)),
                    std::min(point_segment_distance(t.a, s), point_segment_distance(t.b, s)));
}

namespace {

// Crossing of probe (a,b) with one segment; flags near-degenerate geometry.
void probe_segment(Cx a, Cx b, const Segment& s, double eps, CrossingCount& out) {
    Cx r = b - a;
    Cx d = s.b - s.a;
    double denom = cross(r, d);
    Cx qp = s.a - a;
    if (denom == 0.0) {
        if (point_segment_distance(s.a, {a, b}) < eps || point_segment_distance(s.b, {a, b}) < eps)
            out.degenerate = true;
        return;
    }
    double u = cross(qp, d) / denom;
    double v = cross(qp, r) / denom;
    double margin_u = eps / (std::abs(r) + 1e-300);
    double margin_v = eps / (std::abs(d) + 1e-300);
    bool inside = u > margin_u && u < 1.0 - margin_u && v > margin_v && v < 1.0 - margin_v;
    bool near_edge = (u > -margin_u && u < 1.0 + margin_u && v > -margin_v && v < 1.0 + margin_v) && !inside;
    if (inside) ++out.crossings;
    else if (near_edge) out.degenerate = true;
}

}  // namespace

CrossingCount count_crossings(Cx a, Cx b, const std::vector<Cx>& polyline, double degenerate_eps) {
    CrossingCount out;
    for (size_t i = 0; i + 1 < polyline.size(); ++i)
        probe_segment(a, b, {polyline[i], polyline[i + 1]}, degenerate_eps, out);
    return out;
}

double polyline_length(const std::vector<Cx>& pts) {
    double s = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) s += std::abs(pts[i + 1] - pts[i]);
    return s;
}

double point_polyline_distance(Cx p, const std::vector<Cx>& pts) {
    double best = 1e300;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        best = std::min(best, point_segment_distance(p, {pts[i], pts[i + 1]}));
    if (pts.size() == 1) best = std::abs(p - pts[0]);
    return best;
}

double polyline_diameter(const std::vector<Cx>& pts) {
    double best = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, std::abs(pts[i] - pts[j]));
    return best;
}

void SegmentGrid::build(const std::vector<std::vector<Cx>>& polylines, double cell_hint) {
    segs_.clear();
    cells_.clear();
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    double total_len = 0;
    for (const auto& pl : polylines) {
        for (size_t i = 0; i + 1 < pl.size(); ++i) {
            segs_.push_back({pl[i], pl[i + 1]});
            total_len += std::abs(pl[i + 1] - pl[i]);
        }
        for (Cx p : pl) {
            xmin = std::min(xmin, p.real());
            xmax = std::max(xmax, p.real());
            ymin = std::min(ymin, p.imag());
            ymax = std::max(ymax, p.imag());
        }
    }
    if (segs_.empty()) {
        nx_ = ny_ = 0;
        return;
    }
    double w = std::max(xmax - xmin, 1e-12), h = std::max(ymax - ymin, 1e-12);
    cell_ = cell_hint > 0 ? cell_hint
                          : std::max(total_len / std::max<size_t>(segs_.size(), 1), 1e-9);
    nx_ = std::min(1024, std::max(1, int(w / cell_) + 1));
    ny_ = std::min(1024, std::max(1, int(h / cell_) + 1));
    cell_ = std::max(w / nx_, h / ny_);
    x0_ = xmin;
    y0_ = ymin;
    cells_.assign(size_t(nx_) * ny_, {});
    for (size_t i = 0; i < segs_.size(); ++i) {
        Cx lo(std::min(segs_[i].a.real(), segs_[i].b.real()),
              std::min(segs_[i].a.imag(), segs_[i].b.imag()));
        Cx hi(std::max(segs_[i].a.real(), segs_[i].b.real()),
              std::max(segs_[i].a.imag(), segs_[i].b.imag()));
        int ix0 = std::clamp(int((lo.real() - x0_) / cell_), 0, nx_ - 1);
        int ix1 = std::clamp(int((hi.real() - x0_) / cell_), 0, nx_ - 1);
        int iy0 = std::clamp(int((lo.imag() - y0_) / cell_), 0, ny_ - 1);
        int iy1 = std::clamp(int((hi.imag() - y0_) / cell_), 0, ny_ - 1);
        for (int iy = iy0; iy <= iy1; ++iy)
            for (int ix = ix0; ix <= ix1; ++ix)
                cells_[size_t(iy) * nx_ + ix].push_back(int(i));
    }
}

void SegmentGrid::cells_overlapping(Cx lo, Cx hi, std::vector<int>& out) const {
    out.clear();
    if (nx_ == 0) return;
    int ix0 = std::clamp(int((lo.real() - x0_) / cell_), 0, nx_ - 1);
    int ix1 = std::clamp(int((hi.real() - x0_) / cell_), 0, nx_ - 1);
    int iy0 = std::clamp(int((lo.imag() - y0_) / cell_), 0, ny_ - 1);
    int iy1 = std::clamp(int((hi.imag() - y0_) / cell_), 0, ny_ - 1);
    for (int iy = iy0; iy <= iy1; ++iy)
        for (int ix = ix0; ix <= ix1; ++ix)
            for (int s : cells_[size_t(iy) * nx_ + ix]) out.push_back(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

double SegmentGrid::distance(Cx p, double cutoff) const {
    if (segs_.empty()) return 1e300;
    double best = cutoff;
    // Expand rings of cells until the ring cannot contain anything closer.
    for (int ring = 0;; ++ring) {
        double reach = ring * cell_;
        if (reach - cell_ > best) break;
        std::vector<int> idx;
        Cx lo(p.real() - reach - cell_, p.imag() - reach - cell_);
        Cx hi(p.real() + reach + cell_, p.imag() + reach + cell_);
        cells_overlapping(lo, hi, idx);
        for (int s : idx) best = std::min(best, point_segment_distance(p, segs_[s]));
        if (!idx.empty() && best <= reach) break;
        if (reach > best + 2 * cell_) break;
        if (ring > nx_ + ny_ + 2) break;
    }
    return best;
}

CrossingCount SegmentGrid::count_crossings(Cx a, Cx b, double degenerate_eps) const {
    CrossingCount out;
    Cx lo(std::min(a.real(), b.real()) - degenerate_eps, std::min(a.imag(), b.imag()) - degenerate_eps);
    Cx hi(std::max(a.real(), b.real()) + degenerate_eps, std::max(a.imag(), b.imag()) + degenerate_eps);
    std::vector<int> idx;
    cells_overlapping(lo, hi, idx);
    for (int s : idx) probe_segment(a, b, segs_[s], degenerate_eps, out);
    return out;
}

void SegmentGrid::candidates(const Segment& s, double slack, std::vector<int>& out) const {
    Cx lo(std::min(s.a.real(), s.b.real()) - slack, std::min(s.a.imag(), s.b.imag()) - slack);
    Cx hi(std::max(s.a.real(), s.b.real()) + slack, std::max(s.a.imag(), s.b.imag()) + slack);
    cells_overlapping(lo, hi, out);
}

bool SegmentGrid::any_segment_within(const Segment& s, double dist) const {
    Cx lo(std::min(s.a.real(), s.b.real()) - dist, std::min(s.a.imag(), s.b.imag()) - dist);
    Cx hi(std::max(s.a.real(), s.b.real()) + dist, std::max(s.a.imag(), s.b.imag()) + dist);
    std::vector<int> idx;
    cells_overlapping(lo, hi, idx);
    for (int i : idx)
        if (segment_segment_distance(s, segs_[i]) <= dist) return true;
    return false;
}

double min_pairwise_distance(const std::vector<Cx>& pts) {
    size_t n = pts.size();
    if (n < 2) return 1e300;
    // Sort by x and sweep; adequate at desk scale.
    std::vector<Cx> s = pts;
    std::sort(s.begin(), s.end(), [](Cx a, Cx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    double best = 1e300;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double dx = s[j].real() - s[i].real();
            if (dx * dx > best * best && dx > 0) break;
            best = std::min(best, std::abs(s[j] - s[i]));
        }
    }
    return best;
}

double min_cross_distance(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    double best = 1e300;
    for (Cx p : a)
        for (Cx q : b) best = std::min(best, std::abs(p - q));
    return best;
}

bool closed_polygon_self_intersects(const std::vector<Cx>& pts, double eps) {
    size_t n = pts.size();
    if (n < 4) return false;
    std::vector<std::vector<Cx>> loop(1, pts);
    loop[0].push_back(pts[0]);
    SegmentGrid grid;
    grid.build(loop);
    const auto& segs = grid.segments();
    std::vector<int> cand;
    for (size_t i = 0; i < segs.size(); ++i) {
        grid.candidates(segs[i], eps, cand);
        for (int j : cand) {
            if (size_t(j) <= i) continue;
            bool adjacent = (size_t(j) == i + 1) || (i == 0 && size_t(j) == segs.size() - 1);
            if (adjacent) continue;
            if (segment_intersection(segs[i], segs[size_t(j)], eps)) return true;
        }
    }
    return false;
}

}  // namespace parab
