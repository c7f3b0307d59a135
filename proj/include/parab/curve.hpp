#pragma once

// TracedCurve: an oriented polyline of complex points with a per-point real
// parameter (potential or Fatou ordinate) and a label identifying which ray,
// equipotential, line or access it stands for.
//
// Export format (bit-exact round trip):
//   CURVE <label> npoints=<n>
//   <param> <re> <im>          (n lines, 17 significant digits)

#include "parab/angles.hpp"
#include "parab/geometry.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace parab {

struct TracedCurve {
    std::string label;
    std::vector<Cx> points;
    std::vector<double> params;

    void append(Cx z, double param);
    size_t size() const { return points.size(); }

    // Validates the structural invariants (>= 2 points, consecutive distinct).
    void check() const;
};

std::string ray_label(const RationalAngle& angle);
std::string equipotential_label(double level);
std::string line_e0_label(int k);
std::string access_label(int k, int sign, int leg);
std::string boundary_label(int depth);

void write_curve(std::ostream& os, const TracedCurve& c);
TracedCurve read_curve(std::istream& is);

std::string format_double(double v);  // 17 significant digits

}  // namespace parab
