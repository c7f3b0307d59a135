#include "parab/curve.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace parab {

void TracedCurve::append(Cx z, double param) {
    if (!points.empty() && points.back() == z) return;
    points.push_back(z);
    params.push_back(param);
}

void TracedCurve::check() const {
    if (points.size() < 2) throw std::runtime_error("TracedCurve: fewer than 2 points");
    if (points.size() != params.size())
        throw std::runtime_error("TracedCurve: points/params size mismatch");
    for (size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i] == points[i + 1])
            throw std::runtime_error("TracedCurve: repeated consecutive point");
}

std::string ray_label(const RationalAngle& angle) { return "ExternalRay(" + angle.str() + ")"; }

std::string equipotential_label(double level) {
    return "EquipotentialInf(" + format_double(level) + ")";
}

std::string line_e0_label(int k) { return "LineE0(" + std::to_string(k) + ")"; }

std::string access_label(int k, int sign, int leg) {
    return "Access(" + std::to_string(k) + "," + (sign >= 0 ? std::string("+") : std::string("-")) +
           "," + std::to_string(leg) + ")";
}

std::string boundary_label(int depth) { return "BOUNDARY depth=" + std::to_string(depth); }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_curve(std::ostream& os, const TracedCurve& c) {
    os << "CURVE " << c.label << " npoints=" << c.points.size() << "\n";
    for (size_t i = 0; i < c.points.size(); ++i)
        os << format_double(c.params[i]) << " " << format_double(c.points[i].real()) << " "
           << format_double(c.points[i].imag()) << "\n";
}

TracedCurve read_curve(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("read_curve: missing header");
    if (header.rfind("CURVE ", 0) != 0) throw std::runtime_error("read_curve: bad header");
    auto npos = header.rfind(" npoints=");
    if (npos == std::string::npos) throw std::runtime_error("read_curve: missing npoints");
    TracedCurve c;
    c.label = header.substr(6, npos - 6);
    size_t n = std::stoull(header.substr(npos + 9));
    c.points.reserve(n);
    c.params.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw std::runtime_error("read_curve: truncated body");
        std::istringstream ls(line);
        double p, re, im;
        if (!(ls >> p >> re >> im)) throw std::runtime_error("read_curve: bad point line");
        c.points.emplace_back(re, im);
        c.params.push_back(p);
    }
    return c;
}

}  // namespace parab
