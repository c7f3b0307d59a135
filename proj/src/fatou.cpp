#include "parab/fatou.hpp"

#include <cmath>

namespace parab {

namespace {

void certify(Petal& p) {
    // Shrink until f moves sampled boundary points of {Re u = C} inward with
    // margin; the Abel expansion makes the drift 1 + O(kappa/C).
    for (int attempt = 0;; ++attempt) {
        if (attempt > 12) throw ChartError("preliminary petal failed to certify");
        bool ok = true;
        for (int i = -40; i <= 40 && ok; ++i) {
            Cx w(p.C * 1.0001, p.C * (i * 0.5));
            Cx z = p.u_inverse(w);
            Cx w1 = p.u(p.map.eval(z));
            if (!(w1.real() > w.real() + 0.25)) ok = false;
        }
        if (ok) return;
        p.C *= 2.0;
    }
}

}  // namespace

Petal Petal::generic(const CubicMap& map, double threshold_factor) {
    if (std::abs(map.a()) == 0.0) throw ChartError("Petal::generic: a = 0");
    Petal p;
    p.map = map;
    p.symmetric = false;
    p.C = 1.0 / (2.0 * threshold_factor);
    certify(p);
    return p;
}

Petal Petal::symmetric_pair(const CubicMap& map, int sign, double threshold_factor) {
    if (std::abs(map.a()) != 0.0) throw ChartError("Petal::symmetric_pair: a != 0");
    Petal p;
    p.map = map;
    p.symmetric = true;
    p.sign = sign >= 0 ? +1 : -1;
    p.C = 1.0 / (2.0 * threshold_factor);
    certify(p);
    return p;
}

Cx Petal::u(Cx z) const {
    if (symmetric) return -1.0 / (2.0 * z * z);
    return -1.0 / (map.a() * z);
}

Cx Petal::u_inverse(Cx w) const {
    if (symmetric) {
        Cx z = std::sqrt(-1.0 / (2.0 * w));
        if ((sign > 0) != (z.imag() > 0.0)) z = -z;
        return z;
    }
    return -1.0 / (map.a() * w);
}

bool Petal::contains(Cx z) const {
    if (z == Cx(0.0)) return false;
    if (symmetric && (sign > 0) != (z.imag() > 0.0)) return false;
    return u(z).real() > C;
}

std::optional<int> Petal::entry(Cx z, int budget) const {
    const double esc = map.escape_radius();
    for (int n = 0; n < budget; ++n) {
        if (contains(z)) return n;
        if (std::abs(z) > esc) return std::nullopt;
        z = map.eval(z);
    }
    return std::nullopt;
}

FatouChart::FatouChart(const CubicMap& map, const Options& opt) : map_(map) {
    petal_ = Petal::generic(map, opt.petal_threshold_factor);
    kappa_ = Cx(1.0) - Cx(1.0) / (map.a() * map.a());
    trunc_radius_ = opt.trunc_radius;
    budget_ = opt.budget;
    bool found = false;
    for (Cx c : {map_.c0(), map_.c()}) {
        if (petal_.entry(map_.eval(c), budget_)) {
            c0_ = c;
            found = true;
            break;
        }
    }
    if (!found) throw ChartError("no critical orbit reaches the attracting petal");
    calibrate();
}

FatouChart FatouChart::symmetric_petal(const CubicMap& map, int sign, const Options& opt) {
    FatouChart ch;
    ch.map_ = map;
    ch.petal_ = Petal::symmetric_pair(map, sign, opt.petal_threshold_factor);
    ch.kappa_ = Cx(0.75);
    ch.trunc_radius_ = opt.trunc_radius;
    ch.budget_ = opt.budget;
    ch.c0_ = Cx(0.0, (sign >= 0 ? 1.0 : -1.0) / std::sqrt(3.0));
    ch.calibrate();
    return ch;
}

void FatouChart::calibrate() {
    v0_ = map_.eval(c0_);
    shift_ = Cx(0.0);
    auto base = eval(v0_);
    if (!base) throw ChartError("critical value does not reach the petal");
    shift_ = Cx(1.0) - base->value;
}

std::optional<FatouChart::ValueAndDeriv> FatouChart::eval(Cx z) const {
    const double esc = map_.escape_radius();
    Cx w = z;
    Cx chain(1.0);
    long steps = 0;
    bool entered = false;
    const long hard_cap = budget_ + long(trunc_radius_) + 64;
    while (steps < hard_cap) {
        if (!entered && petal_.contains(w)) entered = true;
        if (entered && std::abs(petal_.u(w)) > trunc_radius_) break;
        if (!entered && std::abs(w) > esc) return std::nullopt;
        if (!entered && steps >= budget_) return std::nullopt;
        chain *= map_.derivative(w);
        w = map_.eval(w);
        ++steps;
    }
    if (steps >= hard_cap) return std::nullopt;
    Cx uN = petal_.u(w);
    Cx value = uN - Cx(double(steps)) - kappa_ * std::log(uN) + shift_;
    Cx du = petal_.symmetric ? Cx(1.0) / (w * w * w) : Cx(1.0) / (map_.a() * w * w);
    Cx deriv = (Cx(1.0) - kappa_ / uN) * du * chain;
    return ValueAndDeriv{value, deriv};
}

Cx FatouChart::fatou_coord(Cx z) const {
    auto r = eval(z);
    if (!r) throw NotInPetalReachError();
    return r->value;
}

Cx FatouChart::extended_fatou(Cx z) const {
    auto r = eval(z);
    if (!r) throw NotInBasinError();
    return r->value;
}

bool FatouChart::petal_contains(Cx z) const {
    auto r = eval(z);
    if (!r) return false;
    return r->value.real() > 1.0 + 1e-12;
}

Cx FatouChart::solve(Cx target, Cx seed, double tol) const {
    Cx z = seed;
    for (int it = 0; it < 40; ++it) {
        auto r = eval(z);
        if (!r) throw NewtonDivergenceError("fatou solve: iterate left the basin");
        Cx diff = r->value - target;
        if (std::abs(diff) < tol) return z;
        Cx step = diff / r->deriv;
        // Damp wild steps; the basin is thin near the boundary cusps.
        double lim = 0.5 * std::abs(z) + 1e-3;
        if (std::abs(step) > lim) step *= lim / std::abs(step);
        z -= step;
    }
    auto r = eval(z);
    if (r && std::abs(r->value - target) < 10 * tol) return z;
    throw NewtonDivergenceError("fatou solve did not converge");
}

TracedCurve FatouChart::line_E0(int k, double t_lo, double t_hi, int n_samples) const {
    if (n_samples < 2) throw std::invalid_argument("line_E0: n_samples >= 2");
    if (!(t_hi > t_lo)) throw std::invalid_argument("line_E0: empty t range");
    if (k < 1)
        throw std::invalid_argument("line_E0: direct solve only for k >= 1 (pull back otherwise)");
    TracedCurve curve;
    curve.label = line_e0_label(k);
    // Seed with the exact point f^k(c0) at coordinate (k, 0), then march out
    // to both ends by Newton continuation.
    Cx seed = v0_;
    for (int j = 1; j < k; ++j) seed = map_.eval(seed);
    auto march = [&](double from, double to, Cx z0, std::vector<std::pair<double, Cx>>& out) {
        int steps = std::max(1, int(std::lround((std::abs(to - from) / (t_hi - t_lo)) * (n_samples - 1))));
        Cx z = z0;
        for (int i = 1; i <= steps; ++i) {
            double t = from + (to - from) * i / steps;
            z = solve(Cx(double(k), t), z, 1e-9);
            out.emplace_back(t, z);
        }
    };
    double mid = std::clamp(0.0, t_lo, t_hi);
    Cx zmid = (mid == 0.0) ? seed : solve(Cx(double(k), mid), seed, 1e-9);
    std::vector<std::pair<double, Cx>> up, down;
    if (t_hi > mid) march(mid, t_hi, zmid, up);
    if (t_lo < mid) march(mid, t_lo, zmid, down);
    for (auto it = down.rbegin(); it != down.rend(); ++it) curve.append(it->second, it->first);
    curve.append(zmid, mid);
    for (auto& p : up) curve.append(p.second, p.first);
    curve.check();
    return curve;
}

}  // namespace parab
