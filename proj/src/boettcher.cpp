#include "parab/boettcher.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <cstdio>

namespace parab {

namespace {

constexpr double TWO_PI = 2.0 * std::numbers::pi;

}  // namespace

GreenResult green(const CubicMap& map, Cx z, int budget) {
    GreenResult res;
    const double R = map.escape_radius();
    for (int n = 0; n < budget; ++n) {
        double az = std::abs(z);
        if (az > 1e30) {
            res.value = std::log(az) / std::pow(3.0, n);
            res.escaped = true;
            res.iterations = n;
            return res;
        }
        if (az > R) {
            // Escape certified; keep cubing until the tail correction is dust.
            int m = n;
            Cx w = z;
            while (std::abs(w) < 1e30 && m < n + 200) {
                w = map.eval(w);
                ++m;
            }
            res.value = std::log(std::abs(w)) / std::pow(3.0, m);
            res.escaped = true;
            res.iterations = n;
            return res;
        }
        z = map.eval(z);
    }
    res.value = 0.0;
    res.escaped = false;
    res.iterations = budget;
    return res;
}

Cx boettcher_value(const CubicMap& map, Cx z) {
    GreenResult g = green(map, z);
    if (!g.escaped || g.value < 1e-6)
        throw DeepPointError("boettcher_value: green(z) below 1e-6");
    Cx log_phi = std::log(z);
    Cx zn = z;
    double scale = 1.0 / 3.0;
    for (int n = 0; n < 400; ++n) {
        Cx w = Cx(1.0) + (map.a() + Cx(1.0) / zn) / zn;  // f(z)/z^3
        if (w.real() <= 0.0)
            throw DeepPointError("boettcher_value: product factor left the right half-plane");
        log_phi += scale * std::log(w);
        if (std::abs(w - Cx(1.0)) * scale < 1e-18) break;
        zn = map.eval(zn);
        if (std::abs(zn) > 1e100) break;
        scale /= 3.0;
    }
    return std::exp(log_phi);
}

namespace {

// log phi and d(log phi)/dz in one orbit pass; valid while every factor stays
// in the right half-plane.
struct LogPhi {
    Cx value;
    Cx deriv;
};

LogPhi log_phi_with_derivative(const CubicMap& map, Cx z) {
    Cx log_phi = std::log(z);
    Cx dlog = Cx(1.0) / z;
    Cx zn = z;
    Cx chain = Cx(1.0);  // (f^n)'(z)
    double scale = 1.0 / 3.0;
    for (int n = 0; n < 400; ++n) {
        Cx inv = Cx(1.0) / zn;
        Cx w = Cx(1.0) + (map.a() + inv) * inv;
        if (w.real() <= 0.0)
            throw DeepPointError("boettcher: factor left the right half-plane");
        log_phi += scale * std::log(w);
        Cx dw = -(map.a() + 2.0 * inv) * inv * inv * chain;
        dlog += scale * dw / w;
        if (std::abs(w - Cx(1.0)) * scale < 1e-18) break;
        chain *= map.derivative(zn);
        zn = map.eval(zn);
        if (std::abs(zn) > 1e100) break;
        scale /= 3.0;
    }
    return {log_phi, dlog};
}

// Solve phi(z) = exp(target_log) near |z| = exp(Re target_log); valid at
// potentials >= v_high/3 where the product factors are tame.
Cx solve_anchor(const CubicMap& map, Cx target_log, Cx seed) {
    // Newton in log z: the scale is exponential in the potential, so additive
    // steps overshoot; multiplicative ones contract cleanly.
    Cx z = seed;
    for (int it = 0; it < 60; ++it) {
        LogPhi lp = log_phi_with_derivative(map, z);
        Cx diff = lp.value - target_log;
        // unwrap: the target argument is defined mod 2pi, stay nearest
        double im = diff.imag();
        im -= TWO_PI * std::round(im / TWO_PI);
        diff = Cx(diff.real(), im);
        if (std::abs(diff) < 1e-13) return z;
        Cx lstep = diff / (z * lp.deriv);
        if (std::abs(lstep) > 1.0) lstep /= std::abs(lstep);
        z *= std::exp(-lstep);
    }
    throw NewtonDivergenceError("anchor inversion did not converge");
}

int depth_for(double v, double v_high) {
    int d = 0;
    while (v * std::pow(3.0, d + 1) <= v_high * (1.0 + 1e-12) && d < 700) ++d;
    return d;
}

struct RaySampler {
    const CubicMap& map;
    RationalAngle theta;
    double v_high;
    std::vector<RationalAngle> angle_orbit;  // 3^d * theta mod 1
    std::vector<Cx> chain;                   // chain[i] at depth i, f(chain[i]) = chain[i+1]
    double prev_v = -1.0;

    RaySampler(const CubicMap& m, const RationalAngle& t, double vh)
        : map(m), theta(t), v_high(vh) {}

    const RationalAngle& angle_at(int d) {
        while (int(angle_orbit.size()) <= d) {
            if (angle_orbit.empty())
                angle_orbit.push_back(theta);
            else
                angle_orbit.push_back(times(angle_orbit.back(), 3));
        }
        return angle_orbit[size_t(d)];
    }

    Cx anchor(int d, double s) {
        Cx target_log(s, TWO_PI * angle_at(d).value());
        Cx seed;
        if (int(chain.size()) >= d + 1)
            seed = chain[size_t(d)];
        else if (int(chain.size()) == d && d > 0)
            seed = map.eval(chain.back());
        else
            seed = std::exp(target_log) - map.a() / 3.0;
        return solve_anchor(map, target_log, seed);
    }

    // Advance the chain to potential v; recursion splits the step when the
    // nearest-preimage choice is not clear-cut.
    void advance(double v, int recursion = 0) {
        if (recursion > 24) throw TracePullbackError("ray step subdivision exhausted");
        int d = depth_for(v, v_high);
        std::vector<Cx> next(size_t(d) + 1);
        next[size_t(d)] = anchor(d, v * std::pow(3.0, d));
        bool need_split = false;
        for (int i = d - 1; i >= 0; --i) {
            auto roots = map.preimages(next[size_t(i) + 1]);
            Cx ref = (int(chain.size()) > i) ? chain[size_t(i)] : next[size_t(i) + 1];
            int best = 0;
            double bd = 1e300, second = 1e300;
            for (int r = 0; r < 3; ++r) {
                double dist = std::abs(roots[size_t(r)] - ref);
                if (dist < bd) {
                    second = bd;
                    bd = dist;
                    best = r;
                } else {
                    second = std::min(second, dist);
                }
            }
            if (std::abs(roots[size_t(best)] - roots[size_t((best + 1) % 3)]) < 1e-12 ||
                std::abs(roots[size_t(best)] - roots[size_t((best + 2) % 3)]) < 1e-12)
                throw BranchAmbiguityError(v);
            if (int(chain.size()) > i && bd > 0.45 * second) {
                need_split = true;
                break;
            }
            next[size_t(i)] = roots[size_t(best)];
        }
        if (need_split && prev_v > 0.0) {
            double mid = std::sqrt(prev_v * v);
            advance(mid, recursion + 1);
            advance(v, recursion + 1);
            return;
        }
        chain = std::move(next);
        prev_v = v;
    }
};

std::vector<double> build_schedule(const RayOptions& opt) {
    std::vector<double> sched;
    double ratio = std::pow(3.0, 1.0 / opt.steps_per_division);
    for (double v = opt.v_high; v > opt.v_low * (1.0 + 1e-12); v /= ratio) sched.push_back(v);
    sched.push_back(opt.v_low);
    for (double e : opt.extra_potentials)
        if (e < opt.v_high && e > opt.v_low) sched.push_back(e);
    std::sort(sched.begin(), sched.end(), std::greater<>());
    sched.erase(std::unique(sched.begin(), sched.end(),
                            [](double x, double y) { return std::abs(x - y) < 1e-15 * x; }),
                sched.end());
    return sched;
}

}  // namespace

TracedCurve trace_ray(const CubicMap& map, const RationalAngle& angle, const RayOptions& opt) {
    if (!(opt.v_high > opt.v_low && opt.v_low > 0.0))
        throw std::invalid_argument("trace_ray: need v_high > v_low > 0");
    TracedCurve curve;
    curve.label = ray_label(angle);
    RaySampler sampler(map, angle, opt.v_high);
    for (double v : build_schedule(opt)) {
        sampler.advance(v);
        curve.append(sampler.chain[0], v);
    }
    curve.check();
    return curve;
}

namespace {

using Cl = std::complex<long double>;

// Complex least squares via modified Gram-Schmidt QR.
std::vector<Cl> complex_ls(const std::vector<std::vector<Cl>>& cols, const std::vector<Cl>& rhs) {
    const int K = int(cols.size());
    const size_t m = rhs.size();
    std::vector<std::vector<Cl>> Q = cols;
    std::vector<std::vector<Cl>> R(size_t(K), std::vector<Cl>(size_t(K), Cl(0)));
    for (int k = 0; k < K; ++k) {
        long double nrm = 0;
        for (size_t i = 0; i < m; ++i) nrm += std::norm(Q[size_t(k)][i]);
        nrm = std::sqrt(nrm);
        R[size_t(k)][size_t(k)] = nrm;
        if (nrm == 0) continue;
        for (size_t i = 0; i < m; ++i) Q[size_t(k)][i] /= nrm;
        for (int j = k + 1; j < K; ++j) {
            Cl dot(0);
            for (size_t i = 0; i < m; ++i) dot += std::conj(Q[size_t(k)][i]) * Q[size_t(j)][i];
            R[size_t(k)][size_t(j)] = dot;
            for (size_t i = 0; i < m; ++i) Q[size_t(j)][i] -= dot * Q[size_t(k)][i];
        }
    }
    std::vector<Cl> qtb(size_t(K), Cl(0));
    for (int k = 0; k < K; ++k)
        for (size_t i = 0; i < m; ++i) qtb[size_t(k)] += std::conj(Q[size_t(k)][i]) * rhs[i];
    std::vector<Cl> x(size_t(K), Cl(0));
    for (int k = K - 1; k >= 0; --k) {
        Cl s = qtb[size_t(k)];
        for (int j = k + 1; j < K; ++j) s -= R[size_t(k)][size_t(j)] * x[size_t(j)];
        x[size_t(k)] = (std::abs(R[size_t(k)][size_t(k)]) != 0) ? s / R[size_t(k)][size_t(k)] : Cl(0);
    }
    return x;
}

// Landing estimator for the parabolic tail.  With sigma the repelling Fatou
// coordinate, sigma(nu) = nu + c - kappa ln(nu) + O(ln nu / nu) and
// 1/(z - z*)^p = A sigma + B + ..., p = 1 generically (p = 2 for a = 0).
// kappa is known from the map, so the log coefficient is pinned and the fit
// is a well-conditioned complex least squares in the inverse coordinate.
struct TailFit {
    Cx c0;
    double spread;
};

TailFit structured_tail_fit(const std::vector<double>& nus, const std::vector<Cx>& zs, Cx kappa,
                            int p) {
    const size_t m = nus.size();
    const Cl kap(kappa.real(), kappa.imag());
    // With z* off by delta, 1/(z-z*)^p picks up a sigma^{1+1/p} term whose
    // coefficient is -p * delta * A^{1+1/p}; reading it off the fit gives a
    // Newton step for z*.
    auto newton_step = [&](Cx zstar, size_t lo) -> std::optional<Cx> {
        size_t n = m - lo;
        std::vector<std::vector<Cl>> cols(6, std::vector<Cl>(n));
        std::vector<Cl> rhs(n);
        for (size_t i = lo; i < m; ++i) {
            long double nu = nus[i];
            long double ln = std::log(nu);
            Cl g = Cl(nu) - kap * Cl(ln);
            Cl gcorr = (p == 1) ? g * g : g * std::sqrt(g);
            cols[0][i - lo] = gcorr;
            cols[1][i - lo] = g;
            cols[2][i - lo] = Cl(1);
            cols[3][i - lo] = Cl(ln / nu);
            cols[4][i - lo] = Cl(1.0L / nu);
            cols[5][i - lo] = Cl(ln * ln / (nu * nu));
            Cl dz = Cl(zs[i].real() - zstar.real(), zs[i].imag() - zstar.imag());
            if (std::abs(dz) == 0.0L) return std::nullopt;
            Cl w = Cl(1) / dz;
            if (p == 2) w *= Cl(1) / dz;
            rhs[i - lo] = w;
        }
        auto x = complex_ls(cols, rhs);
        Cl A = x[1];
        if (std::abs(A) == 0.0L) return std::nullopt;
        Cl delta;
        if (p == 1) {
            delta = -x[0] / (A * A);
        } else {
            Cl d1 = -x[0] / (Cl(2) * A * std::sqrt(A));
            Cl d2 = -d1;
            delta = (std::abs(d1) <= std::abs(d2)) ? d1 : d2;
        }
        return Cx(double(delta.real()), double(delta.imag()));
    };

    // Richardson initialization on the per-division spine: z ~ z* + B/nu.
    size_t N = m - 1;
    size_t step = std::min<size_t>(8, N);
    Cx B0 = -(zs[N] - zs[N - step]) * Cx(nus[N] * nus[N - step] / (nus[N] - nus[N - step]));
    Cx z0 = zs[N] - B0 / Cx(nus[N]);
    if (p == 2) z0 = zs[N];  // sqrt profile; let the Newton stages do the work

    // Fit on the deep half, jackknifed against a deeper sub-window.
    auto first_at = [&](double numin) {
        size_t lo = 0;
        while (lo + 1 < m && nus[lo] < numin) ++lo;
        return std::min(lo, m - 24);
    };
    std::vector<Cx> estimates;
    for (double frac : {0.5, 0.58}) {
        size_t lo = first_at(frac * nus[N]);
        Cx zstar = z0;
        for (int stage = 0; stage < 16; ++stage) {
            auto delta = newton_step(zstar, lo);
            if (!delta) break;
            zstar += *delta;
            if (std::abs(*delta) < 1e-14) break;
        }
        estimates.push_back(zstar);
    }
    TailFit out;
    out.c0 = estimates.front();
    out.spread = 0.0;
    for (Cx e : estimates) out.spread = std::max(out.spread, std::abs(e - estimates.front()));
    return out;
}

}  // namespace

LandingResult landing_point(const CubicMap& map, const RationalAngle& angle,
                            const LandingOptions& opt) {
    RayOptions ropt;
    ropt.v_high = opt.v_high;
    ropt.v_low = opt.v_floor;
    ropt.steps_per_division = opt.steps_per_division;
    RaySampler sampler(map, angle, opt.v_high);

    std::vector<double> vs;
    std::vector<Cx> pts;
    const int tail_window = 2 * opt.steps_per_division;
    LandingResult res;
    for (double v : build_schedule(ropt)) {
        sampler.advance(v);
        vs.push_back(v);
        pts.push_back(sampler.chain[0]);
        if (int(pts.size()) >= tail_window && pts.size() % opt.steps_per_division == 0) {
            std::vector<Cx> tail(pts.end() - tail_window, pts.end());
            double diam = polyline_diameter(tail);
            if (diam < opt.geometric_tol) {
                res.point = pts.back();
                res.converged = true;
                res.residual = diam;
                res.mode = LandingMode::geometric;
                return res;
            }
        }
    }

    // Parabolic-looking tail: structured asymptotic fit (the window handling
    // keeps the deep half; cesaro_window is the minimum usable tail size).
    res.mode = LandingMode::cesaro;
    if (int(pts.size()) < std::max(24, opt.cesaro_window / 2)) {
        res.point = pts.back();
        res.converged = false;
        res.residual = polyline_diameter({pts.end() - std::min<size_t>(8, pts.size()), pts.end()});
        return res;
    }
    std::vector<double> nus;
    std::vector<Cx> zs;
    for (size_t i = 0; i < pts.size(); ++i) {
        nus.push_back(std::log(opt.v_high / vs[i]) / std::log(3.0) + 1.0);
        zs.push_back(pts[i]);
    }
    int p = (map.a() == Cx(0.0)) ? 2 : 1;
    Cx kappa = (p == 2) ? Cx(0.75) : Cx(1.0) - Cx(1.0) / (map.a() * map.a());
    TailFit fit = structured_tail_fit(nus, zs, kappa, p);
    res.point = fit.c0;
    res.residual = fit.spread;
    res.converged = fit.spread < opt.cesaro_tol;
    return res;
}

TracedCurve equipotential(const CubicMap& map, double v, int n_samples) {
    if (!(v > 0.0)) throw std::invalid_argument("equipotential: v > 0 required");
    if (n_samples < 8) throw std::invalid_argument("equipotential: too few samples");
    TracedCurve curve;
    curve.label = equipotential_label(v);
    // Seed at a comfortable level, then continue down to v, then sweep angles.
    double v_start = std::max(v, 3.0);
    Cx z = solve_anchor(map, Cx(v_start, 0.0), std::exp(Cx(v_start, 0.0)) - map.a() / 3.0);
    double vv = v_start;
    while (vv > v * (1.0 + 1e-12)) {
        vv = std::max(v, vv / 1.5);
        z = solve_anchor(map, Cx(vv, 0.0), z);
    }
    for (int j = 0; j < n_samples; ++j) {
        double th = double(j) / n_samples;
        z = solve_anchor(map, Cx(v, TWO_PI * th), z);
        curve.append(z, th);
    }
    curve.check();
    return curve;
}

}  // namespace parab
