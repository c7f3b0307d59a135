#include "parab/cubic.hpp"
#include "parab/cycles.hpp"
#include "parab/orbits.hpp"

#include "doctest.h"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace parab;

TEST_CASE("eval and fixed points") {
    CHECK(CubicMap(Cx(1.0)).eval(Cx(0.0)) == Cx(0.0));
    CHECK(std::abs(CubicMap(Cx(1.0)).eval(Cx(-1.0)) - Cx(-1.0)) == 0.0);
    CHECK(CubicMap(Cx(0.0)).eval(Cx(2.0)) == Cx(10.0));
}

TEST_CASE("derivative at special points") {
    CubicMap m(Cx(0.7, -0.3));
    CHECK(m.derivative(Cx(0.0)) == Cx(1.0));
    CHECK(std::abs(m.derivative(m.c0())) < 1e-12);
    CHECK(std::abs(m.derivative(m.c())) < 1e-12);
    // derivative(-a) = 1 + a^2 exactly on dyadic-rational parameters
    for (double ar : {0.5, 0.25, 1.0}) {
        CubicMap md(ar);
        Cx got = md.derivative(Cx(-ar));
        CHECK(got == Cx(1.0 + ar * ar));
    }
}

TEST_CASE("critical points: closed form and Vieta") {
    // designation before classification is lexicographic; compare as sets
    auto matches = [](const CubicMap& m, Cx u, Cx v) {
        double d1 = std::abs(m.c0() - u) + std::abs(m.c() - v);
        double d2 = std::abs(m.c0() - v) + std::abs(m.c() - u);
        return std::min(d1, d2) < 1e-12;
    };
    CHECK(matches(CubicMap(Cx(0.0)), Cx(0, 1.0 / std::sqrt(3.0)), Cx(0, -1.0 / std::sqrt(3.0))));
    CubicMap m2(Cx(2.0));
    CHECK(matches(m2, Cx(-1.0 / 3.0), Cx(-1.0)));
    CubicMap md(Cx(std::sqrt(3.0)));
    CHECK(std::abs(md.c0() - md.c()) < 1e-7);  // double root at discriminant zero
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 50; ++i) {
        CubicMap m(Cx(U(rng), U(rng)));
        CHECK(std::abs(m.c0() + m.c() + 2.0 * m.a() / 3.0) < 1e-12);
        CHECK(std::abs(m.c0() * m.c() - Cx(1.0 / 3.0)) < 1e-12);
    }
}

TEST_CASE("composed eval agrees with Horner form") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-1, 1);
    CubicMap m(Cx(0.4, 0.3));
    auto horner = [&](Cx z) { return ((z + m.a()) * z + Cx(1.0)) * z; };
    for (int i = 0; i < 200; ++i) {
        Cx z(U(rng) * m.escape_radius(), U(rng) * m.escape_radius());
        Cx w1 = z, w2 = z;
        for (int n = 0; n < 50; ++n) {
            w1 = m.eval(w1);
            w2 = horner(w2);
            if (std::abs(w1) > 1e50) break;
            REQUIRE(std::abs(w1 - w2) <= 1e-10 * (1.0 + std::abs(w1)));
        }
    }
}

TEST_CASE("escape radius is monotone: once past it, |f(z)| > |z|") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(-3, 3);
    for (int i = 0; i < 500; ++i) {
        CubicMap m(Cx(U(rng), U(rng)));
        std::uniform_real_distribution<double> R(m.escape_radius() * 1.0000001,
                                                 m.escape_radius() * 10);
        std::uniform_real_distribution<double> T(0, 2 * 3.14159265358979);
        double r = R(rng), t = T(rng);
        Cx z = std::polar(r, t);
        CHECK(std::abs(m.eval(z)) > std::abs(z));
    }
}

TEST_CASE("preimages solve f(x) = w") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 300; ++i) {
        CubicMap m(Cx(U(rng), U(rng)));
        Cx w(U(rng), U(rng));
        auto roots = m.preimages(w);
        for (Cx r : roots) CHECK(std::abs(m.eval(r) - w) < 1e-9 * (1.0 + std::abs(w)));
        // Vieta for x^3 + a x^2 + x - w
        Cx sum = roots[0] + roots[1] + roots[2];
        Cx prod = roots[0] * roots[1] * roots[2];
        CHECK(std::abs(sum + m.a()) < 1e-8);
        CHECK(std::abs(prod - w) < 1e-8 * (1.0 + std::abs(w)));
    }
}

TEST_CASE("solve_monic_cubic handles degenerate shapes") {
    auto r = solve_monic_cubic(Cx(0.0), Cx(0.0), Cx(0.0));
    for (Cx x : r) CHECK(std::abs(x) < 1e-14);
    // (x-1)^2 (x+2) = x^3 - 3x + 2
    auto r2 = solve_monic_cubic(Cx(0.0), Cx(-3.0), Cx(2.0));
    int near1 = 0, nearm2 = 0;
    for (Cx x : r2) {
        if (std::abs(x - Cx(1.0)) < 1e-6) ++near1;
        if (std::abs(x + Cx(2.0)) < 1e-10) ++nearm2;
    }
    CHECK(near1 == 2);
    CHECK(nearm2 == 1);
}

TEST_CASE("classify_orbit basics") {
    CubicMap m(Cx(1.0));
    Petal petal = Petal::generic(m);
    CHECK(classify_orbit(m, petal, Cx(3.0), 100).kind == OrbitKind::EscapesToInfinity);
    CHECK(classify_orbit(m, petal, Cx(0.0), 1).kind == OrbitKind::HitsZeroExactly);
}

TEST_CASE("classify_orbit at a known Satisfied parameter") {
    // a = i: c0 = i/3 runs into the petal along +i; c = -i is a fixed point.
    CubicMap m(Cx(0.0, 1.0));
    Petal petal = Petal::generic(m);
    auto k0 = classify_orbit(m, petal, Cx(0.0, 1.0 / 3.0), 100000);
    CHECK(k0.kind == OrbitKind::ConvergesToParabolic);
    auto k1 = classify_orbit(m, petal, Cx(0.0, -1.0), 100000);
    CHECK(k1.kind == OrbitKind::OtherBounded);
}

TEST_CASE("check_assumption1 gate cases") {
    auto r0 = check_assumption1(CubicMap(Cx(0.0)), 1000);
    CHECK(r0.status == Assumption1Status::Violated);
    CHECK(r0.reason.find("a=0") != std::string::npos);

    auto ri = check_assumption1(CubicMap(Cx(0.0, 1.0)), 100000);
    CHECK(ri.status == Assumption1Status::Satisfied);
    CHECK(std::abs(ri.c0 - Cx(0.0, 1.0 / 3.0)) < 1e-9);
    CHECK(std::abs(ri.c - Cx(0.0, -1.0)) < 1e-9);

    // large |a|: the free critical point escapes
    auto re = check_assumption1(CubicMap(Cx(2.0, 2.0)), 100000);
    CHECK(re.status == Assumption1Status::Violated);
}

TEST_CASE("find_cycles: fixed points present with correct multipliers") {
    CubicMap m(Cx(0.5, 0.2));
    auto res = find_cycles(m, 1);
    bool has0 = false, hasMa = false;
    for (const Cycle& c : res.cycles) {
        if (c.period != 1) continue;
        if (std::abs(c.points[0]) < 1e-8) {
            has0 = true;
            CHECK(std::abs(c.multiplier - Cx(1.0)) < 1e-6);
        }
        if (std::abs(c.points[0] + m.a()) < 1e-8) {
            hasMa = true;
            CHECK(std::abs(c.multiplier - (Cx(1.0) + m.a() * m.a())) < 1e-6);
        }
    }
    CHECK(has0);
    CHECK(hasMa);
}

TEST_CASE("find_cycles a=0: only the triple fixed point at 0") {
    auto res = find_cycles(CubicMap(Cx(0.0)), 1);
    REQUIRE(res.cycles.size() == 1);
    CHECK(std::abs(res.cycles[0].points[0]) < 1e-8);
}

TEST_CASE("find_cycles a=2 period 2 vs companion-matrix oracle") {
    CubicMap m(Cx(2.0));
    auto res = find_cycles(m, 2);
    // companion matrix of f(f(z)) - z, degree 9
    // f(z) = z^3 + 2z^2 + z; expand f(f(z)) - z via polynomial composition
    std::vector<Cx> f{Cx(0.0), Cx(1.0), Cx(2.0), Cx(1.0)};  // coeffs of f, ascending
    auto polymul = [](const std::vector<Cx>& p, const std::vector<Cx>& q) {
        std::vector<Cx> r(p.size() + q.size() - 1, Cx(0.0));
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
        return r;
    };
    // f(w) with w = f(z): compose
    std::vector<Cx> comp{Cx(0.0)};
    std::vector<Cx> wpow{Cx(1.0)};
    for (size_t k = 0; k < f.size(); ++k) {
        for (size_t i = 0; i < wpow.size(); ++i) {
            if (comp.size() <= i) comp.resize(i + 1, Cx(0.0));
            comp[i] += f[k] * wpow[i];
        }
        wpow = polymul(wpow, f);
    }
    comp[1] -= Cx(1.0);  // minus z
    REQUIRE(comp.size() == 10);
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(9, 9);
    for (int i = 0; i < 9; ++i) C(i, 8) = -std::complex<double>(comp[size_t(i)] / comp[9]);
    for (int i = 1; i < 9; ++i) C(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
    REQUIRE(es.info() == Eigen::Success);
    // distinct oracle roots
    std::vector<Cx> oracle;
    for (int i = 0; i < 9; ++i) {
        Cx r(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
        bool dup = false;
        for (Cx o : oracle)
            if (std::abs(o - r) < 1e-7) dup = true;
        if (!dup) oracle.push_back(r);
    }
    // every found cycle point is an oracle root and vice versa
    std::vector<Cx> found;
    for (const Cycle& c : res.cycles)
        if (c.period <= 2)
            for (Cx p : c.points) found.push_back(p);
    for (Cx p : found) {
        double best = 1e300;
        for (Cx o : oracle) best = std::min(best, std::abs(p - o));
        CHECK(best < 1e-6);
    }
    for (Cx o : oracle) {
        double best = 1e300;
        for (Cx p : found) best = std::min(best, std::abs(p - o));
        CHECK(best < 1e-6);
    }
}

TEST_CASE("classify_cycle_for_renormalization") {
    // attracting fixed point -a with |1+a^2| < 1
    CubicMap m(Cx(0.0, 0.999));
    Cycle c;
    c.points = {-m.a()};
    c.period = 1;
    c.multiplier = Cx(1.0) + m.a() * m.a();
    c.kind = CycleKind::attracting;
    auto rep = classify_cycle_for_renormalization(m, c);
    CHECK(rep.renormalizable_expected);

    // synthetic golden-mean rotation
    double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    Cycle ci;
    ci.points = {Cx(0.3, 0.2)};
    ci.period = 1;
    ci.multiplier = std::polar(1.0, 2 * 3.141592653589793 * golden);
    ci.kind = CycleKind::irrationally_indifferent;
    auto repi = classify_cycle_for_renormalization(m, ci);
    CHECK(repi.has_brjuno);
    CHECK(repi.brjuno.verdict == BrjunoVerdict::likely_brjuno);

    // rational rotation: parabolic, no Brjuno analysis
    Cycle cp;
    cp.points = {Cx(0.4, 0.1)};
    cp.period = 1;
    cp.multiplier = std::polar(1.0, 2 * 3.141592653589793 * (1.0 / 3.0));
    cp.kind = CycleKind::parabolic;
    auto repp = classify_cycle_for_renormalization(m, cp);
    CHECK(!repp.has_brjuno);
    CHECK(repp.renormalizable_expected);
}
