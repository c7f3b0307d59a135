#include "parab/angles.hpp"

#include "doctest.h"

#include <cstdint>

using namespace parab;

namespace {

// Brute-force oracle on int64 fractions: orbit of p/q under multiplication
// by m, reduced by gcd at each step.
struct Frac {
    long long p, q;
    bool operator==(const Frac&) const = default;
    bool operator<(const Frac& o) const { return p * o.q < o.p * q; }
};

long long gcd_ll(long long a, long long b) { return b == 0 ? a : gcd_ll(b, a % b); }

Frac reduce(long long p, long long q) {
    p %= q;
    if (p < 0) p += q;
    long long g = gcd_ll(p == 0 ? q : p, q);
    return {p / g, q / g};
}

std::pair<long, long> oracle_orbit_period(Frac f, int m) {
    std::vector<Frac> seen;
    while (true) {
        for (size_t i = 0; i < seen.size(); ++i)
            if (seen[i] == f) return {long(i), long(seen.size() - i)};
        seen.push_back(f);
        f = reduce(f.p * m, f.q);
    }
}

}  // namespace

TEST_CASE("times: exact doubling and tripling") {
    CHECK(times(RationalAngle(1, 3), 2) == RationalAngle(2, 3));
    CHECK(times(RationalAngle(0, 1), 3) == RationalAngle(0, 1));
    CHECK(times(RationalAngle(1, 7), 2) == RationalAngle(2, 7));
    // composing two doublings equals multiplication by 4
    RationalAngle t(5, 13);
    CHECK(times(times(t, 2), 2) == times(t, 4));
    CHECK(times(times(t, 3), 3) == times(t, 9));
}

TEST_CASE("orbit_period basics") {
    CHECK(orbit_period(RationalAngle(1, 3), 2) == OrbitPeriod{0, 2});
    CHECK(orbit_period(RationalAngle(1, 2), 2) == OrbitPeriod{1, 1});
    CHECK(orbit_period(RationalAngle(1, 31), 2) == OrbitPeriod{0, 5});
}

TEST_CASE("theta_pm: access angles 1/(2^k-1)") {
    CHECK(theta_pm(2, +1) == RationalAngle(1, 3));
    CHECK(theta_pm(2, -1) == RationalAngle(2, 3));
    CHECK(theta_pm(4, +1) == RationalAngle(1, 15));
    for (int k = 2; k <= 16; ++k) {
        for (int sign : {+1, -1}) {
            auto op = orbit_period(theta_pm(k, sign), 2);
            CHECK(op.preperiod == 0);
            CHECK(op.period == k);
        }
    }
}

TEST_CASE("is_dyadic") {
    CHECK(is_dyadic(RationalAngle(3, 8)));
    CHECK(!is_dyadic(RationalAngle(1, 3)));
    CHECK(is_dyadic(RationalAngle(0, 1)));
}

TEST_CASE("cyclic_order") {
    RationalAngle a(0, 1), b(1, 3), c(2, 3);
    CHECK(cyclic_order(a, b, c) == CyclicOrder::positive);
    CHECK(cyclic_order(a, c, b) == CyclicOrder::negative);
    CHECK(cyclic_order(b, b, c) == CyclicOrder::degenerate);
    // invariance under a common rotation
    RationalAngle rot(7, 11);
    CHECK(cyclic_order(a + rot, b + rot, c + rot) == CyclicOrder::positive);
    CHECK(cyclic_order(a + rot, c + rot, b + rot) == CyclicOrder::negative);
}

TEST_CASE("base_digits with terminating convention") {
    CHECK(base_digits(RationalAngle(1, 3), 2, 4) == std::vector<int>{0, 1, 0, 1});
    CHECK(base_digits(RationalAngle(1, 2), 2, 3) == std::vector<int>{1, 0, 0});
    CHECK(base_digits(RationalAngle(1, 3), 3, 3) == std::vector<int>{1, 0, 0});
}

TEST_CASE("base_digits shift property") {
    for (int m : {2, 3}) {
        RationalAngle t(17, 89);
        auto d = base_digits(t, m, 9);
        auto ds = base_digits(times(t, m), m, 8);
        CHECK(std::vector<int>(d.begin() + 1, d.end()) == ds);
    }
}

TEST_CASE("angle_from_binary reassembles itineraries") {
    CHECK(angle_from_binary({1}, {}) == RationalAngle(1, 2));
    CHECK(angle_from_binary({}, {0, 1}) == RationalAngle(1, 3));
    CHECK(angle_from_binary({1, 1}, {}) == RationalAngle(3, 4));
    CHECK(angle_from_binary({}, {1}) == RationalAngle(0, 1));  // .111... = 1 = 0 mod 1
    // digits of theta reassemble to theta for eventually periodic streams
    RationalAngle t(5, 12);
    auto d = base_digits(t, 2, 2);   // preperiod 2
    auto r = base_digits(times(t, 4), 2, 2);  // 5/12 * 4 = 5/3 = 2/3, period 2
    CHECK(angle_from_binary(d, r) == t);
}

TEST_CASE("parse and serialize") {
    CHECK(RationalAngle::parse("3/6") == RationalAngle(1, 2));
    CHECK(RationalAngle::parse("3/6").str() == "1/2");
    CHECK(RationalAngle::parse("7/3") == RationalAngle(1, 3));
    CHECK(RationalAngle(0, 5).str() == "0/1");
    CHECK_THROWS(RationalAngle::parse("x/y"));
}

TEST_CASE("oracle equivalence over denominators <= 511") {
    // acceptance-grade brute force, trimmed here to q <= 127 (the acceptance
    // suite runs the full 511)
    for (long long q = 1; q <= 127; ++q) {
        for (long long p = 0; p < q; ++p) {
            if (gcd_ll(p == 0 ? q : p, q) != 1) continue;
            RationalAngle t(p, q);
            auto o2 = oracle_orbit_period({p, q}, 2);
            auto got2 = orbit_period(t, 2);
            REQUIRE(got2.preperiod == o2.first);
            REQUIRE(got2.period == o2.second);
        }
    }
}
