#include "parab/angles.hpp"

#include <map>
#include <stdexcept>

namespace parab {

namespace mp = boost::multiprecision;

RationalAngle::RationalAngle(BigInt num, BigInt den) {
    if (den <= 0) throw std::invalid_argument("RationalAngle: denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    BigInt g = mp::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

RationalAngle RationalAngle::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return RationalAngle(BigInt(s), BigInt(1));
        return RationalAngle(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("RationalAngle: cannot parse '" + s + "'");
    }
}

double RationalAngle::value() const {
    return static_cast<double>(mp::cpp_rational(num_, den_));
}

std::string RationalAngle::str() const {
    return num_.str() + "/" + den_.str();
}

RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RationalAngle times(const RationalAngle& angle, const BigInt& m) {
    if (m <= 0) throw std::invalid_argument("times: multiplier must be positive");
    return RationalAngle(angle.num() * m, angle.den());
}

OrbitPeriod orbit_period(const RationalAngle& angle, const BigInt& m) {
    if (m < 2) throw std::invalid_argument("orbit_period: m >= 2 required");
    std::map<RationalAngle, long> seen;
    RationalAngle t = angle;
    long step = 0;
    while (true) {
        auto it = seen.find(t);
        if (it != seen.end()) return OrbitPeriod{it->second, step - it->second};
        seen.emplace(t, step);
        t = times(t, m);
        ++step;
    }
}

RationalAngle theta_pm(int k, int sign) {
    if (k < 2) throw std::invalid_argument("theta_pm: k >= 2 required");
    BigInt den = (BigInt(1) << k) - 1;
    if (sign >= 0) return RationalAngle(BigInt(1), den);
    return RationalAngle(den - 1, den);
}

bool is_dyadic(const RationalAngle& angle) {
    BigInt d = angle.den();
    while (d % 2 == 0) d /= 2;
    return d == 1;
}

CyclicOrder cyclic_order(const RationalAngle& a, const RationalAngle& b,
                         const RationalAngle& c) {
    if (a == b || b == c || a == c) return CyclicOrder::degenerate;
    // Counterclockwise offsets from a; positive when b comes before c.
    RationalAngle ab = b - a;
    RationalAngle ac = c - a;
    return ab < ac ? CyclicOrder::positive : CyclicOrder::negative;
}

std::vector<int> base_digits(const RationalAngle& angle, int m, int n) {
    if (n < 1) throw std::invalid_argument("base_digits: n >= 1 required");
    std::vector<int> digits;
    digits.reserve(n);
    BigInt num = angle.num();
    const BigInt& den = angle.den();
    for (int i = 0; i < n; ++i) {
        num *= m;
        digits.push_back(static_cast<int>(num / den));
        num %= den;
    }
    return digits;
}

RationalAngle angle_from_binary(const std::vector<int>& pre, const std::vector<int>& rep) {
    BigInt p = 0;
    for (int d : pre) p = 2 * p + d;
    BigInt scale = BigInt(1) << pre.size();
    if (rep.empty()) return RationalAngle(p, scale);
    BigInt r = 0;
    for (int d : rep) r = 2 * r + d;
    BigInt rden = (BigInt(1) << rep.size()) - 1;
    // value = p/scale + r/(rden * scale)
    return RationalAngle(p * rden + r, rden * scale);
}

}  // namespace parab
