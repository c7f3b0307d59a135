#pragma once

// Exact arithmetic on angles in R/Z under multiplication by 2 (boundary
// dynamics) and by 3 (external-ray dynamics).  Angles are reduced fractions
// p/q with arbitrary-precision integers so denominators like 2^k-1 and 3^n
// never overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace parab {

using BigInt = boost::multiprecision::cpp_int;

class RationalAngle {
public:
    RationalAngle() : num_(0), den_(1) {}
    RationalAngle(BigInt num, BigInt den);
    RationalAngle(long num, long den) : RationalAngle(BigInt(num), BigInt(den)) {}

    // Parses the exact "p/q" form; a bare integer is taken mod 1.
    static RationalAngle parse(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    double value() const;
    std::string str() const;

    bool operator==(const RationalAngle& o) const = default;
    bool operator<(const RationalAngle& o) const { return num_ * o.den_ < o.num_ * den_; }

private:
    BigInt num_;  // 0 <= num < den, gcd(num, den) = 1
    BigInt den_;
};

RationalAngle operator+(const RationalAngle& a, const RationalAngle& b);
RationalAngle operator-(const RationalAngle& a, const RationalAngle& b);

// m * angle mod 1, reduced.
RationalAngle times(const RationalAngle& angle, const BigInt& m);

struct OrbitPeriod {
    long preperiod = 0;
    long period = 0;
    bool operator==(const OrbitPeriod&) const = default;
};

// Smallest (l, p), p >= 1, with m^(l+p) * angle = m^l * angle mod 1.
OrbitPeriod orbit_period(const RationalAngle& angle, const BigInt& m);

// The access angles theta_+ = 1/(2^k-1), theta_- = (2^k-2)/(2^k-1), k >= 2.
RationalAngle theta_pm(int k, int sign);

// True iff the denominator is a power of two (0/1 counts).
bool is_dyadic(const RationalAngle& angle);

enum class CyclicOrder { positive, negative, degenerate };

CyclicOrder cyclic_order(const RationalAngle& a, const RationalAngle& b,
                         const RationalAngle& c);

// First n digits of the base-m expansion; exact m-adic angles terminate
// (digit tail of zeros).
std::vector<int> base_digits(const RationalAngle& angle, int m, int n);

// Assembles the exact angle with the given leading digits followed by a
// repeating block, in base 2: 0.d[0]d[1]...(rep) .  Used to recover exact
// itinerary values from eventually periodic digit streams.
RationalAngle angle_from_binary(const std::vector<int>& pre, const std::vector<int>& rep);

}  // namespace parab
