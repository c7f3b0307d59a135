#pragma once

// Continued fractions and partial Brjuno sums Sum log(q_{n+1})/q_n.
// Double precision cannot decide the Brjuno condition, so verdicts are
// labelled "likely".

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace parab {

using BigInt = boost::multiprecision::cpp_int;

struct ContinuedFraction {
    double theta = 0.0;
    std::vector<BigInt> partial_quotients;
    std::vector<std::pair<BigInt, BigInt>> convergents;  // (p_n, q_n)
    bool terminated = false;  // expansion ended (rational / precision floor)
};

// First n partial quotients of theta in (0,1) by the Euclidean algorithm on
// the floating representation; halts early when the remainder underflows.
ContinuedFraction continued_fraction(double theta, int n);

enum class BrjunoVerdict { likely_brjuno, likely_not_brjuno, undecided };

struct BrjunoReport {
    std::vector<double> partial_sums;
    BrjunoVerdict verdict = BrjunoVerdict::undecided;
    int N = 0;
    bool terminated = false;
    double blow_up_threshold = 1e3;
};

std::string to_string(BrjunoVerdict v);

BrjunoReport brjuno_partial(double theta, int N, double blow_up_threshold = 1e3,
                            double increment_floor = 1e-12);

// Sums for the designed fast-growth number with quotients a_{n+1} = 2^{q_n},
// built forward from the quotients (the number itself has no usable floating
// representation).
BrjunoReport brjuno_partial_fast_growth(int N, double blow_up_threshold = 1e3);

}  // namespace parab
