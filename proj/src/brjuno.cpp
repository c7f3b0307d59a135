#include "parab/brjuno.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace parab {

ContinuedFraction continued_fraction(double theta, int n) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("continued_fraction: theta must lie in (0,1)");
    ContinuedFraction cf;
    cf.theta = theta;
    BigInt p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
    BigInt p = 0, q = 1;            // p_0, q_0
    double x = theta;
    for (int i = 0; i < n; ++i) {
        // Once the remainder is at the noise floor the quotients are garbage; stop.
        if (x < 1e-15) {
            cf.terminated = true;
            break;
        }
        double inv = 1.0 / x;
        double af = std::floor(inv);
        if (!(af >= 1.0) || af > 9.0e15) {
            cf.terminated = true;
            break;
        }
        BigInt a(static_cast<long long>(af));
        cf.partial_quotients.push_back(a);
        BigInt p_next = a * p + p_prev;
        BigInt q_next = a * q + q_prev;
        p_prev = p; q_prev = q;
        p = p_next; q = q_next;
        cf.convergents.emplace_back(p, q);
        x = inv - af;
    }
    return cf;
}

std::string to_string(BrjunoVerdict v) {
    switch (v) {
        case BrjunoVerdict::likely_brjuno: return "likely_brjuno";
        case BrjunoVerdict::likely_not_brjuno: return "likely_not_brjuno";
        default: return "undecided";
    }
}

namespace {

double log_of(const BigInt& q) {
    // log via the top 64 bits and the bit length
    using boost::multiprecision::msb;
    if (q <= 0) return -std::numeric_limits<double>::infinity();
    unsigned bits = msb(q) + 1;
    if (bits <= 62) return std::log(static_cast<double>(q.convert_to<long long>()));
    BigInt top = q >> (bits - 62);
    return std::log(static_cast<double>(top.convert_to<long long>())) +
           (bits - 62) * std::log(2.0);
}

void decide_verdict(BrjunoReport& rep, double increment_floor) {
    if (!rep.partial_sums.empty() && rep.partial_sums.back() > rep.blow_up_threshold) {
        rep.verdict = BrjunoVerdict::likely_not_brjuno;
        return;
    }
    if (rep.terminated) {
        rep.verdict = BrjunoVerdict::undecided;
        return;
    }
    size_t n = rep.partial_sums.size();
    if (n < 4) {
        rep.verdict = BrjunoVerdict::undecided;
        return;
    }
    double i1 = rep.partial_sums[n - 1] - rep.partial_sums[n - 2];
    double i2 = rep.partial_sums[n - 2] - rep.partial_sums[n - 3];
    double i3 = rep.partial_sums[n - 3] - rep.partial_sums[n - 4];
    if (i1 < increment_floor) {
        rep.verdict = BrjunoVerdict::likely_brjuno;
        return;
    }
    // Geometric tail estimate: with increments shrinking at ratio r < 1 the
    // remaining sum is bounded by i1 * r / (1 - r).
    if (i2 > 0 && i3 > 0) {
        double r = std::max(i1 / i2, i2 / i3);
        if (r < 0.95 && i1 * r / (1.0 - r) < 1.0) {
            rep.verdict = BrjunoVerdict::likely_brjuno;
            return;
        }
    }
    rep.verdict = BrjunoVerdict::undecided;
}

}  // namespace

BrjunoReport brjuno_partial(double theta, int N, double blow_up_threshold,
                            double increment_floor) {
    BrjunoReport rep;
    rep.blow_up_threshold = blow_up_threshold;
    rep.N = N;
    ContinuedFraction cf = continued_fraction(theta, N + 1);
    rep.terminated = cf.terminated;
    double sum = 0.0;
    // partial_sums[k] = Sum_{n=1..k+1} log(q_{n+1})/q_n
    for (size_t i = 0; i + 1 < cf.convergents.size(); ++i) {
        double qn = static_cast<double>(cf.convergents[i].second);
        double log_qn1 = log_of(cf.convergents[i + 1].second);
        sum += log_qn1 / qn;
        rep.partial_sums.push_back(sum);
        if (sum > blow_up_threshold) break;
    }
    decide_verdict(rep, increment_floor);
    return rep;
}

BrjunoReport brjuno_partial_fast_growth(int N, double blow_up_threshold) {
    // The designed non-Brjuno number with quotients a_{n+1} = 2^{q_n}.
    // q_n explodes past any float, but the increments log(q_{n+1})/q_n tend to
    // log 2 from above, so the sums grow linearly; track q exactly while it
    // fits and saturate the increment afterwards.
    const double LOG2 = std::log(2.0);
    BrjunoReport rep;
    rep.blow_up_threshold = blow_up_threshold;
    rep.N = N;
    BigInt q_prev = 1;  // q_0
    BigInt q = 2;       // q_1 with a_1 = 2
    bool saturated = false;
    double sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        double increment;
        if (!saturated && q <= 65536) {
            double qn = static_cast<double>(q);
            BigInt a_next = BigInt(1) << q.convert_to<unsigned>();
            BigInt q_next = a_next * q + q_prev;
            increment = log_of(q_next) / qn;
            q_prev = q;
            q = q_next;
        } else {
            // log(q_{n+1})/q_n = log2 + log(q_n)/q_n -> log2; the exact value is
            // slightly larger, so using log2 only delays the blow-up detection.
            saturated = true;
            increment = LOG2;
        }
        sum += increment;
        rep.partial_sums.push_back(sum);
        if (sum > blow_up_threshold) {
            rep.verdict = BrjunoVerdict::likely_not_brjuno;
            return rep;
        }
    }
    rep.verdict = BrjunoVerdict::undecided;
    return rep;
}

}  // namespace parab
