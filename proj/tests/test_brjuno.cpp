#include "parab/brjuno.hpp"

#include "doctest.h"

#include <cmath>

using namespace parab;

TEST_CASE("golden mean: all quotients 1, Fibonacci convergents") {
    double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    auto cf = continued_fraction(golden, 10);
    REQUIRE(cf.partial_quotients.size() == 10);
    for (auto& a : cf.partial_quotients) CHECK(a == 1);
    // q: 1, 2, 3, 5, 8, ... Fibonacci
    long long fib[12] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    for (size_t i = 0; i < cf.convergents.size(); ++i)
        CHECK(cf.convergents[i].second == fib[i + 1]);
}

TEST_CASE("convergent recurrence and approximation quality") {
    double theta = 0.3183098861837907;  // 1/pi
    auto cf = continued_fraction(theta, 8);
    REQUIRE(cf.convergents.size() >= 4);
    for (size_t i = 2; i < cf.convergents.size(); ++i) {
        BigInt a = cf.partial_quotients[i];
        CHECK(cf.convergents[i].first == a * cf.convergents[i - 1].first + cf.convergents[i - 2].first);
        CHECK(cf.convergents[i].second == a * cf.convergents[i - 1].second + cf.convergents[i - 2].second);
    }
    for (size_t i = 0; i + 1 < cf.convergents.size(); ++i) {
        double p = static_cast<double>(cf.convergents[i].first);
        double q = static_cast<double>(cf.convergents[i].second);
        double q1 = static_cast<double>(cf.convergents[i + 1].second);
        CHECK(std::abs(theta - p / q) < 1.0 / (q * q1) + 1e-15);
        CHECK(cf.convergents[i].second < cf.convergents[i + 1].second);
    }
}

TEST_CASE("rational theta terminates with flag") {
    auto cf = continued_fraction(1.0 / 3.0, 10);
    CHECK(cf.terminated);
    auto rep = brjuno_partial(1.0 / 3.0, 10);
    CHECK(rep.verdict == BrjunoVerdict::undecided);
    CHECK(rep.terminated);
}

TEST_CASE("quotients of e-2") {
    double em2 = std::exp(1.0) - 2.0;
    auto cf = continued_fraction(em2, 6);
    std::vector<long long> expect{1, 2, 1, 1, 4, 1};
    REQUIRE(cf.partial_quotients.size() >= 6);
    for (int i = 0; i < 6; ++i) CHECK(cf.partial_quotients[size_t(i)] == expect[size_t(i)]);
}

TEST_CASE("golden mean Brjuno sums: small, monotone, likely Brjuno") {
    double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    auto rep = brjuno_partial(golden, 20);
    REQUIRE(rep.partial_sums.size() >= 19);
    CHECK(rep.partial_sums.back() < 5.0);
    for (size_t i = 1; i < rep.partial_sums.size(); ++i)
        CHECK(rep.partial_sums[i] >= rep.partial_sums[i - 1]);
    CHECK(rep.verdict == BrjunoVerdict::likely_brjuno);

    // independently summed closed form over Fibonacci denominators
    std::vector<double> fib{1, 2};
    while (fib.size() < 22) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    double sum = 0.0;
    size_t terms = rep.partial_sums.size();
    for (size_t n = 0; n < terms; ++n) sum += std::log(fib[n + 1]) / fib[n];
    CHECK(std::abs(sum - rep.partial_sums.back()) < 1e-9);
}

TEST_CASE("fast-growth quotients blow past the threshold") {
    auto rep = brjuno_partial_fast_growth(4000);
    CHECK(rep.verdict == BrjunoVerdict::likely_not_brjuno);
    CHECK(rep.partial_sums.back() > 1e3);
    // deterministic: rerun gives the identical sums
    auto rep2 = brjuno_partial_fast_growth(4000);
    CHECK(rep.partial_sums == rep2.partial_sums);
}

TEST_CASE("verdicts stable under N -> N+5") {
    double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK(brjuno_partial(golden, 25).verdict == BrjunoVerdict::likely_brjuno);
    CHECK(brjuno_partial_fast_growth(4005).verdict == BrjunoVerdict::likely_not_brjuno);
}
