#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcp/bounds.hpp"

using namespace lcp;

TEST_CASE("upper_bound_expectation") {
    CHECK(upper_bound_expectation(100, 2) == 59);   // ceil(e * 100^(2/3)) = ceil(58.565)
    CHECK(upper_bound_expectation(1024, 3) == 174); // 1024^(3/5) = 64 exactly, ceil(64e)
    CHECK(upper_bound_expectation(1, 2) == 3);      // ceil(e)
    CHECK(upper_bound_expectation(1, 7) == 3);
    CHECK_THROWS_AS(upper_bound_expectation(10, 1), std::invalid_argument);
    CHECK_THROWS_AS(upper_bound_expectation(0, 2), std::invalid_argument);

    // non-decreasing in n, agrees with extended-precision evaluation
    long prev = 0;
    for (int n : {1, 2, 10, 50, 100, 1000, 10000, 100000}) {
        const long v = upper_bound_expectation(n, 2);
        CHECK(v >= prev);
        prev = v;
        const long double ref = ceill(expl(1.0L) * powl(n, 2.0L / 3.0L));
        CHECK(v == static_cast<long>(ref));
    }
}

TEST_CASE("tail_bound_log") {
    // n=100, m=2, k=60: log10 = 240 - 3*log10(60!) ~ -5.76
    const double log10_bound = tail_bound_log(100, 2, 60) / std::log(10.0);
    CHECK(log10_bound == doctest::Approx(-5.759).epsilon(1e-3));

    CHECK(tail_bound_log(100, 2, 1) == 0.0);  // vacuous at k=1
    CHECK_THROWS_AS(tail_bound_log(10, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(tail_bound_log(10, 2, 11), std::invalid_argument);

    // probability form in (0,1], eventually non-increasing in k
    double prev = 1.0;
    bool past_peak = false;
    for (int k = 1; k <= 100; ++k) {
        const double p = std::exp(tail_bound_log(100, 2, k));
        CHECK(p > 0.0);
        CHECK(p <= 1.0);
        if (p < prev) past_peak = true;
        if (past_peak) CHECK(p <= prev);
        prev = p;
    }
}

TEST_CASE("lower_constant and optimal_c") {
    CHECK(lower_constant(2, 1.0) == 0.5);
    for (int m = 2; m <= 12; ++m) CHECK(lower_constant(m, 1.0) == 0.5);

    CHECK(optimal_c(2) == doctest::Approx(std::pow(0.5, 1.0 / 3.0)).epsilon(1e-12));
    CHECK(lower_constant(2, optimal_c(2)) == doctest::Approx(0.52913).epsilon(1e-4));
    // m=3: (4/5) * (1/4)^(1/5)
    CHECK(lower_constant(3, optimal_c(3)) ==
          doctest::Approx(0.8 * std::pow(0.25, 0.2)).epsilon(1e-12));
    CHECK(lower_constant(3, optimal_c(3)) == doctest::Approx(0.6063).epsilon(1e-3));

    CHECK_THROWS_AS(lower_constant(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(optimal_c(1), std::invalid_argument);

    // local maximality at optimal_c and growth toward 1
    for (int m = 2; m <= 10; ++m) {
        const double c = optimal_c(m);
        const double at_opt = lower_constant(m, c);
        CHECK(lower_constant(m, c * 1.01) <= at_opt);
        CHECK(lower_constant(m, c * 0.99) <= at_opt);
    }
    // slow convergence toward 1
    CHECK(lower_constant(50, optimal_c(50)) == doctest::Approx(0.94510).epsilon(1e-4));
    CHECK(lower_constant(100, optimal_c(100)) >= 0.95);
    CHECK(lower_constant(100, optimal_c(100)) > lower_constant(50, optimal_c(50)));
}

TEST_CASE("lower_constant unique maximum on a log grid") {
    for (int m : {2, 3, 5}) {
        const double copt = optimal_c(m);
        double best = 0;
        double best_c = 0;
        for (double lc = -2.0; lc <= 2.0; lc += 0.01) {
            const double c = std::pow(10.0, lc);
            const double v = lower_constant(m, c);
            if (v > best) {
                best = v;
                best_c = c;
            }
        }
        CHECK(best <= lower_constant(m, copt) + 1e-9);
        CHECK(std::abs(std::log(best_c / copt)) < 0.05);
    }
}

TEST_CASE("euler_trace") {
    // one hand-computed step
    auto trace = euler_trace(2, 0.5);
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[1] == 0.5);

    CHECK_THROWS_AS(euler_trace(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(euler_trace(100, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(euler_trace(100, 1.0), std::invalid_argument);

    // limit at epsilon = 0.1: (1-eps)/(2-eps) = 0.9/1.9
    trace = euler_trace(1000000, 0.1);
    CHECK(std::abs(trace.final_value - 0.9 / 1.9) <= 1e-4);

    // monotone increasing, bounded in [0,1)
    for (auto [R, eps] : {std::pair<long long, double>{100, 0.2}, {5000, 0.05}}) {
        const auto t = euler_trace(R, eps);
        for (size_t i = 1; i < t.steps.size(); ++i) {
            CHECK(t.steps[i] > t.steps[i - 1]);
            CHECK(t.steps[i] < 1.0);
        }
    }

    // deviation from x/(x+1) shrinks as O(1/R)
    const double dev5 = euler_trace(100000, 0.1).max_deviation;
    const double dev6 = euler_trace(1000000, 0.1).max_deviation;
    const double ratio = dev5 / dev6;
    CHECK(ratio >= 5.0);
    CHECK(ratio <= 20.0);
}

TEST_CASE("talagrand_interval") {
    // delta = 1/e gives t = 2
    {
        const auto [low, high] = talagrand_interval(100.0, 2, std::exp(-1.0));
        CHECK(100.0 - low == doctest::Approx(2.0 * std::sqrt(200.0)).epsilon(1e-12));
        CHECK(high > 100.0);
    }
    // doubling b scales the lower gap by sqrt(2)
    {
        const auto [low1, _u1] = talagrand_interval(100.0, 2, std::exp(-1.0));
        const auto [low2, _u2] = talagrand_interval(200.0, 2, std::exp(-1.0));
        CHECK((200.0 - low2) / (100.0 - low1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
    {
        const auto [low, high] = talagrand_interval(100.0, 2, 0.01);
        const double t = 2.0 * std::sqrt(std::log(100.0));
        CHECK(t == doctest::Approx(4.2919).epsilon(1e-4));
        CHECK(100.0 - low == doctest::Approx(60.70).epsilon(1e-3));
        CHECK(high - 100.0 == doctest::Approx(t * std::sqrt(4 * t * t + 200.0)).epsilon(1e-12));
    }
    // width / sqrt(b) roughly constant across decades
    {
        std::vector<double> ratios;
        for (double b : {100.0, 1000.0, 10000.0}) {
            const auto [low, high] = talagrand_interval(b, 2, 0.01);
            ratios.push_back((high - low) / std::sqrt(b));
        }
        for (double r : ratios) {
            CHECK(r >= ratios.back() * 0.75);
            CHECK(r <= ratios.back() * 1.25);
        }
    }
    CHECK_THROWS_AS(talagrand_interval(0.5, 2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(talagrand_interval(10.0, 2, 1.5), std::invalid_argument);
}

TEST_CASE("mean_median_gap_bound") {
    CHECK(mean_median_gap_bound(0.0, 2) == 0.0);
    CHECK(mean_median_gap_bound(100.0, 2) == doctest::Approx(565.685).epsilon(1e-4));
    CHECK_THROWS_AS(mean_median_gap_bound(-1.0, 2), std::invalid_argument);
}

TEST_CASE("exponent decreases toward 1/2") {
    double prev = 1.0;
    for (int m = 2; m <= 30; ++m) {
        const double e = static_cast<double>(m) / (2 * m - 1);
        CHECK(e < prev);
        CHECK(e > 0.5);
        CHECK(e <= 2.0 / 3.0);
        prev = e;
    }
    CHECK(bounds_report(100, 2, 1.0).exponent == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("bounds_report assembles fields") {
    const auto rep = bounds_report(100, 2, optimal_c(2));
    CHECK(rep.n == 100);
    CHECK(rep.m == 2);
    CHECK(rep.upper_expectation == 59);
    CHECK(rep.optimal_c == doctest::Approx(0.7937).epsilon(1e-3));
    CHECK(rep.lower_liminf_constant == doctest::Approx(0.52913).epsilon(1e-4));
    CHECK(rep.lower_liminf_constant > 0.0);
    CHECK(rep.lower_liminf_constant <= 1.0);
}
