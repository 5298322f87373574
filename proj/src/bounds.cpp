#include "lcp/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace lcp {

long upper_bound_expectation(int n, int m) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    const long double expnt = static_cast<long double>(m) / (2 * m - 1);
    long double v = expl(1.0L) * powl(static_cast<long double>(n), expnt);
    // snap near-integer values before ceiling (n=1024, m=3 hits exactly 64e)
    const long double nearest = roundl(v);
    if (fabsl(v - nearest) < 1e-9L) v = nearest;
    return static_cast<long>(ceill(v));
}

double tail_bound_log(int n, int m, int k) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (k < 1 || k > n) throw std::invalid_argument("k must be in 1..n");
    const double log_bound = static_cast<double>(m) * k * std::log(static_cast<double>(n)) -
                             (2.0 * m - 1.0) * std::lgamma(static_cast<double>(k) + 1.0);
    return std::min(0.0, log_bound);
}

double lower_constant(int m, double c) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
    return c / (1.0 + std::pow(c, 2.0 * m - 1.0));
}

double optimal_c(int m) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    return std::pow(1.0 / (2.0 * m - 2.0), 1.0 / (2.0 * m - 1.0));
}

EulerTrace euler_trace(long long R, double epsilon) {
    if (R < 2) throw std::invalid_argument("R must be >= 2");
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("epsilon must be in (0,1)");
    const long long K = static_cast<long long>(std::floor((1.0 - epsilon) * static_cast<double>(R)));
    EulerTrace trace;
    trace.R = R;
    trace.epsilon = epsilon;
    trace.steps.reserve(K + 1);
    double y = 0.0;
    trace.steps.push_back(y);
    for (long long k = 1; k <= K; ++k) {
        y += (1.0 - y) * (1.0 - y) / static_cast<double>(R);
        trace.steps.push_back(y);
        const double x = static_cast<double>(k) / static_cast<double>(R);
        trace.max_deviation = std::max(trace.max_deviation, std::abs(y - x / (x + 1.0)));
    }
    trace.final_value = y;
    return trace;
}

std::pair<double, double> talagrand_interval(double b, int m, double delta) {
    if (b < 1.0) throw std::invalid_argument("b must be >= 1");
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("delta must be in (0,1)");
    const double t = 2.0 * std::sqrt(std::log(1.0 / delta));
    const double low = b - t * std::sqrt(m * b);
    const double high = b + t * std::sqrt(static_cast<double>(m) * m * t * t + m * b);
    return {low, high};
}

double mean_median_gap_bound(double expectation_estimate, int m) {
    if (expectation_estimate < 0.0)
        throw std::invalid_argument("expectation estimate must be non-negative");
    return 40.0 * std::sqrt(m * expectation_estimate);
}

BoundsReport bounds_report(int n, int m, double grid_scale) {
    BoundsReport rep;
    rep.n = n;
    rep.m = m;
    rep.upper_expectation = upper_bound_expectation(n, m);
    rep.optimal_c = optimal_c(m);
    rep.grid_scale = grid_scale;
    rep.lower_liminf_constant = lower_constant(m, grid_scale);
    rep.exponent = static_cast<double>(m) / (2 * m - 1);
    return rep;
}

}  // namespace lcp
