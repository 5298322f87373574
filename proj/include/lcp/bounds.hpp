#pragma once

#include <utility>
#include <vector>

namespace lcp {

struct BoundsReport {
    int n = 0;
    int m = 0;
    long upper_expectation = 0;       // ceil(e * n^(m/(2m-1)))
    double lower_liminf_constant = 0; // c/(1 + c^(2m-1)) at the chosen c
    double optimal_c = 0;
    double exponent = 0;              // m/(2m-1)
    double grid_scale = 1.0;          // the chosen c
};

long upper_bound_expectation(int n, int m);

/// ln of min(1, n^(mk)/(k!)^(2m-1)).
double tail_bound_log(int n, int m, int k);

/// c/(1 + c^(2m-1)).
double lower_constant(int m, double c);

/// (1/(2m-2))^(1/(2m-1)), the maximizer of lower_constant(m, .).
double optimal_c(int m);

struct EulerTrace {
    long long R = 0;
    double epsilon = 0;
    std::vector<double> steps;  // y_0 .. y_K, K = floor((1-eps)*R)
    double final_value = 0;
    double max_deviation = 0;   // max_k |y_k - (k/R)/(k/R + 1)|
};

/// Iterate y_{k+1} = y_k + (1-y_k)^2 / R from y_0 = 0.
EulerTrace euler_trace(long long R, double epsilon);

/// Concentration window [b - t*sqrt(mb), b + t*sqrt(m^2 t^2 + mb)] with
/// t = 2*sqrt(ln(1/delta)).
std::pair<double, double> talagrand_interval(double b, int m, double delta);

/// 40*sqrt(m*E).
double mean_median_gap_bound(double expectation_estimate, int m);

BoundsReport bounds_report(int n, int m, double grid_scale);

}  // namespace lcp
