#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcp/grid.hpp"
#include "lcp/permutation.hpp"

namespace lcp {

enum class Method { exact, greedy, matching, monotone };

std::string method_name(Method method);
Method parse_method(const std::string& name);

struct ExperimentConfig {
    std::vector<int> n_values;
    int m = 2;
    int trials = 1;
    std::uint64_t base_seed = 0;
    Method method = Method::matching;
    double grid_scale = 1.0;
    bool grid_scale_auto = false;  // use optimal_c(m)
    double epsilon = 0.1;
    std::string format = "csv";
    std::string out;
    int workers = 1;
};

void validate_config(const ExperimentConfig& config);
double effective_grid_scale(const ExperimentConfig& config);

struct TrialRecord {
    int n = 0;
    int m = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    Method method = Method::matching;
    int length = 0;
    long grid_side = 0;  // 0 for non-grid methods
    double runtime_ms = 0.0;
};

struct NSummary {
    int n = 0;
    int count = 0;
    double mean = 0, stddev = 0, median = 0, min = 0, max = 0;
    double normalized_mean = 0;  // mean / n^(m/(2m-1))
};

struct SummaryStats {
    std::vector<NSummary> per_n;
    double fitted_exponent = 0;  // log-log OLS slope, NaN when < 2 sizes
    double exponent_stderr = 0;
};

/// Counter-based seed for trial (n, trial_index) under base_seed. Stable
/// across releases; splitmix64 mixing of the triple.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t n, std::uint64_t trial_index);

/// One Monte Carlo trial: seeded cloud -> m permutations -> chosen method.
/// Heuristic lengths are witness-verified before being recorded.
TrialRecord run_trial(int n, int m, Method method, std::uint64_t seed, double grid_scale);

SummaryStats summarize(const std::vector<TrialRecord>& records, int m);

struct MonteCarloOutput {
    std::vector<TrialRecord> records;  // sorted by (n, trial)
    SummaryStats summary;
};

MonteCarloOutput monte_carlo(const ExperimentConfig& config);

struct ConcentrationRow {
    int n = 0;
    double mean = 0, median = 0, stddev = 0;
    double ratio = 0;      // stddev / sqrt(m * mean)
    double gap = 0;        // |mean - median|
    double gap_bound = 0;  // 40*sqrt(m*mean)
};

struct ConcentrationReport {
    std::vector<ConcentrationRow> rows;
    double max_ratio = 0;
};

ConcentrationReport concentration_experiment(const ExperimentConfig& config);

struct LimitProbeRow {
    int m = 0;
    int n = 0;
    double mean = 0;
    double normalized_mean = 0;
};

/// Normalized means per m at the largest configured n. Descriptive only.
std::vector<LimitProbeRow> limit_constant_probe(const ExperimentConfig& base,
                                                const std::vector<int>& m_values);

/// Exact schema: n,m,trial,seed,method,length,grid_side,runtime_ms.
/// Floats printed as the shortest round-tripping decimal.
std::string records_to_csv(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> records_from_csv(const std::string& csv);
std::string records_to_json(const std::vector<TrialRecord>& records);
std::string summary_to_json(const SummaryStats& summary);

/// JSON object mirroring ExperimentConfig field names; unknown fields rejected.
ExperimentConfig config_from_json(const std::string& json_text);

}  // namespace lcp
