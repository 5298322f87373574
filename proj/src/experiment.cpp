#include "lcp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "lcp/bounds.hpp"
#include "lcp/lcp_exact.hpp"

namespace lcp {

std::string method_name(Method method) {
    switch (method) {
        case Method::exact: return "exact";
        case Method::greedy: return "greedy";
        case Method::matching: return "matching";
        case Method::monotone: return "monotone";
    }
    throw std::invalid_argument("unknown method");
}

Method parse_method(const std::string& name) {
    if (name == "exact") return Method::exact;
    if (name == "greedy") return Method::greedy;
    if (name == "matching") return Method::matching;
    if (name == "monotone") return Method::monotone;
    throw std::invalid_argument("invalid method: " + name);
}

void validate_config(const ExperimentConfig& config) {
    if (config.n_values.empty())
        throw std::invalid_argument("n_values must be non-empty");
    for (int n : config.n_values)
        if (n < 1) throw std::invalid_argument("every n must be >= 1");
    if (config.m < 2) throw std::invalid_argument("m must be >= 2");
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(config.epsilon > 0.0) || !(config.epsilon < 1.0))
        throw std::invalid_argument("epsilon must be in (0,1)");
    if (!config.grid_scale_auto && !(config.grid_scale > 0.0))
        throw std::invalid_argument("grid scale must be positive");
    if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (config.format != "csv" && config.format != "json")
        throw std::invalid_argument("format must be csv or json");
}

double effective_grid_scale(const ExperimentConfig& config) {
    return config.grid_scale_auto ? optimal_c(config.m) : config.grid_scale;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t n, std::uint64_t trial_index) {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ (n * 0xD6E8FEB86659FD93ULL));
    h = splitmix64(h ^ trial_index);
    return h;
}

TrialRecord run_trial(int n, int m, Method method, std::uint64_t seed, double grid_scale) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    PointCloud cloud = random_cloud(n, m, rng);
    std::vector<Permutation> perms;
    perms.reserve(m);
    for (const auto& row : cloud) perms.push_back(permutation_from_points(row));

    TrialRecord rec;
    rec.n = n;
    rec.m = m;
    rec.seed = seed;
    rec.method = method;

    switch (method) {
        case Method::exact:
            rec.length = lcp_exact(perms).length;
            break;
        case Method::monotone:
            rec.length = common_monotone_length(perms);
            break;
        case Method::greedy:
        case Method::matching: {
            const GridConfig cfg = GridConfig::make(n, m, grid_scale);
            const ScatterMethod sm =
                method == Method::greedy ? ScatterMethod::greedy : ScatterMethod::matching;
            const LcpResult res = heuristic_lcp(cloud, cfg, sm, rng);
            for (int i = 0; i < m; ++i)
                if (!witness_certifies(perms[i], res.witnesses[i], res.pattern))
                    throw std::logic_error("heuristic witness failed verification");
            rec.length = res.length;
            rec.grid_side = cfg.side;
            break;
        }
    }
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

SummaryStats summarize(const std::vector<TrialRecord>& records, int m) {
    SummaryStats stats;
    std::vector<int> ns;
    for (const auto& r : records) ns.push_back(r.n);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    const double expnt = static_cast<double>(m) / (2 * m - 1);
    for (int n : ns) {
        std::vector<double> lens;
        for (const auto& r : records)
            if (r.n == n) lens.push_back(r.length);
        std::sort(lens.begin(), lens.end());
        NSummary s;
        s.n = n;
        s.count = static_cast<int>(lens.size());
        double sum = 0;
        for (double v : lens) sum += v;
        s.mean = sum / s.count;
        double ss = 0;
        for (double v : lens) ss += (v - s.mean) * (v - s.mean);
        s.stddev = s.count > 1 ? std::sqrt(ss / (s.count - 1)) : 0.0;
        s.median = s.count % 2 ? lens[s.count / 2]
                               : 0.5 * (lens[s.count / 2 - 1] + lens[s.count / 2]);
        s.min = lens.front();
        s.max = lens.back();
        s.normalized_mean = s.mean / std::pow(static_cast<double>(n), expnt);
        stats.per_n.push_back(s);
    }

    // log-log OLS for the scaling exponent
    const size_t k = stats.per_n.size();
    if (k >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& s : stats.per_n) {
            const double x = std::log(static_cast<double>(s.n)), y = std::log(s.mean);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double denom = k * sxx - sx * sx;
        stats.fitted_exponent = (k * sxy - sx * sy) / denom;
        const double intercept = (sy - stats.fitted_exponent * sx) / k;
        double sse = 0;
        for (const auto& s : stats.per_n) {
            const double x = std::log(static_cast<double>(s.n));
            const double resid = std::log(s.mean) - (intercept + stats.fitted_exponent * x);
            sse += resid * resid;
        }
        stats.exponent_stderr =
            k > 2 ? std::sqrt(sse / (k - 2) / (sxx - sx * sx / k)) : 0.0;
    } else {
        stats.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
        stats.exponent_stderr = std::numeric_limits<double>::quiet_NaN();
    }
    return stats;
}

MonteCarloOutput monte_carlo(const ExperimentConfig& config) {
    validate_config(config);
    const double scale = effective_grid_scale(config);

    struct Task {
        int n;
        int trial;
    };
    std::vector<Task> tasks;
    for (int n : config.n_values)
        for (int t = 0; t < config.trials; ++t) tasks.push_back({n, t});

    std::vector<TrialRecord> records(tasks.size());
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                const auto [n, t] = tasks[i];
                TrialRecord rec =
                    run_trial(n, config.m, config.method,
                              derive_seed(config.base_seed, n, t), scale);
                rec.trial = t;
                records[i] = rec;
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    const int nthreads = std::min<int>(config.workers, static_cast<int>(tasks.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    std::sort(records.begin(), records.end(), [](const TrialRecord& a, const TrialRecord& b) {
        return a.n != b.n ? a.n < b.n : a.trial < b.trial;
    });
    return {records, summarize(records, config.m)};
}

ConcentrationReport concentration_experiment(const ExperimentConfig& config) {
    if (config.method == Method::exact)
        throw std::invalid_argument("concentration experiment requires a heuristic method");
    MonteCarloOutput out = monte_carlo(config);
    ConcentrationReport report;
    for (const auto& s : out.summary.per_n) {
        ConcentrationRow row;
        row.n = s.n;
        row.mean = s.mean;
        row.median = s.median;
        row.stddev = s.stddev;
        row.ratio = s.stddev / std::sqrt(config.m * s.mean);
        row.gap = std::abs(s.mean - s.median);
        row.gap_bound = mean_median_gap_bound(s.mean, config.m);
        report.max_ratio = std::max(report.max_ratio, row.ratio);
        report.rows.push_back(row);
    }
    return report;
}

std::vector<LimitProbeRow> limit_constant_probe(const ExperimentConfig& base,
                                                const std::vector<int>& m_values) {
    if (m_values.empty())
        throw std::invalid_argument("m_values must be non-empty");
    if (!std::is_sorted(m_values.begin(), m_values.end()))
        throw std::invalid_argument("m_values must be ascending");
    if (base.method == Method::exact)
        throw std::invalid_argument("limit probe requires a heuristic method");
    validate_config(base);
    const int n = *std::max_element(base.n_values.begin(), base.n_values.end());
    std::vector<LimitProbeRow> rows;
    for (int m : m_values) {
        ExperimentConfig cfg = base;
        cfg.m = m;
        cfg.n_values = {n};
        MonteCarloOutput out = monte_carlo(cfg);
        const NSummary& s = out.summary.per_n.front();
        rows.push_back({m, n, s.mean, s.normalized_mean});
    }
    return rows;
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
    std::string out = "n,m,trial,seed,method,length,grid_side,runtime_ms\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.trial) +
               ',' + std::to_string(r.seed) + ',' + method_name(r.method) + ',' +
               std::to_string(r.length) + ',' + std::to_string(r.grid_side) + ',' +
               format_double(r.runtime_ms) + '\n';
    }
    return out;
}

std::vector<TrialRecord> records_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "n,m,trial,seed,method,length,grid_side,runtime_ms")
        throw std::invalid_argument("bad CSV header");
    std::vector<TrialRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        size_t pos = 0;
        while (true) {
            const size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != 8)
            throw std::invalid_argument("bad CSV row: " + line);
        TrialRecord r;
        r.n = std::stoi(fields[0]);
        r.m = std::stoi(fields[1]);
        r.trial = std::stoi(fields[2]);
        r.seed = std::stoull(fields[3]);
        r.method = parse_method(fields[4]);
        r.length = std::stoi(fields[5]);
        r.grid_side = std::stol(fields[6]);
        r.runtime_ms = std::stod(fields[7]);
        records.push_back(r);
    }
    return records;
}

std::string records_to_json(const std::vector<TrialRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back({{"n", r.n},
                       {"m", r.m},
                       {"trial", r.trial},
                       {"seed", r.seed},
                       {"method", method_name(r.method)},
                       {"length", r.length},
                       {"grid_side", r.grid_side},
                       {"runtime_ms", r.runtime_ms}});
    }
    return arr.dump(2) + "\n";
}

std::string summary_to_json(const SummaryStats& summary) {
    nlohmann::json per_n = nlohmann::json::array();
    for (const auto& s : summary.per_n) {
        per_n.push_back({{"n", s.n},
                         {"count", s.count},
                         {"mean", s.mean},
                         {"stddev", s.stddev},
                         {"median", s.median},
                         {"min", s.min},
                         {"max", s.max},
                         {"normalized_mean", s.normalized_mean}});
    }
    nlohmann::json obj = {{"per_n", per_n}};
    if (!std::isnan(summary.fitted_exponent)) {
        obj["fitted_exponent"] = summary.fitted_exponent;
        obj["exponent_stderr"] = summary.exponent_stderr;
    }
    return obj.dump(2) + "\n";
}

ExperimentConfig config_from_json(const std::string& json_text) {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "n_values") cfg.n_values = value.get<std::vector<int>>();
        else if (key == "m") cfg.m = value.get<int>();
        else if (key == "trials") cfg.trials = value.get<int>();
        else if (key == "base_seed") cfg.base_seed = value.get<std::uint64_t>();
        else if (key == "method") cfg.method = parse_method(value.get<std::string>());
        else if (key == "grid_scale") {
            if (value.is_string() && value.get<std::string>() == "auto")
                cfg.grid_scale_auto = true;
            else
                cfg.grid_scale = value.get<double>();
        } else if (key == "epsilon") cfg.epsilon = value.get<double>();
        else if (key == "format") cfg.format = value.get<std::string>();
        else if (key == "out") cfg.out = value.get<std::string>();
        else if (key == "workers") cfg.workers = value.get<int>();
        else throw std::invalid_argument("unknown config field: " + key);
    }
    return cfg;
}

}  // namespace lcp
