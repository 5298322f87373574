#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcp/bounds.hpp"
#include "lcp/experiment.hpp"
#include "lcp/grid.hpp"
#include "lcp/lcp_exact.hpp"
#include "lcp/permutation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitSizeGuard = 3;

// Accepts either space-separated one-line notation ("1 5 3 6 4 2") or the
// compact digit form ("153642", usable for n <= 9).
lcp::Permutation parse_perm_arg(const std::string& arg) {
    if (arg.find(' ') == std::string::npos && arg.size() > 1) {
        std::vector<int> vals;
        for (char ch : arg) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("malformed permutation: " + arg);
            vals.push_back(ch - '0');
        }
        return lcp::Permutation::from_one_line(std::move(vals));
    }
    return lcp::parse_one_line(arg);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

struct SharedOpts {
    std::vector<int> n_values;
    int m = 2;
    int trials = 1;
    std::uint64_t seed = 0;
    std::string method = "matching";
    double epsilon = 0.1;
    std::string grid_scale = "1";
    std::string format = "csv";
    std::string out;
    int workers = 1;
    std::string config_file;

    bool n_set = false, m_set = false, trials_set = false, seed_set = false;
    bool method_set = false, epsilon_set = false, scale_set = false;
    bool format_set = false, out_set = false, workers_set = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--config", config_file, "JSON config file");
        cmd->add_option("--n", n_values, "instance sizes")->delimiter(',')
            ->each([this](const std::string&) { n_set = true; });
        cmd->add_option("--m", m, "number of permutations")
            ->each([this](const std::string&) { m_set = true; });
        cmd->add_option("--trials", trials, "trials per n")
            ->each([this](const std::string&) { trials_set = true; });
        cmd->add_option("--seed", seed, "base seed")
            ->each([this](const std::string&) { seed_set = true; });
        cmd->add_option("--method", method, "exact|greedy|matching|monotone")
            ->each([this](const std::string&) { method_set = true; });
        cmd->add_option("--epsilon", epsilon, "truncation parameter")
            ->each([this](const std::string&) { epsilon_set = true; });
        cmd->add_option("--grid-scale", grid_scale, "grid scale constant c, or 'auto'")
            ->each([this](const std::string&) { scale_set = true; });
        cmd->add_option("--format", format, "csv|json")
            ->each([this](const std::string&) { format_set = true; });
        cmd->add_option("--out", out, "output path (default stdout)")
            ->each([this](const std::string&) { out_set = true; });
        cmd->add_option("--workers", workers, "worker count")
            ->each([this](const std::string&) { workers_set = true; });
    }

    // File config first, CLI flags override.
    lcp::ExperimentConfig build() const {
        lcp::ExperimentConfig cfg;
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            if (!in)
                throw std::invalid_argument("cannot open config file: " + config_file);
            std::stringstream buf;
            buf << in.rdbuf();
            cfg = lcp::config_from_json(buf.str());
        }
        if (n_set || cfg.n_values.empty()) cfg.n_values = n_values;
        if (m_set) cfg.m = m;
        if (trials_set) cfg.trials = trials;
        if (seed_set) cfg.base_seed = seed;
        if (method_set) cfg.method = lcp::parse_method(method);
        if (epsilon_set) cfg.epsilon = epsilon;
        if (scale_set) {
            if (grid_scale == "auto") {
                cfg.grid_scale_auto = true;
            } else {
                cfg.grid_scale_auto = false;
                cfg.grid_scale = std::stod(grid_scale);
            }
        }
        if (format_set) cfg.format = format;
        if (out_set) cfg.out = out;
        if (workers_set) cfg.workers = workers;
        if (cfg.n_values.empty()) cfg.n_values = {100};
        return cfg;
    }
};

void emit_records(const lcp::ExperimentConfig& cfg, const lcp::MonteCarloOutput& out) {
    if (cfg.format == "json") {
        write_output(cfg.out, lcp::records_to_json(out.records));
    } else {
        write_output(cfg.out, lcp::records_to_csv(out.records));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest-common-pattern toolkit"};
    app.require_subcommand(1);

    // contains HOST PATTERN
    auto* contains_cmd = app.add_subcommand("contains", "test pattern containment");
    std::string host_arg, pattern_arg;
    contains_cmd->add_option("host", host_arg, "host permutation")->required();
    contains_cmd->add_option("pattern", pattern_arg, "pattern permutation")->required();

    // lcp PERM...
    auto* lcp_cmd = app.add_subcommand("lcp", "exact longest common pattern");
    std::vector<std::string> perm_args;
    lcp_cmd->add_option("perms", perm_args, "two or more permutations")->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate random permutations");
    SharedOpts gen_opts;
    bool geometric = false;
    gen_cmd->add_option("--n", gen_opts.n_values, "length")->required();
    gen_cmd->add_option("--m", gen_opts.m, "how many permutations");
    gen_cmd->add_option("--seed", gen_opts.seed, "seed");
    gen_cmd->add_flag("--geometric", geometric, "induce from uniform points");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds report");
    int bounds_n = 0, bounds_m = 2, bounds_k = 0;
    std::string bounds_scale = "1";
    bounds_cmd->add_option("--n", bounds_n, "instance size")->required();
    bounds_cmd->add_option("--m", bounds_m, "number of permutations");
    bounds_cmd->add_option("--k", bounds_k, "tail bound evaluation point");
    bounds_cmd->add_option("--grid-scale", bounds_scale, "c, or 'auto'");

    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo trials");
    SharedOpts sim_opts;
    sim_opts.add_to(simulate_cmd);

    auto* scaling_cmd = app.add_subcommand("scaling", "scaling-exponent study");
    SharedOpts scaling_opts;
    scaling_opts.add_to(scaling_cmd);

    auto* conc_cmd = app.add_subcommand("concentration", "concentration study");
    SharedOpts conc_opts;
    conc_opts.add_to(conc_cmd);

    auto* probe_cmd = app.add_subcommand("limit-probe", "normalized means across m");
    SharedOpts probe_opts;
    std::vector<int> probe_ms{2, 3};
    probe_opts.add_to(probe_cmd);
    probe_cmd->add_option("--m-values", probe_ms, "ascending m list")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (contains_cmd->parsed()) {
            const auto host = parse_perm_arg(host_arg);
            const auto pattern = parse_perm_arg(pattern_arg);
            if (auto w = lcp::contains_pattern(host, pattern)) {
                std::cout << "witness:";
                for (int idx : w->indices) std::cout << ' ' << idx;
                std::cout << '\n';
            } else {
                std::cout << "none\n";
            }
        } else if (lcp_cmd->parsed()) {
            std::vector<lcp::Permutation> perms;
            for (const auto& a : perm_args) perms.push_back(parse_perm_arg(a));
            const lcp::LcpResult res = lcp::lcp_exact(perms);
            std::cout << "length: " << res.length << '\n'
                      << "pattern: " << lcp::to_one_line(res.pattern) << '\n';
            for (size_t i = 0; i < res.witnesses.size(); ++i) {
                std::cout << "witness " << i + 1 << ':';
                for (int idx : res.witnesses[i].indices) std::cout << ' ' << idx;
                std::cout << '\n';
            }
        } else if (gen_cmd->parsed()) {
            if (gen_opts.n_values.size() != 1 || gen_opts.n_values[0] < 1)
                throw std::invalid_argument("gen needs one --n >= 1");
            const int n = gen_opts.n_values[0];
            lcp::Rng rng(gen_opts.seed);
            for (int i = 0; i < gen_opts.m && gen_opts.m >= 1; ++i) {
                const lcp::Permutation p =
                    geometric ? lcp::permutation_from_points(lcp::random_cloud(n, 1, rng)[0])
                              : lcp::random_permutation(n, rng);
                std::cout << lcp::to_one_line(p) << '\n';
            }
        } else if (bounds_cmd->parsed()) {
            double scale = 1.0;
            if (bounds_scale == "auto")
                scale = lcp::optimal_c(bounds_m);
            else
                scale = std::stod(bounds_scale);
            const lcp::BoundsReport rep = lcp::bounds_report(bounds_n, bounds_m, scale);
            nlohmann::json j = {{"n", rep.n},
                                {"m", rep.m},
                                {"upper_expectation", rep.upper_expectation},
                                {"lower_liminf_constant", rep.lower_liminf_constant},
                                {"optimal_c", rep.optimal_c},
                                {"exponent", rep.exponent},
                                {"grid_scale", rep.grid_scale}};
            if (bounds_k >= 1) {
                j["k"] = bounds_k;
                j["tail_bound_log"] = lcp::tail_bound_log(bounds_n, bounds_m, bounds_k);
            }
            std::cout << j.dump(2) << '\n';
        } else if (simulate_cmd->parsed()) {
            const auto cfg = sim_opts.build();
            emit_records(cfg, lcp::monte_carlo(cfg));
        } else if (scaling_cmd->parsed()) {
            const auto cfg = scaling_opts.build();
            const auto out = lcp::monte_carlo(cfg);
            write_output(cfg.out, lcp::summary_to_json(out.summary));
        } else if (conc_cmd->parsed()) {
            const auto cfg = conc_opts.build();
            const auto report = lcp::concentration_experiment(cfg);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : report.rows) {
                rows.push_back({{"n", r.n},
                                {"mean", r.mean},
                                {"median", r.median},
                                {"stddev", r.stddev},
                                {"ratio", r.ratio},
                                {"gap", r.gap},
                                {"gap_bound", r.gap_bound}});
            }
            nlohmann::json j = {{"rows", rows}, {"max_ratio", report.max_ratio}};
            write_output(cfg.out, j.dump(2) + "\n");
        } else if (probe_cmd->parsed()) {
            const auto cfg = probe_opts.build();
            const auto rows = lcp::limit_constant_probe(cfg, probe_ms);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows) {
                arr.push_back({{"m", r.m},
                               {"n", r.n},
                               {"mean", r.mean},
                               {"normalized_mean", r.normalized_mean}});
            }
            write_output(cfg.out, arr.dump(2) + "\n");
        }
    } catch (const lcp::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
