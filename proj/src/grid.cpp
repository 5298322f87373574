#include "lcp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lcp {

namespace {

long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

GridConfig GridConfig::make(int n, int m, double c) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (!(c > 0.0)) throw std::invalid_argument("grid scale c must be positive");
    GridConfig cfg;
    cfg.n = n;
    cfg.m = m;
    cfg.c = c;
    const int q = 2 * m - 1;
    int r = std::max(1, static_cast<int>(std::floor(std::pow(static_cast<double>(n), 1.0 / q))));
    // fix float drift at exact powers
    while (ipow(r + 1, q) <= n) ++r;
    while (r > 1 && ipow(r, q) > n) --r;
    cfg.r = r;
    const long long rm = ipow(r, m);
    if (c == 1.0) {
        cfg.side = rm;
    } else {
        cfg.side = std::max<long>(1, static_cast<long>(std::ceil(c * static_cast<double>(rm) - 1e-12)));
    }
    return cfg;
}

const BoxEntry* Grid::find(int row, int col) const {
    auto it = boxes.find(key(row, col));
    return it == boxes.end() ? nullptr : &it->second;
}

Grid build_grid(const PointCloud& cloud, const GridConfig& config) {
    if (static_cast<int>(cloud.size()) != config.m)
        throw std::invalid_argument("cloud row count does not match config m");
    for (const auto& row : cloud)
        if (static_cast<int>(row.size()) != config.n)
            throw std::invalid_argument("cloud point count does not match config n");

    Grid grid;
    grid.config = config;
    const long side = config.side;
    auto band = [side](double coord) {
        long b = static_cast<long>(coord * static_cast<double>(side));
        return static_cast<int>(std::clamp<long>(b, 0, side - 1));
    };
    for (int i = 0; i < config.m; ++i) {
        for (int j = 0; j < config.n; ++j) {
            const Point& p = cloud[i][j];
            auto& entry = grid.boxes[grid.key(band(p.y), band(p.x))];
            if (entry.counts.empty()) {
                entry.counts.assign(config.m, 0);
                entry.reps.assign(config.m, -1);
            }
            if (entry.counts[i]++ == 0) entry.reps[i] = j;
        }
    }
    for (const auto& [k, entry] : grid.boxes) {
        if (*std::min_element(entry.counts.begin(), entry.counts.end()) >= 1)
            grid.full_boxes.push_back({static_cast<int>(k / side), static_cast<int>(k % side)});
    }
    std::sort(grid.full_boxes.begin(), grid.full_boxes.end());
    return grid;
}

Scattering scattering_from_order(const Grid& grid, const std::vector<BoxKey>& order) {
    std::vector<char> row_used(grid.config.side, 0), col_used(grid.config.side, 0);
    Scattering s;
    for (const BoxKey& b : order) {
        if (!row_used[b.row] && !col_used[b.col]) {
            row_used[b.row] = col_used[b.col] = 1;
            s.boxes.push_back(b);
        }
    }
    return s;
}

Scattering greedy_scattering(const Grid& grid, Rng& rng) {
    std::vector<BoxKey> order = grid.full_boxes;
    for (size_t i = order.size(); i > 1; --i) {
        std::uniform_int_distribution<size_t> d(0, i - 1);
        std::swap(order[i - 1], order[d(rng)]);
    }
    return scattering_from_order(grid, order);
}

Scattering max_scattering(const Grid& grid) {
    // rows and columns compacted to the ones that actually hold full boxes
    std::vector<int> rows, cols;
    for (const BoxKey& b : grid.full_boxes) {
        rows.push_back(b.row);
        cols.push_back(b.col);
    }
    auto compact = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    compact(rows);
    compact(cols);
    auto rank = [](const std::vector<int>& v, int x) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };

    std::vector<std::vector<int>> adj(rows.size());
    for (const BoxKey& b : grid.full_boxes)
        adj[rank(rows, b.row)].push_back(rank(cols, b.col));

    std::vector<int> match_col(cols.size(), -1);
    std::vector<int> visited(cols.size(), -1);
    auto augment = [&](auto&& self, int u, int stamp) -> bool {
        for (int v : adj[u]) {
            if (visited[v] == stamp) continue;
            visited[v] = stamp;
            if (match_col[v] < 0 || self(self, match_col[v], stamp)) {
                match_col[v] = u;
                return true;
            }
        }
        return false;
    };
    for (size_t u = 0; u < adj.size(); ++u) augment(augment, static_cast<int>(u), static_cast<int>(u));

    Scattering s;
    for (size_t v = 0; v < match_col.size(); ++v)
        if (match_col[v] >= 0) s.boxes.push_back({rows[match_col[v]], cols[v]});
    std::sort(s.boxes.begin(), s.boxes.end());
    return s;
}

LcpResult pattern_from_scattering(const Grid& grid, const Scattering& scattering,
                                  const PointCloud& cloud) {
    if (scattering.boxes.empty())
        throw std::invalid_argument("scattering must be non-empty");
    const int k = scattering.size();
    const int m = grid.config.m;

    std::vector<char> row_seen(grid.config.side, 0), col_seen(grid.config.side, 0);
    for (const BoxKey& b : scattering.boxes) {
        const BoxEntry* entry = grid.find(b.row, b.col);
        if (!entry || *std::min_element(entry->counts.begin(), entry->counts.end()) < 1)
            throw std::invalid_argument("scattering references a non-full box");
        if (row_seen[b.row]++ || col_seen[b.col]++)
            throw std::invalid_argument("scattering has a row or column collision");
    }

    // sort by column (x band); pattern value = rank of row (y band)
    std::vector<BoxKey> by_col = scattering.boxes;
    std::sort(by_col.begin(), by_col.end(),
              [](const BoxKey& a, const BoxKey& b) { return a.col < b.col; });
    std::vector<int> row_order(k);
    std::iota(row_order.begin(), row_order.end(), 0);
    std::sort(row_order.begin(), row_order.end(),
              [&](int a, int b) { return by_col[a].row < by_col[b].row; });
    std::vector<int> sigma(k);
    for (int rk = 0; rk < k; ++rk) sigma[row_order[rk]] = rk + 1;

    LcpResult res;
    res.length = k;
    res.pattern = Permutation::from_one_line(sigma);

    // witness per permutation: x-rank of the representative point in each box
    for (int i = 0; i < m; ++i) {
        const auto& pts = cloud[i];
        std::vector<int> order(pts.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : a < b;
        });
        std::vector<int> x_rank(pts.size());
        for (size_t pos = 0; pos < order.size(); ++pos)
            x_rank[order[pos]] = static_cast<int>(pos) + 1;
        Witness w;
        for (const BoxKey& b : by_col) {
            const BoxEntry* entry = grid.find(b.row, b.col);
            w.indices.push_back(x_rank[entry->reps[i]]);
        }
        // column bands are disjoint in x, so by_col order is ascending
        res.witnesses.push_back(std::move(w));
    }
    return res;
}

LcpResult heuristic_lcp(const PointCloud& cloud, const GridConfig& config,
                        ScatterMethod method, Rng& rng) {
    Grid grid = build_grid(cloud, config);
    Scattering s = method == ScatterMethod::greedy ? greedy_scattering(grid, rng)
                                                   : max_scattering(grid);
    if (s.boxes.empty()) {
        // no full box: any single point per permutation is a common pattern
        LcpResult res;
        res.length = 1;
        res.pattern = Permutation::identity(1);
        res.witnesses.assign(cloud.size(), Witness{{1}});
        return res;
    }
    return pattern_from_scattering(grid, s, cloud);
}

std::string dump_grid(const Grid& grid) {
    std::vector<std::pair<BoxKey, const BoxEntry*>> rows;
    rows.reserve(grid.boxes.size());
    for (const auto& [k, entry] : grid.boxes)
        rows.push_back({{static_cast<int>(k / grid.config.side),
                         static_cast<int>(k % grid.config.side)},
                        &entry});
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (const auto& [box, entry] : rows) {
        out += std::to_string(box.row) + ' ' + std::to_string(box.col);
        for (int c : entry->counts) out += ' ' + std::to_string(c);
        out += '\n';
    }
    return out;
}

}  // namespace lcp
