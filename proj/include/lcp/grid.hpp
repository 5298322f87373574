#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcp/lcp_exact.hpp"
#include "lcp/permutation.hpp"

namespace lcp {

/// Grid geometry for n points per permutation, m permutations.
/// r = floor(n^(1/(2m-1))), side = ceil(c * r^m) boxes per axis.
struct GridConfig {
    int n = 0;
    int m = 0;
    int r = 0;
    long side = 0;
    double c = 1.0;

    static GridConfig make(int n, int m, double c = 1.0);
};

struct BoxKey {
    int row = 0;  // y band
    int col = 0;  // x band
    bool operator==(const BoxKey&) const = default;
    bool operator<(const BoxKey& o) const { return row != o.row ? row < o.row : col < o.col; }
};

struct BoxEntry {
    std::vector<int> counts;  // per permutation index i
    std::vector<int> reps;    // lowest point index j per i, -1 if none
};

struct Grid {
    GridConfig config;
    std::unordered_map<std::int64_t, BoxEntry> boxes;  // key = row*side + col
    std::vector<BoxKey> full_boxes;                    // sorted by (row, col)

    std::int64_t key(int row, int col) const {
        return static_cast<std::int64_t>(row) * config.side + col;
    }
    const BoxEntry* find(int row, int col) const;
};

Grid build_grid(const PointCloud& cloud, const GridConfig& config);

/// Full boxes with pairwise distinct rows and distinct columns.
struct Scattering {
    std::vector<BoxKey> boxes;
    int size() const { return static_cast<int>(boxes.size()); }
};

/// The sequential process: visit boxes in the given order, keep each box
/// iff it conflicts with no kept box in row or column.
Scattering scattering_from_order(const Grid& grid, const std::vector<BoxKey>& order);

/// scattering_from_order under a uniformly random ordering of the full boxes.
Scattering greedy_scattering(const Grid& grid, Rng& rng);

/// Maximum-cardinality scattering via augmenting-path bipartite matching
/// (rows vs columns, one edge per full box).
Scattering max_scattering(const Grid& grid);

/// Common pattern induced by box centers, with one witness per permutation
/// assembled from a representative point per box.
LcpResult pattern_from_scattering(const Grid& grid, const Scattering& scattering,
                                  const PointCloud& cloud);

enum class ScatterMethod { greedy, matching };

/// build_grid -> scattering -> pattern extraction. Falls back to the
/// trivial length-1 pattern when no box is full.
LcpResult heuristic_lcp(const PointCloud& cloud, const GridConfig& config,
                        ScatterMethod method, Rng& rng);

/// Debug dump: one line "row col count_1 ... count_m" per occupied box,
/// sorted by (row, col). Format fixed for golden tests.
std::string dump_grid(const Grid& grid);

}  // namespace lcp
