#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace lcp {

/// A permutation of {1..n} in one-line notation.
class Permutation {
public:
    static Permutation from_one_line(std::vector<int> values);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(vals_.size()); }
    int operator[](int i) const { return vals_[i]; }  // 0-based position
    const std::vector<int>& values() const { return vals_; }

    Permutation reversed() const;     // flip positions
    Permutation complemented() const; // v -> n+1-v
    Permutation inverted() const;     // group inverse

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return vals_ < o.vals_; }

private:
    explicit Permutation(std::vector<int> v) : vals_(std::move(v)) {}
    std::vector<int> vals_;
};

/// Index embedding certifying a containment claim. Indices are 1-based
/// and strictly increasing.
struct Witness {
    std::vector<int> indices;
    bool operator==(const Witness&) const = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// m sequences of n points in the unit square, one sequence per permutation.
using PointCloud = std::vector<std::vector<Point>>;

using Rng = std::mt19937_64;

Permutation random_permutation(int n, Rng& rng);

/// Induce a permutation from points: pi(i)=j when the point with i-th
/// smallest x has the j-th smallest y. Ties broken by original index.
Permutation permutation_from_points(const std::vector<Point>& points);

/// Rank a sequence of distinct reals into its order-isomorphic permutation.
Permutation pattern_of(const std::vector<double>& values);
Permutation pattern_of(const std::vector<int>& values);

/// Backtracking containment test. Returns the lexicographically smallest
/// witness when the pattern embeds, empty otherwise.
std::optional<Witness> contains_pattern(const Permutation& host, const Permutation& pattern);

struct MonotoneResult {
    int length = 0;
    Witness witness;
};

MonotoneResult longest_increasing(const Permutation& perm);
MonotoneResult longest_decreasing(const Permutation& perm);

/// max(min_i LIS, min_i LDS): a cheap lower bound on the LCP length.
int common_monotone_length(const std::vector<Permutation>& perms);

/// Uniform points in [0,1)^2, m rows of n.
PointCloud random_cloud(int n, int m, Rng& rng);

/// One-line notation as space-separated integers, e.g. "1 5 3 6 4 2".
std::string to_one_line(const Permutation& perm);
Permutation parse_one_line(std::string_view text);

/// Extract the subsequence of host values at witness indices.
std::vector<int> subsequence_at(const Permutation& host, const Witness& w);

/// True when pattern_of(host values at witness indices) equals pattern.
bool witness_certifies(const Permutation& host, const Witness& w, const Permutation& pattern);

}  // namespace lcp
