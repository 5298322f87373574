#include "lcp/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lcp {

Permutation Permutation::from_one_line(std::vector<int> values) {
    if (values.empty())
        throw std::invalid_argument("permutation must be non-empty");
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : values) {
        if (v < 1 || v > n)
            throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[v])
            throw std::invalid_argument("duplicate value " + std::to_string(v));
        seen[v] = 1;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
    std::vector<int> v(vals_.rbegin(), vals_.rend());
    return Permutation(std::move(v));
}

Permutation Permutation::complemented() const {
    const int n = size();
    std::vector<int> v(vals_.size());
    for (size_t i = 0; i < vals_.size(); ++i) v[i] = n + 1 - vals_[i];
    return Permutation(std::move(v));
}

Permutation Permutation::inverted() const {
    std::vector<int> v(vals_.size());
    for (size_t i = 0; i < vals_.size(); ++i) v[vals_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(v));
}

Permutation random_permutation(int n, Rng& rng) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    // Fisher-Yates with bounded draws; std::shuffle semantics but pinned
    // to this exact draw order for seed stability.
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> d(0, i);
        std::swap(v[i], v[d(rng)]);
    }
    return Permutation::from_one_line(std::move(v));
}

Permutation permutation_from_points(const std::vector<Point>& points) {
    if (points.empty())
        throw std::invalid_argument("point sequence must be non-empty");
    const int n = static_cast<int>(points.size());
    std::vector<int> by_x(n), by_y(n);
    std::iota(by_x.begin(), by_x.end(), 0);
    by_y = by_x;
    // (coordinate, original index) lexicographic tie-break
    std::sort(by_x.begin(), by_x.end(), [&](int a, int b) {
        return points[a].x != points[b].x ? points[a].x < points[b].x : a < b;
    });
    std::sort(by_y.begin(), by_y.end(), [&](int a, int b) {
        return points[a].y != points[b].y ? points[a].y < points[b].y : a < b;
    });
    std::vector<int> y_rank(n);
    for (int j = 0; j < n; ++j) y_rank[by_y[j]] = j + 1;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = y_rank[by_x[i]];
    return Permutation::from_one_line(std::move(v));
}

namespace {

template <typename T>
Permutation rank_sequence(const std::vector<T>& values) {
    if (values.empty())
        throw std::invalid_argument("sequence must be non-empty");
    const int n = static_cast<int>(values.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    for (int i = 0; i + 1 < n; ++i)
        if (values[order[i]] == values[order[i + 1]])
            throw std::invalid_argument("duplicate values have no pattern");
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[order[i]] = i + 1;
    return Permutation::from_one_line(std::move(v));
}

}  // namespace

Permutation pattern_of(const std::vector<double>& values) { return rank_sequence(values); }
Permutation pattern_of(const std::vector<int>& values) { return rank_sequence(values); }

std::optional<Witness> contains_pattern(const Permutation& host, const Permutation& pattern) {
    const int n = host.size();
    const int k = pattern.size();
    if (k > n) return std::nullopt;

    // For pattern position t, the already-placed positions holding the
    // nearest smaller and larger pattern values; they bound the feasible
    // host-value window of position t.
    std::vector<int> pred(k, -1), succ(k, -1);
    for (int t = 0; t < k; ++t) {
        for (int s = 0; s < t; ++s) {
            if (pattern[s] < pattern[t] && (pred[t] < 0 || pattern[s] > pattern[pred[t]]))
                pred[t] = s;
            if (pattern[s] > pattern[t] && (succ[t] < 0 || pattern[s] < pattern[succ[t]]))
                succ[t] = s;
        }
    }

    std::vector<int> chosen(k, 0);  // host positions, 0-based

    // Ascending position order at each depth makes the first complete
    // embedding the lexicographically smallest one.
    auto dfs = [&](auto&& self, int t, int start) -> bool {
        if (t == k) return true;
        const int low = pred[t] >= 0 ? host[chosen[pred[t]]] : 0;
        const int high = succ[t] >= 0 ? host[chosen[succ[t]]] : n + 1;
        for (int i = start; i <= n - (k - t); ++i) {
            const int v = host[i];
            if (v > low && v < high) {
                chosen[t] = i;
                if (self(self, t + 1, i + 1)) return true;
            }
        }
        return false;
    };

    if (!dfs(dfs, 0, 0)) return std::nullopt;
    Witness w;
    w.indices.reserve(k);
    for (int i : chosen) w.indices.push_back(i + 1);
    return w;
}

namespace {

MonotoneResult lis_impl(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    // patience sorting: tails[l] = index of smallest tail of an increasing
    // subsequence of length l+1
    std::vector<int> tails, tail_vals, parent(n, -1);
    for (int i = 0; i < n; ++i) {
        auto it = std::lower_bound(tail_vals.begin(), tail_vals.end(), a[i]);
        const int pos = static_cast<int>(it - tail_vals.begin());
        if (pos > 0) parent[i] = tails[pos - 1];
        if (it == tail_vals.end()) {
            tail_vals.push_back(a[i]);
            tails.push_back(i);
        } else {
            *it = a[i];
            tails[pos] = i;
        }
    }
    MonotoneResult res;
    res.length = static_cast<int>(tails.size());
    int cur = tails.empty() ? -1 : tails.back();
    while (cur >= 0) {
        res.witness.indices.push_back(cur + 1);
        cur = parent[cur];
    }
    std::reverse(res.witness.indices.begin(), res.witness.indices.end());
    return res;
}

}  // namespace

MonotoneResult longest_increasing(const Permutation& perm) { return lis_impl(perm.values()); }

MonotoneResult longest_decreasing(const Permutation& perm) {
    return lis_impl(perm.complemented().values());
}

int common_monotone_length(const std::vector<Permutation>& perms) {
    if (perms.empty())
        throw std::invalid_argument("empty permutation list");
    const int n = perms.front().size();
    int min_lis = n, min_lds = n;
    for (const auto& p : perms) {
        if (p.size() != n)
            throw std::invalid_argument("mismatched permutation lengths");
        min_lis = std::min(min_lis, longest_increasing(p).length);
        min_lds = std::min(min_lds, longest_decreasing(p).length);
    }
    return std::max(min_lis, min_lds);
}

PointCloud random_cloud(int n, int m, Rng& rng) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("cloud dimensions must be positive");
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PointCloud cloud(m);
    for (auto& row : cloud) {
        row.resize(n);
        for (auto& p : row) {
            p.x = u(rng);
            p.y = u(rng);
        }
    }
    return cloud;
}

std::string to_one_line(const Permutation& perm) {
    std::string out;
    for (int i = 0; i < perm.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(perm[i]);
    }
    return out;
}

Permutation parse_one_line(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> v;
    int x;
    while (in >> x) v.push_back(x);
    if (!in.eof())
        throw std::invalid_argument("malformed permutation text");
    return Permutation::from_one_line(std::move(v));
}

std::vector<int> subsequence_at(const Permutation& host, const Witness& w) {
    std::vector<int> out;
    out.reserve(w.indices.size());
    for (int idx : w.indices) {
        if (idx < 1 || idx > host.size())
            throw std::invalid_argument("witness index out of range");
        out.push_back(host[idx - 1]);
    }
    return out;
}

bool witness_certifies(const Permutation& host, const Witness& w, const Permutation& pattern) {
    if (static_cast<int>(w.indices.size()) != pattern.size()) return false;
    for (size_t i = 1; i < w.indices.size(); ++i)
        if (w.indices[i] <= w.indices[i - 1]) return false;
    return pattern_of(subsequence_at(host, w)) == pattern;
}

}  // namespace lcp
