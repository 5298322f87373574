#include "lcp/lcp_exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

namespace lcp {

namespace {

void validate_instance(const std::vector<Permutation>& perms) {
    if (perms.size() < 2)
        throw std::invalid_argument("need at least two permutations");
    for (const auto& p : perms)
        if (p.size() != perms.front().size())
            throw std::invalid_argument("mismatched permutation lengths");
}

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) {
        // instances past the guard never get near overflow, but saturate anyway
        if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n - k + i))
            return std::numeric_limits<std::uint64_t>::max();
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

void check_budget(int n, int m, int k_min, std::uint64_t budget) {
    std::uint64_t est = 0;
    for (int k = k_min; k <= n; ++k) {
        const std::uint64_t c = binom(n, k);
        if (c > budget / static_cast<std::uint64_t>(m) || (est += c * m) > budget)
            throw SizeGuardError("estimated enumeration count exceeds budget of " +
                                 std::to_string(budget) + " subtests");
    }
}

// Visit all k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Best (lexicographically smallest) common pattern of exactly length k whose
// candidates are drawn from subsequences of perms[base].
std::optional<Permutation> best_common_at_length(const std::vector<Permutation>& perms,
                                                size_t base, int k) {
    const Permutation& src = perms[base];
    std::set<std::vector<int>> seen;
    std::optional<Permutation> best;
    std::vector<int> vals(k);
    for_each_combination(src.size(), k, [&](const std::vector<int>& idx) {
        for (int t = 0; t < k; ++t) vals[t] = src[idx[t]];
        Permutation pat = pattern_of(vals);
        if (!seen.insert(pat.values()).second) return;
        if (best && !(pat < *best)) return;
        for (size_t i = 0; i < perms.size(); ++i) {
            if (i == base) continue;
            if (!contains_pattern(perms[i], pat)) return;
        }
        best = std::move(pat);
    });
    return best;
}

}  // namespace

LcpResult lcp_exact(const std::vector<Permutation>& perms, std::uint64_t budget) {
    validate_instance(perms);
    const int n = perms.front().size();
    const int lb = common_monotone_length(perms);  // warm start: answer >= lb
    check_budget(n, static_cast<int>(perms.size()), lb, budget);

    for (int k = n; k >= lb; --k) {
        auto best = best_common_at_length(perms, 0, k);
        if (!best) continue;
        LcpResult res;
        res.length = k;
        res.pattern = *best;
        for (const auto& p : perms) {
            auto w = contains_pattern(p, res.pattern);
            res.witnesses.push_back(*w);  // guaranteed: pattern is common
        }
        return res;
    }
    // unreachable: a common monotone pattern of length lb always exists
    throw std::logic_error("lcp_exact found no common pattern");
}

int lcp_exact_crosscheck(const std::vector<Permutation>& perms, std::uint64_t budget) {
    validate_instance(perms);
    const int n = perms.front().size();
    check_budget(n, static_cast<int>(perms.size()), 1, budget);
    for (int k = n; k >= 1; --k)
        if (best_common_at_length(perms, perms.size() - 1, k)) return k;
    return 0;
}

}  // namespace lcp
