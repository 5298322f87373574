#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lcp/permutation.hpp"

namespace lcp {

struct LcpResult {
    int length = 0;
    Permutation pattern = Permutation::identity(1);
    std::vector<Witness> witnesses;  // one per input permutation
};

/// Thrown when an exact instance would exceed the enumeration budget.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Exact longest common pattern by subset enumeration over the first
/// permutation, decreasing length, canonical pattern deduplication.
/// Ties broken toward the lexicographically smallest pattern.
LcpResult lcp_exact(const std::vector<Permutation>& perms,
                    std::uint64_t budget = kDefaultBudget);

/// Independent second oracle: enumerates patterns of the LAST permutation.
int lcp_exact_crosscheck(const std::vector<Permutation>& perms,
                         std::uint64_t budget = kDefaultBudget);

}  // namespace lcp
