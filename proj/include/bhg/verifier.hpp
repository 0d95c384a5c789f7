#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhg/group.hpp"

namespace bhg {

inline constexpr int64_t kDefaultBudget = 100'000'000;

// Raised when the exact enumeration would exceed the configured budget.
// A sampled profile cannot certify B_h[g], so the oracle refuses instead.
struct BudgetExceeded : std::runtime_error {
    int64_t required;
    explicit BudgetExceeded(int64_t required_)
        : std::runtime_error("enumeration budget exceeded: " + std::to_string(required_) +
                             " multisets required"),
          required(required_) {}
};

// Representation profile of a candidate set: for every realized h-fold sum,
// the number of distinct size-h multisets of the set producing it.
struct RepProfile {
    GroupSpec spec;
    int h = 2;
    std::map<GroupElement, int64_t> counts;
    int64_t max_count = 0;
    GroupElement witness_sum;  // one sum achieving max_count
    // All representations of witness_sum, each a sorted h-multiset;
    // populated whenever the input set is nonempty.
    std::vector<std::vector<GroupElement>> witness_reps;
};

// C(n+k-1, k) clamped to avoid overflow; the enumeration size for a set of
// n elements and h summands.
int64_t multiset_count(int64_t n, int h);

RepProfile rep_profile(const BhgSet& set, int h, int64_t budget = kDefaultBudget,
                       int threads = 1);

int64_t min_g(const BhgSet& set, int h, int64_t budget = kDefaultBudget, int threads = 1);

struct BhgCheck {
    bool ok = false;
    int64_t measured_g = 0;
    GroupElement witness_sum;
    std::vector<std::vector<GroupElement>> witness_reps;  // on failure, > g of them
};

BhgCheck is_bhg(const BhgSet& set, int h, int64_t g, int64_t budget = kDefaultBudget,
                int threads = 1);

}  // namespace bhg
