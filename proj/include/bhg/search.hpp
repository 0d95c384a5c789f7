#pragma once

#include <cstdint>
#include <optional>

#include "bhg/group.hpp"
#include "bhg/verifier.hpp"

namespace bhg {

inline constexpr int64_t kDefaultSearchBudget = 50'000'000;

struct SearchResult {
    GroupSpec spec;
    int h = 2;
    int64_t g = 1;
    int64_t best_size = 0;
    BhgSet witness;
    bool exhaustive = false;  // true iff optimality was proven
    int64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

// Exact F_h(G, g) by depth-first extension in canonical element order with
// incremental representation counts. For product groups the smallest element
// is fixed to the identity (translation invariance) and a counting cut
// C(k+h-1, h) <= g*|G| caps the achievable size. Top-level branches are
// independent, so thread count never changes best_size or nodes_explored;
// a blown node budget returns exhaustive = false with the best so far.
SearchResult exhaustive_max(const GroupSpec& spec, int h, int64_t g,
                            int64_t budget = kDefaultSearchBudget, int threads = 1);

// Greedy B_h[g] generator on the positive integers: starting from {1},
// repeatedly append the smallest integer that keeps the set B_h[g].
// h = 2, g = 1 reproduces Mian-Chowla.
BhgSet greedy_bhg(int h, int64_t g, int count);

struct GapReport {
    int64_t base_side = 0;  // N
    int dim = 0;            // d
    int h = 2;
    int64_t g = 1;
    SearchResult line;      // F_h(Box(1, N^d), g)
    SearchResult box;       // F_h(Box(d, N), g)
    BhgSet lifted_witness;  // base-N lifting of the line witness
    bool inequality_holds = false;
};

// Computes both sides of F_h(N^d, g) <= F_h^d(N, g) exhaustively and lifts
// the one-dimensional witness by base-N digits.
GapReport bound_gap_report(int64_t base_side, int dim, int h, int64_t g,
                           int64_t budget = kDefaultSearchBudget, int threads = 1);

}  // namespace bhg
