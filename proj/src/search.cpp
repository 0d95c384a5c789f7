#include "bhg/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "bhg/constructions.hpp"

namespace bhg {

namespace {

// Representation counts of the current partial set, updated incrementally.
// Adding element e creates exactly the h-multisets that contain e: each is
// e plus an (h-1)-multiset of the enlarged set, so one pass enumerates the
// new sums. Deltas are stacked for exact rollback.
class IncrementalCounter {
public:
    IncrementalCounter(const GroupSpec& spec, int h, int64_t g)
        : spec_(spec), h_(h), g_(g) {}

    int64_t size() const { return static_cast<int64_t>(chosen_.size()); }
    const std::vector<GroupElement>& chosen() const { return chosen_; }

    bool try_add(const GroupElement& e) {
        chosen_.push_back(e);
        std::vector<GroupElement> deltas;
        bool ok = true;
        enumerate(0, h_ - 1, e, deltas, ok);
        if (!ok) {
            for (const auto& key : deltas) {
                auto it = counts_.find(key);
                if (--it->second == 0) counts_.erase(it);
            }
            chosen_.pop_back();
            return false;
        }
        delta_stack_.push_back(std::move(deltas));
        return true;
    }

    void remove_last() {
        for (const auto& key : delta_stack_.back()) {
            auto it = counts_.find(key);
            if (--it->second == 0) counts_.erase(it);
        }
        delta_stack_.pop_back();
        chosen_.pop_back();
    }

private:
    // Nondecreasing index walk over chosen_ building (h-1)-multisets on top
    // of the fixed summand `sum`; applies increments as it goes and stops at
    // the first bound violation.
    void enumerate(size_t from, int depth, const GroupElement& sum,
                   std::vector<GroupElement>& deltas, bool& ok) {
        if (!ok) return;
        if (depth == 0) {
            int64_t& c = counts_[sum];
            ++c;
            deltas.push_back(sum);
            if (c > g_) ok = false;
            return;
        }
        for (size_t i = from; i < chosen_.size() && ok; ++i)
            enumerate(i, depth - 1, group_add(spec_, sum, chosen_[i]), deltas, ok);
    }

    GroupSpec spec_;
    int h_;
    int64_t g_;
    std::vector<GroupElement> chosen_;
    std::map<GroupElement, int64_t> counts_;
    std::vector<std::vector<GroupElement>> delta_stack_;
};

// Largest k <= max_k with C(k+h-1, h) <= g * (number of reachable sums).
int64_t counting_cap(const GroupSpec& spec, int h, int64_t g, int64_t max_k) {
    int64_t sums;
    if (spec.kind == GroupSpec::Kind::Product) {
        sums = *spec.order();
    } else {
        sums = 1;
        int64_t per_coord = static_cast<int64_t>(h) * (spec.box_side - 1) + 1;
        for (int i = 0; i < spec.box_dim; ++i) {
            if (sums > (INT64_MAX / 2) / per_coord) return max_k;
            sums *= per_coord;
        }
    }
    if (g > INT64_MAX / sums) return max_k;
    int64_t limit = g * sums;
    int64_t k = 0;
    while (k < max_k && multiset_count(k + 1, h) <= limit) ++k;
    return k;
}

struct BranchResult {
    int64_t best = 0;
    std::vector<GroupElement> witness;
};

struct SearchShared {
    const GroupSpec* spec;
    const std::vector<GroupElement>* cands;
    int h;
    int64_t g;
    int64_t cap;
    int64_t budget;
    std::atomic<int64_t> nodes{0};
    std::atomic<bool> blown{false};
};

void dfs(SearchShared& sh, IncrementalCounter& counter, size_t pos, BranchResult& local) {
    if (sh.blown.load(std::memory_order_relaxed)) return;
    if (sh.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > sh.budget) {
        sh.blown.store(true, std::memory_order_relaxed);
        return;
    }
    if (counter.size() > local.best) {
        local.best = counter.size();
        local.witness = counter.chosen();
    }
    size_t n = sh.cands->size();
    for (size_t i = pos; i < n; ++i) {
        if (counter.size() >= sh.cap) break;
        // Remaining candidates cannot beat the incumbent.
        if (counter.size() + static_cast<int64_t>(n - i) <= local.best) break;
        if (counter.try_add((*sh.cands)[i])) {
            dfs(sh, counter, i + 1, local);
            counter.remove_last();
        }
    }
}

}  // namespace

SearchResult exhaustive_max(const GroupSpec& spec, int h, int64_t g, int64_t budget,
                            int threads) {
    if (h < 2) throw std::invalid_argument("summand count must be >= 2");
    if (g < 1) throw std::invalid_argument("multiplicity bound must be >= 1");
    auto start = std::chrono::steady_clock::now();

    std::vector<GroupElement> cands = spec.universe();
    bool fix_identity = spec.kind == GroupSpec::Kind::Product;

    SearchShared sh;
    sh.spec = &spec;
    sh.cands = &cands;
    sh.h = h;
    sh.g = g;
    sh.cap = counting_cap(spec, h, g, static_cast<int64_t>(cands.size()));
    sh.budget = budget;

    // Top-level branches are explored independently (each with its own
    // incumbent), so results do not depend on scheduling.
    size_t first_branch = fix_identity ? 1 : 0;
    std::vector<BranchResult> branches(cands.size(), BranchResult{});
    auto run_branch = [&](size_t b) {
        IncrementalCounter counter(spec, h, g);
        if (fix_identity) {
            counter.try_add(cands[0]);  // the identity; always succeeds
            branches[b].best = 1;
            branches[b].witness = counter.chosen();
        }
        if (!counter.try_add(cands[b])) return;
        dfs(sh, counter, b + 1, branches[b]);
    };

    if (threads <= 1) {
        for (size_t b = first_branch; b < cands.size(); ++b) run_branch(b);
    } else {
        std::atomic<size_t> next{first_branch};
        std::vector<std::thread> workers;
        for (int t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (size_t b = next.fetch_add(1); b < cands.size(); b = next.fetch_add(1))
                    run_branch(b);
            });
        for (auto& w : workers) w.join();
    }

    SearchResult res;
    res.spec = spec;
    res.h = h;
    res.g = g;
    res.best_size = fix_identity && !cands.empty() ? 1 : 0;
    std::vector<GroupElement> best_witness;
    if (fix_identity && !cands.empty()) best_witness = {cands[0]};
    for (size_t b = first_branch; b < cands.size(); ++b) {
        if (branches[b].best > res.best_size) {
            res.best_size = branches[b].best;
            best_witness = branches[b].witness;
        }
    }
    res.witness = make_set(spec, std::move(best_witness), h, g);
    res.exhaustive = !sh.blown.load();
    res.nodes_explored = std::min(sh.nodes.load(), budget);
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

BhgSet greedy_bhg(int h, int64_t g, int count) {
    if (h < 2) throw std::invalid_argument("summand count must be >= 2");
    if (g < 1) throw std::invalid_argument("multiplicity bound must be >= 1");
    if (count < 1) throw std::invalid_argument("target size must be >= 1");
    // Sums are unreduced integers; the box side is only fixed afterwards.
    GroupSpec scratch = GroupSpec::box(1, INT64_MAX / 4);
    IncrementalCounter counter(scratch, h, g);
    counter.try_add({1});
    int64_t candidate = 2;
    while (counter.size() < count) {
        while (!counter.try_add({candidate})) ++candidate;
        ++candidate;
    }
    int64_t last = counter.chosen().back()[0];
    return make_set(GroupSpec::box(1, last + 1), counter.chosen(), h, g);
}

GapReport bound_gap_report(int64_t base_side, int dim, int h, int64_t g, int64_t budget,
                           int threads) {
    if (base_side < 2 || dim < 1) throw std::invalid_argument("need N >= 2 and d >= 1");
    int64_t volume = 1;
    for (int i = 0; i < dim; ++i) volume *= base_side;

    GapReport report;
    report.base_side = base_side;
    report.dim = dim;
    report.h = h;
    report.g = g;
    report.line = exhaustive_max(GroupSpec::box(1, volume), h, g, budget, threads);
    report.box = exhaustive_max(GroupSpec::box(dim, base_side), h, g, budget, threads);
    report.lifted_witness = base_digits(report.line.witness, base_side, dim).set;
    report.inequality_holds = report.line.best_size <= report.box.best_size;
    return report;
}

}  // namespace bhg
