#include "bhg/verifier.hpp"

#include <algorithm>
#include <thread>

namespace bhg {

namespace {

// Walk all nondecreasing index tuples of length `depth` starting at `from`,
// extending `sum` by the chosen elements; calls fn(sum) for each completed
// multiset.
template <typename Fn>
void enumerate_rest(const GroupSpec& spec, const std::vector<GroupElement>& elems,
                    size_t from, int depth, GroupElement sum, Fn&& fn) {
    if (depth == 0) {
        fn(sum);
        return;
    }
    for (size_t i = from; i < elems.size(); ++i)
        enumerate_rest(spec, elems, i, depth - 1, group_add(spec, sum, elems[i]),
                       std::forward<Fn>(fn));
}

// Same walk but records the chosen elements; used to collect witness
// representations of one particular sum.
void collect_reps(const GroupSpec& spec, const std::vector<GroupElement>& elems, size_t from,
                  int depth, const GroupElement& sum, const GroupElement& target,
                  std::vector<GroupElement>& chosen,
                  std::vector<std::vector<GroupElement>>& out) {
    if (depth == 0) {
        if (sum == target) out.push_back(chosen);
        return;
    }
    for (size_t i = from; i < elems.size(); ++i) {
        chosen.push_back(elems[i]);
        collect_reps(spec, elems, i, depth - 1, group_add(spec, sum, elems[i]), target, chosen,
                     out);
        chosen.pop_back();
    }
}

}  // namespace

int64_t multiset_count(int64_t n, int h) {
    if (n == 0) return 0;
    // C(n+h-1, h), clamped at INT64_MAX on overflow.
    __int128 r = 1;
    for (int i = 1; i <= h; ++i) {
        r = r * (n - 1 + i) / i;  // C(n-1+i, i) is integral at every step
        if (r > INT64_MAX) return INT64_MAX;
    }
    return static_cast<int64_t>(r);
}

RepProfile rep_profile(const BhgSet& set, int h, int64_t budget, int threads) {
    if (h < 2) throw std::invalid_argument("summand count must be >= 2");
    RepProfile profile;
    profile.spec = set.spec;
    profile.h = h;
    if (set.elements.empty()) return profile;

    int64_t required = multiset_count(set.size(), h);
    if (required > budget) throw BudgetExceeded(required);

    const auto& elems = set.elements;
    auto run_slice = [&](int slice, int stride, std::map<GroupElement, int64_t>& counts) {
        for (size_t i = static_cast<size_t>(slice); i < elems.size();
             i += static_cast<size_t>(stride))
            enumerate_rest(set.spec, elems, i, h - 1, elems[i],
                           [&](const GroupElement& sum) { ++counts[sum]; });
    };

    if (threads <= 1) {
        run_slice(0, 1, profile.counts);
    } else {
        std::vector<std::map<GroupElement, int64_t>> partial(threads);
        std::vector<std::thread> workers;
        for (int t = 0; t < threads; ++t)
            workers.emplace_back(run_slice, t, threads, std::ref(partial[t]));
        for (auto& w : workers) w.join();
        for (auto& part : partial)
            for (auto& [sum, cnt] : part) profile.counts[sum] += cnt;
    }

    for (const auto& [sum, cnt] : profile.counts) {
        if (cnt > profile.max_count) {
            profile.max_count = cnt;
            profile.witness_sum = sum;
        }
    }
    std::vector<GroupElement> chosen;
    collect_reps(set.spec, elems, 0, h, GroupElement(set.spec.dimension(), 0),
                 profile.witness_sum, chosen, profile.witness_reps);
    return profile;
}

int64_t min_g(const BhgSet& set, int h, int64_t budget, int threads) {
    return rep_profile(set, h, budget, threads).max_count;
}

BhgCheck is_bhg(const BhgSet& set, int h, int64_t g, int64_t budget, int threads) {
    if (g < 1) throw std::invalid_argument("multiplicity bound must be >= 1");
    RepProfile profile = rep_profile(set, h, budget, threads);
    BhgCheck check;
    check.measured_g = profile.max_count;
    check.ok = profile.max_count <= g;
    check.witness_sum = profile.witness_sum;
    check.witness_reps = profile.witness_reps;
    return check;
}

}  // namespace bhg
