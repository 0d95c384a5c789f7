#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bhg {

using GroupElement = std::vector<int64_t>;

// Ambient group for d-tuples. Product is Z_{m_1} x ... x Z_{m_d} with
// componentwise reduction; Box is the free group Z^d whose member sets are
// drawn from [0, N-1]^d but whose sums are left unreduced.
struct GroupSpec {
    enum class Kind { Product, Box };

    Kind kind = Kind::Product;
    std::vector<int64_t> moduli;  // Product only
    int box_dim = 0;              // Box only
    int64_t box_side = 0;         // Box only

    static GroupSpec product(std::vector<int64_t> moduli);
    static GroupSpec box(int dim, int64_t side);

    int dimension() const;
    // Product order; Box has no finite order.
    std::optional<int64_t> order() const;
    bool contains(const GroupElement& x) const;
    GroupElement identity() const;
    // Every element of the member universe in lexicographic order
    // (Product: all tuples; Box: [0, side-1]^dim).
    std::vector<GroupElement> universe() const;

    std::string to_string() const;
    static GroupSpec parse(const std::string& text);

    bool operator==(const GroupSpec&) const = default;
};

GroupElement group_add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement group_neg(const GroupSpec& spec, const GroupElement& x);

// Fold of group_add over a nonempty multiset; order-independent.
GroupElement canonical_sum_key(const GroupSpec& spec, std::span<const GroupElement> summands);

// A candidate set with its ambient group and claimed (h, g) parameters.
// Elements are kept duplicate-free in lexicographic order.
struct BhgSet {
    GroupSpec spec;
    std::vector<GroupElement> elements;
    int h = 2;
    std::optional<int64_t> g;

    void normalize();  // sort + dedup, validate membership
    int64_t size() const { return static_cast<int64_t>(elements.size()); }
};

BhgSet make_set(GroupSpec spec, std::vector<GroupElement> elements, int h = 2,
                std::optional<int64_t> g = std::nullopt);

}  // namespace bhg
