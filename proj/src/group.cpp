#include "bhg/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace bhg {

GroupSpec GroupSpec::product(std::vector<int64_t> moduli) {
    if (moduli.empty()) throw std::invalid_argument("product group needs at least one modulus");
    for (int64_t m : moduli)
        if (m < 2) throw std::invalid_argument("product moduli must be >= 2");
    GroupSpec spec;
    spec.kind = Kind::Product;
    spec.moduli = std::move(moduli);
    return spec;
}

GroupSpec GroupSpec::box(int dim, int64_t side) {
    if (dim < 1) throw std::invalid_argument("box dimension must be >= 1");
    if (side < 2) throw std::invalid_argument("box side must be >= 2");
    GroupSpec spec;
    spec.kind = Kind::Box;
    spec.box_dim = dim;
    spec.box_side = side;
    return spec;
}

int GroupSpec::dimension() const {
    return kind == Kind::Product ? static_cast<int>(moduli.size()) : box_dim;
}

std::optional<int64_t> GroupSpec::order() const {
    if (kind == Kind::Box) return std::nullopt;
    int64_t o = 1;
    for (int64_t m : moduli) o *= m;
    return o;
}

bool GroupSpec::contains(const GroupElement& x) const {
    if (static_cast<int>(x.size()) != dimension()) return false;
    for (int i = 0; i < dimension(); ++i) {
        int64_t bound = kind == Kind::Product ? moduli[i] : box_side;
        if (x[i] < 0 || x[i] >= bound) return false;
    }
    return true;
}

GroupElement GroupSpec::identity() const {
    return GroupElement(dimension(), 0);
}

std::vector<GroupElement> GroupSpec::universe() const {
    int d = dimension();
    std::vector<GroupElement> all;
    GroupElement cur(d, 0);
    while (true) {
        all.push_back(cur);
        int i = d - 1;
        while (i >= 0) {
            int64_t bound = kind == Kind::Product ? moduli[i] : box_side;
            if (++cur[i] < bound) break;
            cur[i--] = 0;
        }
        if (i < 0) break;
    }
    return all;
}

std::string GroupSpec::to_string() const {
    std::string out;
    if (kind == Kind::Product) {
        out = "product:";
        for (size_t i = 0; i < moduli.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(moduli[i]);
        }
    } else {
        out = "box:" + std::to_string(box_dim) + "," + std::to_string(box_side);
    }
    return out;
}

GroupSpec GroupSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad group descriptor: " + text);
    std::string kind = text.substr(0, colon);
    std::vector<int64_t> nums;
    int64_t cur = 0;
    bool have = false;
    for (size_t i = colon + 1; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (!have) throw std::invalid_argument("bad group descriptor: " + text);
            nums.push_back(cur);
            cur = 0;
            have = false;
        } else if (text[i] >= '0' && text[i] <= '9') {
            cur = cur * 10 + (text[i] - '0');
            have = true;
        } else {
            throw std::invalid_argument("bad group descriptor: " + text);
        }
    }
    if (kind == "product") return product(std::move(nums));
    if (kind == "box") {
        if (nums.size() != 2) throw std::invalid_argument("box descriptor needs dim,side");
        return box(static_cast<int>(nums[0]), nums[1]);
    }
    throw std::invalid_argument("unknown group kind: " + kind);
}

GroupElement group_add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
    if (x.size() != y.size() || static_cast<int>(x.size()) != spec.dimension())
        throw std::invalid_argument("dimension mismatch in group addition");
    GroupElement r(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        r[i] = x[i] + y[i];
        if (spec.kind == GroupSpec::Kind::Product) {
            r[i] %= spec.moduli[i];
            if (r[i] < 0) r[i] += spec.moduli[i];
        }
    }
    return r;
}

GroupElement group_neg(const GroupSpec& spec, const GroupElement& x) {
    if (static_cast<int>(x.size()) != spec.dimension())
        throw std::invalid_argument("dimension mismatch");
    GroupElement r(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (spec.kind == GroupSpec::Kind::Product)
            r[i] = x[i] == 0 ? 0 : spec.moduli[i] - x[i];
        else
            r[i] = -x[i];
    }
    return r;
}

GroupElement canonical_sum_key(const GroupSpec& spec, std::span<const GroupElement> summands) {
    if (summands.empty()) throw std::invalid_argument("empty multiset has no sum");
    GroupElement acc = summands[0];
    for (size_t i = 1; i < summands.size(); ++i) acc = group_add(spec, acc, summands[i]);
    return acc;
}

void BhgSet::normalize() {
    for (const auto& e : elements)
        if (!spec.contains(e))
            throw std::invalid_argument("set element outside ambient group");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

BhgSet make_set(GroupSpec spec, std::vector<GroupElement> elements, int h,
                std::optional<int64_t> g) {
    BhgSet s;
    s.spec = std::move(spec);
    s.elements = std::move(elements);
    s.h = h;
    s.g = g;
    s.normalize();
    return s;
}

}  // namespace bhg
