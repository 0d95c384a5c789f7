#include "bhg/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace bhg {

namespace {

std::string join(const std::vector<int64_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::vector<std::vector<FieldElement>> moment_curve_rows(const FieldSpec& spec, int h) {
    if (h < 2) throw std::invalid_argument("summand count must be >= 2");
    if (spec.p <= h)
        throw std::invalid_argument("moment curve needs characteristic p > h (p = " +
                                    std::to_string(spec.p) + ", h = " + std::to_string(h) + ")");
    std::vector<std::vector<FieldElement>> rows;
    int64_t q = spec.order();
    rows.reserve(q);
    for (int64_t v = 0; v < q; ++v) {
        FieldElement x = fe_from_value(spec, v);
        std::vector<FieldElement> row;
        row.reserve(h);
        FieldElement cur = x;
        for (int k = 1; k <= h; ++k) {
            row.push_back(cur);
            if (k < h) cur = fe_mul(spec, cur, x);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ConstructedSet moment_curve(const FieldSpec& spec, int h) {
    auto rows = moment_curve_rows(spec, h);
    std::vector<GroupElement> elements;
    elements.reserve(rows.size());
    for (const auto& row : rows) {
        GroupElement e;
        e.reserve(static_cast<size_t>(h) * spec.n);
        for (const auto& coord : row) {
            auto vec = vectorize(spec, coord);
            e.insert(e.end(), vec.begin(), vec.end());
        }
        elements.push_back(std::move(e));
    }
    GroupSpec ambient = GroupSpec::product(std::vector<int64_t>(
        static_cast<size_t>(h) * spec.n, spec.p));
    ConstructedSet cs;
    cs.set = make_set(ambient, std::move(elements), h, 1);
    cs.cert = {"moment", "p=" + std::to_string(spec.p) + ",n=" + std::to_string(spec.n) +
                             ",h=" + std::to_string(h) + ",modulus=" + join(spec.modulus),
               h, 1};
    return cs;
}

ConstructedSet moment_curve_vectorized(int64_t p, int n, int h,
                                       std::optional<std::vector<int64_t>> modulus) {
    return moment_curve(FieldSpec::make(p, n, std::move(modulus)), h);
}

ConstructedSet base_digits(const BhgSet& input, int64_t base, int d) {
    if (base < 2) throw std::invalid_argument("digit base must be >= 2");
    if (d < 1) throw std::invalid_argument("digit count must be >= 1");
    if (input.spec.dimension() != 1)
        throw std::invalid_argument("digit lifting expects a one-dimensional input set");
    int64_t limit = 1;
    for (int i = 0; i < d; ++i) limit *= base;
    std::vector<GroupElement> lifted;
    lifted.reserve(input.elements.size());
    for (const auto& e : input.elements) {
        int64_t a = e[0];
        if (a < 0 || a >= limit)
            throw std::invalid_argument("element " + std::to_string(a) + " outside [0, " +
                                        std::to_string(base) + "^" + std::to_string(d) + " - 1]");
        GroupElement digits(d);
        for (int i = d - 1; i >= 0; --i) {
            digits[i] = a % base;
            a /= base;
        }
        lifted.push_back(std::move(digits));
    }
    ConstructedSet cs;
    cs.set = make_set(GroupSpec::box(d, base), std::move(lifted), input.h, input.g);
    cs.cert = {"digits", "base=" + std::to_string(base) + ",dim=" + std::to_string(d),
               input.h, input.g};
    return cs;
}

ConstructedSet translate_union(const BhgSet& input, int64_t m,
                               const std::vector<int64_t>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("translate set must be nonempty");
    if (input.spec.dimension() != 1)
        throw std::invalid_argument("translate union expects a one-dimensional input set");
    std::vector<int64_t> multipliers = coeffs;
    std::sort(multipliers.begin(), multipliers.end());
    multipliers.erase(std::unique(multipliers.begin(), multipliers.end()), multipliers.end());
    if (multipliers.front() < 0)
        throw std::invalid_argument("translate multipliers must be nonnegative");
    for (const auto& e : input.elements)
        if (e[0] < 0 || e[0] >= m)
            throw std::invalid_argument("input element outside [0, m-1]");
    std::vector<GroupElement> out;
    for (int64_t c : multipliers)
        for (const auto& e : input.elements) out.push_back({e[0] + c * m});
    int64_t side = (multipliers.back() + 1) * m;
    ConstructedSet cs;
    cs.set = make_set(GroupSpec::box(1, side), std::move(out), input.h, std::nullopt);
    cs.cert = {"union", "m=" + std::to_string(m) + ",coeffs=" + join(multipliers), input.h,
               std::nullopt};
    return cs;
}

ReduceResult modular_reduce(const BhgSet& input, const std::vector<int64_t>& divisors) {
    if (input.spec.kind != GroupSpec::Kind::Product)
        throw std::invalid_argument("modular reduction expects a product-group set");
    const auto& moduli = input.spec.moduli;
    if (divisors.size() != moduli.size())
        throw std::invalid_argument("one divisor per coordinate required");
    std::vector<int64_t> reduced_moduli(moduli.size());
    int64_t kernel = 1;
    for (size_t i = 0; i < moduli.size(); ++i) {
        if (divisors[i] < 1 || moduli[i] % divisors[i] != 0)
            throw std::invalid_argument(std::to_string(divisors[i]) + " does not divide " +
                                        std::to_string(moduli[i]));
        reduced_moduli[i] = moduli[i] / divisors[i];
        kernel *= divisors[i];
        if (reduced_moduli[i] < 2)
            throw std::invalid_argument("reduced modulus must stay >= 2");
    }
    std::vector<GroupElement> images;
    images.reserve(input.elements.size());
    for (const auto& e : input.elements) {
        GroupElement img(e.size());
        for (size_t i = 0; i < e.size(); ++i) img[i] = e[i] % reduced_moduli[i];
        images.push_back(std::move(img));
    }
    std::optional<int64_t> g_out;
    if (input.g) g_out = *input.g * kernel;
    ReduceResult res;
    res.out.set = make_set(GroupSpec::product(reduced_moduli), std::move(images), input.h, g_out);
    res.collisions = static_cast<int64_t>(input.elements.size()) - res.out.set.size();
    res.out.cert = {"reduce", "divisors=" + join(divisors), input.h, g_out};
    return res;
}

ConstructedSet golomb_set(const FieldSpec& spec, const FieldElement& alpha,
                          const FieldElement& beta, const FieldElement& a) {
    if (fe_is_zero(a)) throw std::invalid_argument("a must be nonzero");
    if (!is_primitive(spec, alpha)) throw std::invalid_argument("alpha is not primitive");
    DlogTable logs(spec, beta);  // validates that beta is primitive
    int64_t q = spec.order();
    std::vector<GroupElement> pairs;
    pairs.reserve(q - 2);
    FieldElement power = fe_one(spec);
    for (int64_t i = 1; i <= q - 1; ++i) {
        power = fe_mul(spec, power, alpha);  // alpha^i
        if (power == a) continue;
        FieldElement diff = fe_sub(spec, a, power);
        pairs.push_back({i % (q - 1), logs.dlog(diff)});
    }
    ConstructedSet cs;
    cs.set = make_set(GroupSpec::product({q - 1, q - 1}), std::move(pairs), 2, 1);
    cs.cert = {"golomb",
               "q=" + std::to_string(q) + ",alpha=" + fe_to_string(spec, alpha) +
                   ",beta=" + fe_to_string(spec, beta) + ",a=" + fe_to_string(spec, a),
               2, 1};
    return cs;
}

}  // namespace bhg
