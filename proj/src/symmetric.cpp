#include "bhg/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace bhg {

std::vector<FieldElement> power_sums(const FieldSpec& spec,
                                     const std::vector<FieldElement>& values, int k) {
    if (k < 1) throw std::invalid_argument("power-sum degree must be >= 1");
    if (values.empty()) throw std::invalid_argument("power sums need a nonempty multiset");
    std::vector<FieldElement> out;
    out.reserve(k);
    std::vector<FieldElement> powers = values;  // x_i^j, updated per j
    for (int j = 1; j <= k; ++j) {
        FieldElement sum = fe_zero(spec);
        for (const auto& v : powers) sum = fe_add(spec, sum, v);
        out.push_back(sum);
        if (j < k)
            for (size_t i = 0; i < powers.size(); ++i)
                powers[i] = fe_mul(spec, powers[i], values[i]);
    }
    return out;
}

std::vector<FieldElement> sigma_from_power_sums(const FieldSpec& spec,
                                                const std::vector<FieldElement>& power) {
    int k = static_cast<int>(power.size());
    std::vector<FieldElement> sigma;  // sigma[j-1] = sigma_j; sigma_0 = 1 implicit
    sigma.reserve(k);
    for (int j = 1; j <= k; ++j) {
        if (j % spec.p == 0)
            throw std::domain_error(
                "Newton recursion needs characteristic > k (division by " +
                std::to_string(j) + " in characteristic " + std::to_string(spec.p) + ")");
        FieldElement rhs = fe_zero(spec);
        for (int i = 1; i <= j; ++i) {
            FieldElement prev = (j - i == 0) ? fe_one(spec) : sigma[j - i - 1];
            FieldElement term = fe_mul(spec, prev, power[i - 1]);
            rhs = (i % 2 == 1) ? fe_add(spec, rhs, term) : fe_sub(spec, rhs, term);
        }
        // Divide by the field image of j.
        FieldElement jf = fe_from_value(spec, j % spec.p);
        FieldElement j_inv = fe_pow(spec, jf, spec.order() - 2);
        sigma.push_back(fe_mul(spec, rhs, j_inv));
    }
    return sigma;
}

std::vector<FieldElement> elementary_symmetric(const FieldSpec& spec,
                                               const std::vector<FieldElement>& values) {
    // Incremental expansion of prod (1 + x_i * z), coefficients of z^1..z^n.
    std::vector<FieldElement> sigma(values.size(), fe_zero(spec));
    size_t filled = 0;
    for (const auto& x : values) {
        for (size_t j = filled; j-- > 0;)
            sigma[j + 1] = fe_add(spec, sigma[j + 1], fe_mul(spec, sigma[j], x));
        sigma[0] = fe_add(spec, sigma[0], x);
        if (filled < values.size()) ++filled;
    }
    return sigma;
}

std::optional<std::vector<FieldElement>> roots_from_sigma(
    const FieldSpec& spec, const std::vector<FieldElement>& sigma) {
    int n = static_cast<int>(sigma.size());
    if (n < 1) throw std::invalid_argument("need at least one symmetric value");
    // Monic polynomial coefficients low-to-high: coeff of lambda^{n-k} is
    // (-1)^k sigma_k.
    std::vector<FieldElement> poly(n + 1, fe_zero(spec));
    poly[n] = fe_one(spec);
    for (int k = 1; k <= n; ++k) {
        FieldElement c = sigma[k - 1];
        if (k % 2 == 1) c = fe_neg(spec, c);
        poly[n - k] = c;
    }
    std::vector<FieldElement> roots;
    int64_t q = spec.order();
    int deg = n;
    for (int64_t v = 0; v < q && deg > 0; ++v) {
        FieldElement r = fe_from_value(spec, v);
        while (deg > 0) {
            // Evaluate by Horner.
            FieldElement acc = poly[deg];
            for (int i = deg - 1; i >= 0; --i)
                acc = fe_add(spec, fe_mul(spec, acc, r), poly[i]);
            if (!fe_is_zero(acc)) break;
            // Synthetic division by (lambda - r).
            std::vector<FieldElement> quot(deg, fe_zero(spec));
            FieldElement carry = poly[deg];
            for (int i = deg - 1; i >= 0; --i) {
                quot[i] = carry;
                carry = fe_add(spec, poly[i], fe_mul(spec, carry, r));
            }
            poly = std::move(quot);
            --deg;
            roots.push_back(r);
        }
    }
    if (deg > 0) return std::nullopt;  // does not split over the field
    std::sort(roots.begin(), roots.end(), [&](const FieldElement& a, const FieldElement& b) {
        return fe_value(spec, a) < fe_value(spec, b);
    });
    return roots;
}

}  // namespace bhg
