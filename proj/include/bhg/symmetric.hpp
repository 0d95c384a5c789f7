#pragma once

#include <optional>
#include <vector>

#include "bhg/field.hpp"

namespace bhg {

// Power sums p_j = sum x_i^j for j = 1..k over a nonempty multiset.
std::vector<FieldElement> power_sums(const FieldSpec& spec,
                                     const std::vector<FieldElement>& values, int k);

// Elementary symmetric values (sigma_1, ..., sigma_k) recovered from power
// sums by the Newton recursion k*sigma_k = sum_{i=1..k} (-1)^{i-1} sigma_{k-i} p_i.
// Throws std::domain_error when the characteristic divides some step index k,
// i.e. when p <= k and the division is impossible.
std::vector<FieldElement> sigma_from_power_sums(const FieldSpec& spec,
                                                const std::vector<FieldElement>& power);

// Direct expansion of the elementary symmetric values of a multiset;
// independent of the Newton route.
std::vector<FieldElement> elementary_symmetric(const FieldSpec& spec,
                                               const std::vector<FieldElement>& values);

// Root multiset of the monic polynomial lambda^n - s1*lambda^{n-1} + ... +
// (-1)^n * sn, found by exhaustive evaluation with repeated synthetic
// division so multiplicities are exact. nullopt when the polynomial does not
// split over the field. Result is sorted in the canonical element order.
std::optional<std::vector<FieldElement>> roots_from_sigma(const FieldSpec& spec,
                                                          const std::vector<FieldElement>& sigma);

}  // namespace bhg
