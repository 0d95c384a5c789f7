#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhg/field.hpp"
#include "bhg/group.hpp"

namespace bhg {

// What a construction proves about its output. guaranteed_g is absent when
// the construction carries no proven bound (translate_union).
struct Certificate {
    std::string construction;
    std::string params;
    int guaranteed_h = 2;
    std::optional<int64_t> guaranteed_g;
};

struct ConstructedSet {
    BhgSet set;
    Certificate cert;
};

// Moment-curve rows {(x, x^2, ..., x^h) : x in F}, as field elements.
// Requires characteristic p > h.
std::vector<std::vector<FieldElement>> moment_curve_rows(const FieldSpec& spec, int h);

// The moment-curve set as a concrete group set: each field coordinate is
// vectorized, so the ambient group is Product(p, ..., p) with h*n factors
// (for n = 1 this is just Product(p, ..., p) with the values themselves).
// Certificate (h, g = 1).
ConstructedSet moment_curve(const FieldSpec& spec, int h);
ConstructedSet moment_curve_vectorized(int64_t p, int n, int h,
                                       std::optional<std::vector<int64_t>> modulus = std::nullopt);

// Base-N digit lifting: each integer in [0, N^d - 1] becomes its exactly-d
// digit expansion, high-to-low. Input must be one-dimensional; the (h, g)
// claim carries over unchanged. Output lives in Box(d, N).
ConstructedSet base_digits(const BhgSet& input, int64_t base, int d);

// Union of translates A + c*m over the multiplier set; elements as plain
// integers in Box(1, (max c + 1) * m). No g is claimed: the bound depends on
// the specific instance, so g must be measured.
ConstructedSet translate_union(const BhgSet& input, int64_t m,
                               const std::vector<int64_t>& coeffs);

struct ReduceResult {
    ConstructedSet out;
    int64_t collisions = 0;  // input elements minus distinct images
};

// Coordinatewise reduction mod m_i/g_i. Certificate multiplicity becomes
// g * prod(g_i) when the input carries a claim.
ReduceResult modular_reduce(const BhgSet& input, const std::vector<int64_t>& divisors);

// Golomb Sidon set {(i, log_beta(a - alpha^i))} on Product(q-1, q-1); the
// exponent i = q-1 is stored as 0, and the single index with alpha^i = a is
// excluded, giving exactly q-2 pairs. Certificate (2, 1).
ConstructedSet golomb_set(const FieldSpec& spec, const FieldElement& alpha,
                          const FieldElement& beta, const FieldElement& a);

}  // namespace bhg
