#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bhg {

// GF(p^n) described by a monic irreducible modulus of degree n over Z_p.
// The modulus is stored as its tail (c_{n-1}, ..., c_0), high-to-low, with
// the leading coefficient 1 implicit. For n = 1 the modulus is x, tail (0).
struct FieldSpec {
    int64_t p = 0;
    int n = 0;
    std::vector<int64_t> modulus;

    int64_t order() const;
    bool operator==(const FieldSpec&) const = default;

    // Uses the canonical (lexicographically smallest) irreducible modulus
    // unless one is supplied explicitly.
    static FieldSpec make(int64_t p, int n,
                          std::optional<std::vector<int64_t>> modulus = std::nullopt);
};

// Coefficient tuple (a_{n-1}, ..., a_0), high-to-low, each in [0, p-1],
// representing a_0 + a_1*theta + ... + a_{n-1}*theta^{n-1}.
struct FieldElement {
    std::vector<int64_t> coeffs;

    bool operator==(const FieldElement&) const = default;
    auto operator<=>(const FieldElement&) const = default;
};

bool is_prime(int64_t p);

// Lexicographically smallest monic irreducible of degree n over Z_p,
// returned as the high-to-low tail (c_{n-1}, ..., c_0).
std::vector<int64_t> find_irreducible(int64_t p, int n);
bool is_irreducible(int64_t p, const std::vector<int64_t>& tail);

FieldElement fe_zero(const FieldSpec& spec);
FieldElement fe_one(const FieldSpec& spec);
bool fe_is_zero(const FieldElement& x);

// Canonical element order: coefficient tuples read as base-p integers,
// value(x) = a_0 + a_1*p + ... + a_{n-1}*p^{n-1}.
int64_t fe_value(const FieldSpec& spec, const FieldElement& x);
FieldElement fe_from_value(const FieldSpec& spec, int64_t v);

FieldElement fe_add(const FieldSpec& spec, const FieldElement& x, const FieldElement& y);
FieldElement fe_sub(const FieldSpec& spec, const FieldElement& x, const FieldElement& y);
FieldElement fe_neg(const FieldSpec& spec, const FieldElement& x);
FieldElement fe_mul(const FieldSpec& spec, const FieldElement& x, const FieldElement& y);
FieldElement fe_pow(const FieldSpec& spec, const FieldElement& x, int64_t e);

int64_t multiplicative_order(const FieldSpec& spec, const FieldElement& x);
bool is_primitive(const FieldSpec& spec, const FieldElement& x);

// Smallest primitive element in the canonical element order.
FieldElement find_primitive(const FieldSpec& spec);

// Full discrete-log table for one primitive base: dlog(base^e) = e,
// exponents reduced into [0, q-2]. Built once, read-only afterwards.
class DlogTable {
public:
    DlogTable(const FieldSpec& spec, const FieldElement& base);
    int64_t dlog(const FieldElement& x) const;
    const FieldSpec& spec() const { return spec_; }

private:
    FieldSpec spec_;
    std::vector<int64_t> exponent_by_value_;
};

// Coefficient-vector isomorphism between (GF(p^n), +) and (Z_p^n, +):
// vectorize returns (a_{n-1}, ..., a_0); devectorize is its inverse.
std::vector<int64_t> vectorize(const FieldSpec& spec, const FieldElement& x);
FieldElement devectorize(const FieldSpec& spec, const std::vector<int64_t>& tuple);

// Polynomial-in-theta rendering, e.g. "2t+1", "t", "0".
std::string fe_to_string(const FieldSpec& spec, const FieldElement& x);
FieldElement fe_parse(const FieldSpec& spec, const std::string& text);

}  // namespace bhg
