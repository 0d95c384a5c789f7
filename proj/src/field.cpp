#include "bhg/field.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bhg {

namespace {

int64_t mod_p(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

// Polynomials over Z_p, low-to-high coefficient order, no trailing zeros.
using Poly = std::vector<int64_t>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
    return trim(r);
}

int64_t inv_mod_p(int64_t a, int64_t p) {
    // p is prime and small; Fermat.
    int64_t r = 1, base = mod_p(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1) r = mod_p(r * base, p);
        base = mod_p(base * base, p);
        e >>= 1;
    }
    return r;
}

// Remainder of a mod b, b nonzero.
Poly poly_rem(Poly a, const Poly& b, int64_t p) {
    a = trim(std::move(a));
    int64_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        int64_t factor = mod_p(a.back() * lead_inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = mod_p(a[shift + i] - factor * b[i], p);
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

// Monic modulus polynomial low-to-high from a high-to-low tail.
Poly modulus_poly(int64_t /*p*/, const std::vector<int64_t>& tail) {
    Poly m(tail.size() + 1, 0);
    m.back() = 1;
    for (size_t i = 0; i < tail.size(); ++i)
        m[tail.size() - 1 - i] = tail[i];
    return m;
}

int64_t poly_eval(const Poly& a, int64_t x, int64_t p) {
    int64_t r = 0;
    for (size_t i = a.size(); i-- > 0;) r = mod_p(r * x + a[i], p);
    return r;
}

void check_element(const FieldSpec& spec, const FieldElement& x) {
    if (static_cast<int>(x.coeffs.size()) != spec.n)
        throw std::invalid_argument("field element does not match field spec");
    for (int64_t c : x.coeffs)
        if (c < 0 || c >= spec.p)
            throw std::invalid_argument("field element coefficient out of range");
}

Poly to_poly(const FieldElement& x) {
    Poly a(x.coeffs.size(), 0);
    for (size_t i = 0; i < x.coeffs.size(); ++i)
        a[x.coeffs.size() - 1 - i] = x.coeffs[i];
    return trim(std::move(a));
}

FieldElement from_poly(const FieldSpec& spec, const Poly& a) {
    FieldElement x;
    x.coeffs.assign(spec.n, 0);
    for (size_t i = 0; i < a.size(); ++i)
        x.coeffs[spec.n - 1 - i] = a[i];
    return x;
}

std::vector<int64_t> trial_factorize(int64_t m) {
    std::vector<int64_t> factors;
    for (int64_t f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            factors.push_back(f);
            while (m % f == 0) m /= f;
        }
    }
    if (m > 1) factors.push_back(m);
    return factors;
}

}  // namespace

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

int64_t FieldSpec::order() const {
    int64_t q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    return q;
}

FieldSpec FieldSpec::make(int64_t p, int n, std::optional<std::vector<int64_t>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    FieldSpec spec;
    spec.p = p;
    spec.n = n;
    if (modulus) {
        if (static_cast<int>(modulus->size()) != n)
            throw std::invalid_argument("modulus tail must have length n");
        for (int64_t& c : *modulus) c = mod_p(c, p);
        if (n > 1 && !is_irreducible(p, *modulus))
            throw std::invalid_argument("modulus is not irreducible over Z_p");
        spec.modulus = std::move(*modulus);
    } else {
        spec.modulus = find_irreducible(p, n);
    }
    return spec;
}

bool is_irreducible(int64_t p, const std::vector<int64_t>& tail) {
    int n = static_cast<int>(tail.size());
    if (n == 1) return true;  // x + c is always irreducible
    Poly m = modulus_poly(p, tail);
    // No roots in Z_p; settles degree 2 and 3.
    for (int64_t x = 0; x < p; ++x)
        if (poly_eval(m, x, p) == 0) return false;
    if (n <= 3) return true;
    // Trial division by every monic factor of degree 2..n/2.
    for (int deg = 2; deg <= n / 2; ++deg) {
        int64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (int64_t code = 0; code < count; ++code) {
            Poly f(deg + 1, 0);
            f[deg] = 1;
            int64_t c = code;
            for (int i = 0; i < deg; ++i) {
                f[i] = c % p;
                c /= p;
            }
            if (poly_rem(m, f, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int64_t> find_irreducible(int64_t p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (n == 1) return {0};  // the polynomial x
    // Enumerate tails (c_{n-1}, ..., c_0) in lexicographic order.
    std::vector<int64_t> tail(n, 0);
    while (true) {
        if (is_irreducible(p, tail)) return tail;
        int i = n - 1;
        while (i >= 0 && tail[i] == p - 1) tail[i--] = 0;
        if (i < 0) break;
        ++tail[i];
    }
    throw std::runtime_error("no irreducible polynomial found");  // unreachable
}

FieldElement fe_zero(const FieldSpec& spec) {
    return FieldElement{std::vector<int64_t>(spec.n, 0)};
}

FieldElement fe_one(const FieldSpec& spec) {
    FieldElement x = fe_zero(spec);
    x.coeffs.back() = 1;
    return x;
}

bool fe_is_zero(const FieldElement& x) {
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](int64_t c) { return c == 0; });
}

int64_t fe_value(const FieldSpec& spec, const FieldElement& x) {
    check_element(spec, x);
    int64_t v = 0;
    for (int64_t c : x.coeffs) v = v * spec.p + c;
    return v;
}

FieldElement fe_from_value(const FieldSpec& spec, int64_t v) {
    if (v < 0 || v >= spec.order())
        throw std::invalid_argument("element value out of range");
    FieldElement x = fe_zero(spec);
    for (int i = spec.n - 1; i >= 0; --i) {
        x.coeffs[i] = v % spec.p;
        v /= spec.p;
    }
    return x;
}

FieldElement fe_add(const FieldSpec& spec, const FieldElement& x, const FieldElement& y) {
    check_element(spec, x);
    check_element(spec, y);
    FieldElement r = fe_zero(spec);
    for (int i = 0; i < spec.n; ++i)
        r.coeffs[i] = mod_p(x.coeffs[i] + y.coeffs[i], spec.p);
    return r;
}

FieldElement fe_neg(const FieldSpec& spec, const FieldElement& x) {
    check_element(spec, x);
    FieldElement r = fe_zero(spec);
    for (int i = 0; i < spec.n; ++i)
        r.coeffs[i] = mod_p(-x.coeffs[i], spec.p);
    return r;
}

FieldElement fe_sub(const FieldSpec& spec, const FieldElement& x, const FieldElement& y) {
    return fe_add(spec, x, fe_neg(spec, y));
}

FieldElement fe_mul(const FieldSpec& spec, const FieldElement& x, const FieldElement& y) {
    check_element(spec, x);
    check_element(spec, y);
    Poly prod = poly_mul(to_poly(x), to_poly(y), spec.p);
    if (spec.n == 1) {
        // Degenerate modulus x; arithmetic is plain mod p and the product
        // is already degree 0.
        return from_poly(spec, prod);
    }
    Poly rem = poly_rem(std::move(prod), modulus_poly(spec.p, spec.modulus), spec.p);
    return from_poly(spec, rem);
}

FieldElement fe_pow(const FieldSpec& spec, const FieldElement& x, int64_t e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    FieldElement r = fe_one(spec);
    FieldElement base = x;
    while (e > 0) {
        if (e & 1) r = fe_mul(spec, r, base);
        base = fe_mul(spec, base, base);
        e >>= 1;
    }
    return r;
}

int64_t multiplicative_order(const FieldSpec& spec, const FieldElement& x) {
    if (fe_is_zero(x)) throw std::invalid_argument("zero has no multiplicative order");
    int64_t m = spec.order() - 1;
    int64_t ord = m;
    // Strip each prime factor of q-1 while x^(ord/f) stays 1.
    for (int64_t f : trial_factorize(m)) {
        while (ord % f == 0 && fe_pow(spec, x, ord / f) == fe_one(spec))
            ord /= f;
    }
    return ord;
}

bool is_primitive(const FieldSpec& spec, const FieldElement& x) {
    if (fe_is_zero(x)) return false;
    return multiplicative_order(spec, x) == spec.order() - 1;
}

FieldElement find_primitive(const FieldSpec& spec) {
    int64_t q = spec.order();
    for (int64_t v = 1; v < q; ++v) {
        FieldElement x = fe_from_value(spec, v);
        if (is_primitive(spec, x)) return x;
    }
    throw std::runtime_error("no primitive element found");  // unreachable for q >= 2
}

DlogTable::DlogTable(const FieldSpec& spec, const FieldElement& base) : spec_(spec) {
    if (!is_primitive(spec, base))
        throw std::invalid_argument("discrete-log base must be primitive");
    int64_t q = spec.order();
    exponent_by_value_.assign(q, -1);
    FieldElement cur = fe_one(spec);
    for (int64_t e = 0; e < q - 1; ++e) {
        exponent_by_value_[fe_value(spec, cur)] = e;
        cur = fe_mul(spec, cur, base);
    }
}

int64_t DlogTable::dlog(const FieldElement& x) const {
    if (fe_is_zero(x)) throw std::invalid_argument("discrete log of zero");
    return exponent_by_value_[fe_value(spec_, x)];
}

std::vector<int64_t> vectorize(const FieldSpec& spec, const FieldElement& x) {
    check_element(spec, x);
    return x.coeffs;
}

FieldElement devectorize(const FieldSpec& spec, const std::vector<int64_t>& tuple) {
    if (static_cast<int>(tuple.size()) != spec.n)
        throw std::invalid_argument("tuple length does not match extension degree");
    FieldElement x{tuple};
    check_element(spec, x);
    return x;
}

std::string fe_to_string(const FieldSpec& spec, const FieldElement& x) {
    check_element(spec, x);
    std::string out;
    for (int i = 0; i < spec.n; ++i) {
        int64_t c = x.coeffs[i];
        if (c == 0) continue;
        int deg = spec.n - 1 - i;
        if (!out.empty()) out += "+";
        if (deg == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "t";
            if (deg > 1) out += "^" + std::to_string(deg);
        }
    }
    return out.empty() ? "0" : out;
}

FieldElement fe_parse(const FieldSpec& spec, const std::string& text) {
    FieldElement x = fe_zero(spec);
    size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("bad field element: " + text); };
    if (text.empty()) fail();
    while (i < text.size()) {
        int64_t coeff = 0;
        bool saw_digits = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = coeff * 10 + (text[i] - '0');
            saw_digits = true;
            ++i;
        }
        int deg = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            deg = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                deg = 0;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    deg = deg * 10 + (text[i++] - '0');
            }
            if (!saw_digits) coeff = 1;
        } else if (!saw_digits) {
            fail();
        }
        if (deg >= spec.n) fail();
        int idx = spec.n - 1 - deg;
        x.coeffs[idx] = mod_p(x.coeffs[idx] + coeff, spec.p);
        if (i < text.size()) {
            if (text[i] != '+') fail();
            ++i;
            if (i == text.size()) fail();
        }
    }
    return x;
}

}  // namespace bhg
