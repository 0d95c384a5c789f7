#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "bhg/constructions.hpp"
#include "bhg/verifier.hpp"

using namespace bhg;

namespace {

BhgSet ints(GroupSpec spec, std::vector<int64_t> vals, int h = 2,
            std::optional<int64_t> g = std::nullopt) {
    std::vector<GroupElement> e;
    for (int64_t v : vals) e.push_back({v});
    return make_set(std::move(spec), std::move(e), h, g);
}

std::vector<GroupElement> sorted(std::vector<GroupElement> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("moment curve over GF(3)") {
    auto cs = moment_curve(FieldSpec::make(3, 1), 2);
    CHECK(cs.set.elements == std::vector<GroupElement>{{0, 0}, {1, 1}, {2, 1}});
    CHECK(cs.cert.guaranteed_h == 2);
    CHECK(cs.cert.guaranteed_g == 1);
}

TEST_CASE("moment curve over GF(9) reproduces the worked pair table") {
    auto spec = FieldSpec::make(3, 2, std::vector<int64_t>{1, 2});
    auto rows = moment_curve_rows(spec, 2);
    REQUIRE(rows.size() == 9);
    auto find_row = [&](const FieldElement& x) {
        for (const auto& r : rows)
            if (r[0] == x) return r[1];
        FAIL("row not found");
        return fe_zero(spec);
    };
    CHECK(find_row(FieldElement{{1, 0}}) == FieldElement{{2, 1}});  // (theta, 2theta+1)
    CHECK(find_row(FieldElement{{1, 2}}) == FieldElement{{0, 2}});  // (theta+2, 2)
    CHECK(find_row(FieldElement{{2, 2}}) == FieldElement{{1, 2}});  // (2theta+2, theta+2)
}

TEST_CASE("vectorized moment curve gives the 9 quadruples on Z_3^4") {
    auto cs = moment_curve_vectorized(3, 2, 2, std::vector<int64_t>{1, 2});
    std::vector<GroupElement> expected = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 2, 0, 1}, {1, 0, 2, 1}, {1, 1, 1, 2},
        {1, 2, 0, 2}, {2, 0, 2, 1}, {2, 1, 0, 2}, {2, 2, 1, 2}};
    CHECK(cs.set.elements == sorted(expected));
    CHECK(cs.set.spec == GroupSpec::product({3, 3, 3, 3}));
    CHECK(min_g(cs.set, 2) == 1);
}

TEST_CASE("vectorization is the identity for n = 1") {
    auto direct = moment_curve(FieldSpec::make(5, 1), 2);
    auto via = moment_curve_vectorized(5, 1, 2);
    CHECK(direct.set.elements == via.set.elements);
}

TEST_CASE("moment curve rejects p <= h") {
    CHECK_THROWS_AS(moment_curve(FieldSpec::make(3, 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(moment_curve(FieldSpec::make(2, 2), 2), std::invalid_argument);
}

TEST_CASE("translate union reproduces the 9-element example") {
    auto a = ints(GroupSpec::product({8}), {1, 2, 7}, 2, 1);
    auto cs = translate_union(a, 8, {0, 1, 3});
    CHECK(cs.set.elements ==
          std::vector<GroupElement>{{1}, {2}, {7}, {9}, {10}, {15}, {25}, {26}, {31}});
    CHECK_FALSE(cs.cert.guaranteed_g.has_value());
    CHECK(min_g(cs.set, 2) == 2);

    auto identity = translate_union(a, 8, {0});
    CHECK(identity.set.elements == std::vector<GroupElement>{{1}, {2}, {7}});
    CHECK_THROWS_AS(translate_union(a, 8, {}), std::invalid_argument);
}

TEST_CASE("base-2 and base-6 liftings match the worked tables") {
    auto b = ints(GroupSpec::box(1, 32), {1, 2, 7, 9, 10, 15, 25, 26, 31}, 2, 2);

    auto lifted2 = base_digits(b, 2, 5);
    std::vector<GroupElement> expect2 = {
        {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 1, 1}, {0, 1, 0, 0, 1}, {0, 1, 0, 1, 0},
        {0, 1, 1, 1, 1}, {1, 1, 0, 0, 1}, {1, 1, 0, 1, 0}, {1, 1, 1, 1, 1}};
    CHECK(lifted2.set.elements == sorted(expect2));
    CHECK(lifted2.set.g == 2);
    CHECK(min_g(lifted2.set, 2) == 2);

    auto lifted6 = base_digits(b, 6, 2);
    std::vector<GroupElement> expect6 = {{0, 1}, {0, 2}, {1, 1}, {1, 3}, {1, 4},
                                         {2, 3}, {4, 1}, {4, 2}, {5, 1}};
    CHECK(lifted6.set.elements == sorted(expect6));
    CHECK(min_g(lifted6.set, 2) == 2);
}

TEST_CASE("digit lifting edge cases") {
    auto zero = ints(GroupSpec::box(1, 2), {0});
    CHECK(base_digits(zero, 3, 4).set.elements == std::vector<GroupElement>{{0, 0, 0, 0}});
    auto big = ints(GroupSpec::box(1, 32), {31});
    CHECK_THROWS_AS(base_digits(big, 2, 4), std::invalid_argument);  // 31 >= 2^4
    CHECK_THROWS_AS(base_digits(big, 1, 5), std::invalid_argument);
}

TEST_CASE("digit lifting recomposes to the original integers") {
    auto b = ints(GroupSpec::box(1, 216), {0, 5, 36, 41, 119, 215}, 2);
    auto lifted = base_digits(b, 6, 3);
    REQUIRE(lifted.set.size() == b.size());
    std::vector<int64_t> back;
    for (const auto& e : lifted.set.elements) {
        int64_t v = 0;
        for (int64_t digit : e) v = v * 6 + digit;
        back.push_back(v);
    }
    std::sort(back.begin(), back.end());
    CHECK(back == std::vector<int64_t>{0, 5, 36, 41, 119, 215});
}

TEST_CASE("golomb set reproduces the q=17 example") {
    auto spec = FieldSpec::make(17, 1);
    auto cs = golomb_set(spec, FieldElement{{3}}, FieldElement{{5}}, FieldElement{{1}});
    std::vector<GroupElement> expected = {
        {1, 14}, {2, 10}, {3, 2},  {4, 1},  {5, 4},  {6, 13}, {7, 15}, {8, 6},
        {9, 12}, {10, 7}, {11, 11}, {12, 5}, {13, 3}, {14, 8}, {15, 9}};
    CHECK(cs.set.elements == sorted(expected));
    CHECK(cs.set.spec == GroupSpec::product({16, 16}));
    CHECK(min_g(cs.set, 2) == 1);
}

TEST_CASE("golomb set small cases including characteristic 2") {
    auto gf5 = FieldSpec::make(5, 1);
    auto cs5 = golomb_set(gf5, FieldElement{{2}}, FieldElement{{2}}, FieldElement{{1}});
    CHECK(cs5.set.elements == std::vector<GroupElement>{{1, 2}, {2, 1}, {3, 3}});
    CHECK(cs5.set.spec == GroupSpec::product({4, 4}));

    auto gf4 = FieldSpec::make(2, 2, std::vector<int64_t>{1, 1});
    FieldElement theta{{1, 0}};
    auto cs4 = golomb_set(gf4, theta, theta, fe_one(gf4));
    CHECK(cs4.set.elements == std::vector<GroupElement>{{1, 2}, {2, 1}});
    CHECK(cs4.set.spec == GroupSpec::product({3, 3}));
}

TEST_CASE("golomb set rejects bad parameters") {
    auto gf17 = FieldSpec::make(17, 1);
    CHECK_THROWS_AS(golomb_set(gf17, FieldElement{{2}}, FieldElement{{5}}, FieldElement{{1}}),
                    std::invalid_argument);  // 2 is not primitive mod 17
    CHECK_THROWS_AS(golomb_set(gf17, FieldElement{{3}}, FieldElement{{5}}, fe_zero(gf17)),
                    std::invalid_argument);
}

TEST_CASE("golomb coordinates satisfy beta^second = a - alpha^first") {
    for (int64_t q : {5, 7, 11, 13}) {
        auto spec = FieldSpec::make(q, 1);
        auto alpha = find_primitive(spec);
        auto beta = alpha;
        auto a = fe_one(spec);
        auto cs = golomb_set(spec, alpha, beta, a);
        CHECK(cs.set.size() == q - 2);
        std::vector<int64_t> firsts;
        for (const auto& e : cs.set.elements) {
            firsts.push_back(e[0]);
            // Exponent 0 stands for i = q-1.
            int64_t i = e[0] == 0 ? q - 1 : e[0];
            CHECK(fe_pow(spec, beta, e[1]) == fe_sub(spec, a, fe_pow(spec, alpha, i)));
        }
        std::sort(firsts.begin(), firsts.end());
        CHECK(std::adjacent_find(firsts.begin(), firsts.end()) == firsts.end());
    }
}

TEST_CASE("modular reduction reproduces the worked reduced set") {
    auto spec = FieldSpec::make(17, 1);
    auto golomb = golomb_set(spec, FieldElement{{3}}, FieldElement{{5}}, FieldElement{{1}});
    auto res = modular_reduce(golomb.set, {2, 2});
    std::vector<GroupElement> expected = {
        {1, 6}, {2, 2}, {3, 2}, {4, 1}, {5, 4}, {6, 5}, {7, 7}, {0, 6},
        {1, 4}, {2, 7}, {3, 3}, {4, 5}, {5, 3}, {6, 0}, {7, 1}};
    CHECK(res.out.set.elements == sorted(expected));
    CHECK(res.out.set.spec == GroupSpec::product({8, 8}));
    CHECK(res.out.set.g == 4);  // certificate 1 * 2 * 2
    CHECK(res.collisions == 0);
    CHECK(min_g(res.out.set, 2) <= 4);
}

TEST_CASE("trivial divisors leave the set unchanged") {
    auto set = make_set(GroupSpec::product({6, 4}), {{1, 2}, {5, 3}, {0, 1}}, 2, 1);
    auto res = modular_reduce(set, {1, 1});
    CHECK(res.out.set.elements == set.elements);
    CHECK(res.out.set.g == 1);
    CHECK(res.collisions == 0);
    CHECK_THROWS_AS(modular_reduce(set, {4, 1}), std::invalid_argument);
}

TEST_CASE("reduction commutes with addition modulo the reduced moduli") {
    auto spec = GroupSpec::product({12, 8});
    std::vector<int64_t> divisors{3, 2};
    auto reduced_spec = GroupSpec::product({4, 4});
    auto reduce1 = [&](const GroupElement& e) {
        return GroupElement{e[0] % 4, e[1] % 4};
    };
    for (const auto& x : spec.universe())
        for (const auto& y : {GroupElement{5, 7}, GroupElement{11, 3}})
            CHECK(reduce1(group_add(spec, x, y)) ==
                  group_add(reduced_spec, reduce1(x), reduce1(y)));
}

TEST_CASE("certificate soundness across a desk-scale sweep") {
    // Moment curves: all primes p <= 13, h in {2,3} with p > h.
    for (int64_t p : {3, 5, 7, 11, 13}) {
        for (int h : {2, 3}) {
            if (p <= h) continue;
            auto cs = moment_curve(FieldSpec::make(p, 1), h);
            CHECK(is_bhg(cs.set, h, *cs.cert.guaranteed_g).ok);
        }
    }
    // Golomb over prime powers q <= 17.
    for (int64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17}) {
        int64_t p = q;
        int n = 1;
        for (int64_t f = 2; f * f <= q; ++f)
            if (q % f == 0) {
                p = f;
                n = 0;
                for (int64_t r = q; r > 1; r /= f) ++n;
                break;
            }
        auto spec = FieldSpec::make(p, n);
        auto alpha = find_primitive(spec);
        auto cs = golomb_set(spec, alpha, alpha, fe_one(spec));
        CHECK(cs.set.size() == q - 2);
        CHECK(is_bhg(cs.set, 2, 1).ok);
    }
    // Reductions of the q=13 golomb set over a divisor grid.
    auto g13 = golomb_set(FieldSpec::make(13, 1), FieldElement{{2}}, FieldElement{{2}},
                          FieldElement{{1}});
    for (int64_t d1 : {1, 2, 3}) {
        for (int64_t d2 : {1, 2, 3}) {
            if (12 / d1 < 2 || 12 / d2 < 2) continue;
            auto res = modular_reduce(g13.set, {d1, d2});
            CHECK(is_bhg(res.out.set, 2, *res.out.cert.guaranteed_g).ok);
        }
    }
}
