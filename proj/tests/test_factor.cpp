#include "doctest.h"

#include <algorithm>

#include "g2split/factor.hpp"

using namespace g2split;

namespace {
Poly<Rat> P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly<Rat>(std::move(c));
}
}  // namespace

TEST_CASE("factor x^3 - 1") {
    auto f = factor_small(P({-1, 0, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].factor == P({-1, 1}));
    CHECK(f.factors[1].factor == P({1, 1, 1}));
    CHECK(f.product() == P({-1, 0, 0, 1}));
}

TEST_CASE("repeated factors") {
    auto g = P({-1, 1});
    auto f = factor_small(g * g * P({1, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    bool found = false;
    for (const auto& fac : f.factors)
        if (fac.factor == g) {
            CHECK(fac.multiplicity == 2);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("non-monic input keeps the unit") {
    auto f = factor_small(P({-6, 0, 6}));  // 6(x-1)(x+1)
    CHECK(f.unit == Rat(6));
    CHECK(f.factors.size() == 2);
    CHECK(f.product() == P({-6, 0, 6}));
}

TEST_CASE("irreducibility of torsion-style quadratics") {
    CHECK(is_irreducible(P({864, -48, 1})));
    CHECK(is_irreducible(P({-7200, 48, 1})));
    CHECK(is_irreducible(P({2, 0, 1})));
    CHECK_FALSE(is_irreducible(P({-1, 0, 1})));
}

TEST_CASE("quartic with known quadratic split") {
    auto q1 = P({864, -48, 1});
    auto q2 = P({-7200, 48, 1});
    auto f = factor_small(q1 * q2);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].factor + f.factors[1].factor == q1 + q2);
}

TEST_CASE("degree six") {
    auto f = factor_small(P({-1, 0, 0, 0, 0, 0, 1}));  // x^6 - 1
    REQUIRE(f.factors.size() == 4);
    long total = 0;
    for (const auto& fac : f.factors) total += fac.factor.degree();
    CHECK(total == 6);
    CHECK(is_irreducible(P({1, 1, 1, 1, 1, 1, 1})));  // 7th cyclotomic
}

TEST_CASE("splitting descriptor: biquadratic quartic") {
    // (x^2 - 48x + 864)(x^2 + 48x - 7200): splits over Q(sqrt(-2), sqrt(-3))
    auto d = splitting_field_descriptor(P({864, -48, 1}) * P({-7200, 48, 1}));
    CHECK(d.degree == 4);
    CHECK(d.is_polyquadratic());
    auto gens = d.generators();
    std::sort(gens.begin(), gens.end());
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == Int(-3));
    CHECK(gens[1] == Int(-2));
    REQUIRE(d.quad_subfields.has_value());
    CHECK(d.quad_subfields->size() == 3);  // -2, -3, 6
}

TEST_CASE("splitting descriptor: single quadratic") {
    auto d = splitting_field_descriptor(P({1, 0, 1}));
    CHECK(d.degree == 2);
    REQUIRE(d.quad_subfields.has_value());
    CHECK(*d.quad_subfields == std::vector<Int>{Int(-1)});
}

TEST_CASE("splitting descriptor: cubics") {
    // x^3 - 2: disc = -108, not a square -> S3
    auto d = splitting_field_descriptor(P({-2, 0, 0, 1}));
    CHECK(d.degree == 6);
    CHECK(d.divisible_by_three);
    CHECK_FALSE(d.is_polyquadratic());
    // x^3 - 3x + 1: disc = 81, square -> C3
    auto d2 = splitting_field_descriptor(P({1, -3, 0, 1}));
    CHECK(d2.degree == 3);
    CHECK(d2.divisible_by_three);
}

TEST_CASE("splitting descriptor: irreducible quartics by Galois type") {
    // x^4 + 1: V4 with subfields -1, 2, -2
    auto v4 = splitting_field_descriptor(P({1, 0, 0, 0, 1}));
    CHECK(v4.degree == 4);
    REQUIRE(v4.is_polyquadratic());
    CHECK(v4.quad_subfields->size() == 3);
    // x^4 + x^3 + x^2 + x + 1 (5th cyclotomic): C4
    auto c4 = splitting_field_descriptor(P({1, 1, 1, 1, 1}));
    CHECK(c4.degree == 4);
    CHECK_FALSE(c4.is_polyquadratic());
    // x^4 - 2: D4
    auto d4 = splitting_field_descriptor(P({-2, 0, 0, 0, 1}));
    CHECK(d4.degree == 8);
    // x^4 + 8x + 12: A4 (disc 331776 = 576^2)
    auto a4 = splitting_field_descriptor(P({12, 8, 0, 0, 1}));
    CHECK(a4.degree == 12);
    CHECK(a4.divisible_by_three);
    // x^4 - x + 1: S4
    auto s4 = splitting_field_descriptor(P({1, -1, 0, 0, 1}));
    CHECK(s4.degree == 24);
    CHECK(s4.divisible_by_three);
}

TEST_CASE("splitting descriptor: reducible with linear and cubic") {
    // (x - 3)(x^3 + 3x^2 - 21x + 25): cubic disc determines the field
    auto cubic = P({25, -21, 3, 1});
    auto d = splitting_field_descriptor(P({-3, 1}) * cubic);
    CHECK(d.divisible_by_three);
    auto dc = splitting_field_descriptor(cubic);
    CHECK(d.degree == dc.degree);
}

TEST_CASE("same_field") {
    auto a = splitting_field_descriptor(P({2, 0, 1}));   // Q(sqrt(-2))
    auto b = splitting_field_descriptor(P({8, 0, 1}));   // Q(sqrt(-8)) = Q(sqrt(-2))
    auto c = splitting_field_descriptor(P({3, 0, 1}));   // Q(sqrt(-3))
    CHECK(a.same_field(b));
    CHECK_FALSE(a.same_field(c));
}

TEST_CASE("quadratic surds") {
    QuadSurd a{Rat(1), Rat(1), Int(2)};  // 1 + sqrt(2)
    QuadSurd b = a * a;                  // 3 + 2 sqrt(2)
    CHECK(b.u == Rat(3));
    CHECK(b.v == Rat(2));
    CHECK((b / a) == a);
    CHECK(a.norm() == Rat(-1));
    auto r = quad_surd_sqrt(b);
    REQUIRE(r.has_value());
    CHECK((*r == a || *r == QuadSurd{Rat(-1), Rat(-1), Int(2)}));
    // 1 + sqrt(2) itself has no square root in Q(sqrt 2) (norm -1 not a square)
    CHECK_FALSE(quad_surd_sqrt(a).has_value());
    // rational embedded in the field: sqrt(18) = 3 sqrt(2)
    auto s = quad_surd_sqrt(QuadSurd{Rat(18), Rat(0), Int(2)});
    REQUIRE(s.has_value());
    CHECK(s->u == Rat(0));
    CHECK((s->v == Rat(3) || s->v == Rat(-3)));
}
