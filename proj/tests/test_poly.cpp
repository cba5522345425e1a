#include "doctest.h"

#include "g2split/poly.hpp"
#include "g2split/rational.hpp"

using namespace g2split;

namespace {
Poly<Rat> P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly<Rat>(std::move(c));
}
}  // namespace

TEST_CASE("basic arithmetic and degree") {
    auto f = P({-1, 0, 1});  // x^2 - 1
    auto g = P({1, 1});      // x + 1
    CHECK(f.degree() == 2);
    CHECK((f * g).degree() == 3);
    CHECK((f - f).is_zero());
    CHECK((f - f).degree() == -1);
    CHECK(f(Rat(3)) == Rat(8));
    CHECK((f / g) == P({-1, 1}));
}

TEST_CASE("divrem") {
    auto a = P({1, 2, 0, 1});  // x^3 + 2x + 1
    auto b = P({-1, 1});       // x - 1
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(0) == Rat(4));
}

TEST_CASE("gcd") {
    // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1
    auto g = poly_gcd(P({-1, 0, 1}), P({1, -2, 1}));
    CHECK(g == P({-1, 1}));
    auto [d, u, v] = poly_xgcd(P({-1, 0, 1}), P({2, 1}));
    CHECK(u * P({-1, 0, 1}) + v * P({2, 1}) == d);
    CHECK(d.degree() == 0);
}

TEST_CASE("discriminants") {
    CHECK(discriminant(P({-1, 0, 0, 1})) == Rat(-27));   // x^3 - 1
    CHECK(discriminant(P({0, 3, 0, 1})) == Rat(-108));   // x^3 + 3x
    CHECK(discriminant(P({-4, 0, 1})) == Rat(16));       // x^2 - 4
    // quadratic a x^2 + b x + c -> b^2 - 4ac
    CHECK(discriminant(P({5, -3, 2})) == Rat(9 - 40));
}

TEST_CASE("resultant agrees with evaluation at roots") {
    // res(f, g) = lc(f)^deg g * prod g(alpha_i) over roots of f
    auto f = P({-2, 0, 1});  // x^2 - 2, roots +-sqrt(2)
    auto g = P({-3, 0, 1});  // x^2 - 3
    // prod (r^2 - 3) = (2 - 3)^... : (sqrt2^2-3)(... ) = (-1)(-1) = 1
    CHECK(resultant(f, g) == Rat(1));
    CHECK(resultant(f, P({0, 1})) == Rat(-2));  // prod of roots of f times sign
}

TEST_CASE("substitutions") {
    auto f = P({1, 0, 1});  // x^2 + 1
    CHECK(f.dilate(Rat(2)) == P({1, 0, 4}));
    CHECK(f.shift(Rat(1)) == P({2, 2, 1}));  // (x+1)^2 + 1
    CHECK(P({1, 2, 3}).reversed() == P({3, 2, 1}));
}

TEST_CASE("integral models") {
    Poly<Rat> f({Rat(1, 4), Rat(1, 2), Rat(1)});  // x^2 + x/2 + 1/4
    auto [m, c] = monic_integral_model(f);
    CHECK(m.is_monic());
    for (const auto& cc : m.coeffs()) CHECK(is_integer(cc));
    CHECK(c == Int(2));
    CHECK(m == P({1, 1, 1}));
    CHECK(primitive_part(Poly<Rat>({Rat(2, 3), Rat(4, 3)})) == P({1, 2}));
}
