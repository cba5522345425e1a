#include "doctest.h"

#include <array>
#include <random>
#include <vector>

#include "g2split/bigfloat.hpp"
#include "g2split/genus2.hpp"

using namespace g2split;

namespace {

NFElem npow2(const NFElem& a, int e) {
    NFElem out(1);
    for (int i = 0; i < e; ++i) out = out * a;
    return out;
}

// root-difference evaluation of the invariants at high precision,
// independent of the frozen coefficient formulas
struct OracleIC {
    BigFloat I2, I4, I6, I10;
};

OracleIC oracle(const Poly<Rat>& f, unsigned bits = 256) {
    PrecisionGuard guard(bits);
    auto roots = complex_roots(f, bits);
    // treat degree 5 through the reversal identity x -> 1/x (exercised
    // separately below), so the oracle itself only handles degree 6
    REQUIRE(f.degree() == 6);
    auto d2 = [&](int i, int j) {
        BigComplex d = roots[i] - roots[j];
        return d * d;
    };
    BigComplex lead = BigComplex::from_rat(f.leading(), bits);
    BigComplex l2 = lead * lead;
    BigComplex l4 = l2 * l2;
    BigComplex i2{BigFloat(0), BigFloat(0), bits}, i4 = i2, i6 = i2, i10 = i2;
    static const int pairings[15][6] = {
        {0, 1, 2, 3, 4, 5}, {0, 1, 2, 4, 3, 5}, {0, 1, 2, 5, 3, 4}, {0, 2, 1, 3, 4, 5},
        {0, 2, 1, 4, 3, 5}, {0, 2, 1, 5, 3, 4}, {0, 3, 1, 2, 4, 5}, {0, 3, 1, 4, 2, 5},
        {0, 3, 1, 5, 2, 4}, {0, 4, 1, 2, 3, 5}, {0, 4, 1, 3, 2, 5}, {0, 4, 1, 5, 2, 3},
        {0, 5, 1, 2, 3, 4}, {0, 5, 1, 3, 2, 4}, {0, 5, 1, 4, 2, 3}};
    for (const auto& p : pairings) i2 = i2 + d2(p[0], p[1]) * d2(p[2], p[3]) * d2(p[4], p[5]);
    i2 = l2 * i2;
    static const int triples[10][6] = {
        {0, 1, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 4, 2, 3, 5}, {0, 1, 5, 2, 3, 4},
        {0, 2, 3, 1, 4, 5}, {0, 2, 4, 1, 3, 5}, {0, 2, 5, 1, 3, 4}, {0, 3, 4, 1, 2, 5},
        {0, 3, 5, 1, 2, 4}, {0, 4, 5, 1, 2, 3}};
    auto tri = [&](int a, int b, int c) { return d2(a, b) * d2(b, c) * d2(c, a); };
    for (const auto& t : triples) i4 = i4 + tri(t[0], t[1], t[2]) * tri(t[3], t[4], t[5]);
    i4 = l4 * i4;
    for (const auto& t : triples) {
        int perm[3] = {t[3], t[4], t[5]};
        std::sort(perm, perm + 3);
        do {
            i6 = i6 + tri(t[0], t[1], t[2]) * tri(perm[0], perm[1], perm[2]) *
                          d2(t[0], perm[0]) * d2(t[1], perm[1]) * d2(t[2], perm[2]);
        } while (std::next_permutation(perm, perm + 3));
    }
    i6 = l4 * l2 * i6;
    BigComplex prod{BigFloat(1), BigFloat(0), bits};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) prod = prod * d2(i, j);
    i10 = l4 * l4 * l2 * prod;
    return {i2.re, i4.re, i6.re, i10.re};
}

void check_close(const BigFloat& approx, const Rat& exact) {
    BigFloat e = to_bigfloat(exact);
    BigFloat scale = std::max(BigFloat(1), BigFloat(abs(e)));
    BigFloat tol = scale * pow(BigFloat(2), -60);
    CHECK(abs(approx - e) < tol);
}

Poly<Rat> rand_sextic(std::mt19937& rng) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    while (true) {
        std::vector<Rat> c(7);
        for (auto& v : c) v = Rat(coeff(rng));
        if (c[6] == 0) continue;
        Poly<Rat> f(c);
        if (discriminant(f) == 0) continue;
        return f;
    }
}

}  // namespace

TEST_CASE("classical values") {
    auto u = igusa_clebsch(Poly<Rat>({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(u.I2 == Rat(-240));
    CHECK(u.I10 == discriminant(Poly<Rat>({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)})));
    // x^5 - x
    auto v = igusa_clebsch(Poly<Rat>({Rat(0), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(v.I2 == Rat(-40));
    CHECK(v.I10 != 0);
    CHECK_THROWS(igusa_clebsch(Poly<Rat>({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)})));
    CHECK_THROWS(igusa_clebsch(Poly<Rat>({Rat(1), Rat(2), Rat(1)})));
}

TEST_CASE("coefficient formulas agree with the root-difference oracle") {
    std::mt19937 rng(20250825);
    for (int n = 0; n < 50; ++n) {
        auto f = rand_sextic(rng);
        auto u = igusa_clebsch(f);
        auto o = oracle(f);
        check_close(o.I2, u.I2);
        check_close(o.I4, u.I4);
        check_close(o.I6, u.I6);
        check_close(o.I10, u.I10);
    }
}

TEST_CASE("reversal identity covers the degree-5 convention") {
    std::mt19937 rng(7);
    int done = 0;
    while (done < 10) {
        auto f = rand_sextic(rng);
        if (f.coeff(0) == 0) continue;
        std::vector<Rat> rev;
        for (int i = 6; i >= 0; --i) rev.push_back(f.coeff(i));
        auto u = igusa_clebsch(f);
        auto v = igusa_clebsch(Poly<Rat>(rev));
        CHECK(u.I2 == v.I2);
        CHECK(u.I4 == v.I4);
        CHECK(u.I6 == v.I6);
        CHECK(u.I10 == v.I10);
        ++done;
    }
    // degree 5 reverses to degree 6: x^5 - x - 1 vs x^6 f(1/x) = -x^6 - x^5 + x
    auto a = igusa_clebsch(Poly<Rat>({Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)}));
    auto b = igusa_clebsch(Poly<Rat>({Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1), Rat(-1)}));
    CHECK(a.I2 == b.I2);
    CHECK(a.I4 == b.I4);
    CHECK(a.I6 == b.I6);
    CHECK(a.I10 == b.I10);
}

TEST_CASE("weighted scaling law") {
    std::mt19937 rng(99);
    for (long lam : {2L, 3L, 5L}) {
        for (int n = 0; n < 6; ++n) {
            auto f = rand_sextic(rng);
            auto u = igusa_clebsch(f);
            // y^2 = t f(x) scales (I2, I4, I6, I10) by (t^2, t^4, t^6, t^10)
            auto v = igusa_clebsch(Rat(lam) * f);
            CHECK(v.I2 == pow_rat(Rat(lam), 2) * u.I2);
            CHECK(v.I4 == pow_rat(Rat(lam), 4) * u.I4);
            CHECK(v.I6 == pow_rat(Rat(lam), 6) * u.I6);
            CHECK(v.I10 == pow_rat(Rat(lam), 10) * u.I10);
            CHECK(weighted_equal(u, v, LambdaDomain::Rationals));
            // x -> x / lam cleared to integral form
            auto w = igusa_clebsch(f.dilate(Rat(lam)));
            CHECK(weighted_equal(u, w, LambdaDomain::Rationals));
        }
    }
}

TEST_CASE("weighted_equal is an equivalence relation") {
    std::mt19937 rng(123);
    std::vector<IgusaClebsch<Rat>> pts;
    for (int n = 0; n < 8; ++n) pts.push_back(igusa_clebsch(rand_sextic(rng)));
    for (const auto& u : pts) CHECK(weighted_equal(u, u, LambdaDomain::Rationals));
    for (const auto& u : pts)
        for (const auto& v : pts) {
            bool uv = weighted_equal(u, v, LambdaDomain::SquareClasses);
            CHECK(uv == weighted_equal(v, u, LambdaDomain::SquareClasses));
            if (!uv) continue;
            for (const auto& w : pts)
                if (weighted_equal(v, w, LambdaDomain::SquareClasses))
                    CHECK(weighted_equal(u, w, LambdaDomain::SquareClasses));
        }
}

TEST_CASE("weighted_equal sign cases") {
    auto u = igusa_clebsch(Poly<Rat>({Rat(1), Rat(2), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)}));
    IgusaClebsch<Rat> v{4 * u.I2, 16 * u.I4, 64 * u.I6, 1024 * u.I10};
    CHECK(weighted_equal(u, v, LambdaDomain::Rationals));
    IgusaClebsch<Rat> neg{-u.I2, u.I4, -u.I6, -u.I10};
    CHECK_FALSE(weighted_equal(u, neg, LambdaDomain::Rationals));
    CHECK(weighted_equal(u, neg, LambdaDomain::SquareClasses));
    IgusaClebsch<Rat> bad{u.I2, u.I4, u.I6, 2 * u.I10};
    CHECK_FALSE(weighted_equal(u, bad, LambdaDomain::SquareClasses));
    IgusaClebsch<Rat> zero{u.I2, u.I4, u.I6, Rat(0)};
    CHECK_THROWS(weighted_equal(u, zero, LambdaDomain::Rationals));
}

TEST_CASE("kumar family point values") {
    KumarPoint p10{NFElem(1), NFElem(0)};
    auto u = kumar_igcl(p10);
    CHECK(u.I2 == NFElem(-16));
    CHECK(u.I10 == NFElem(Rat(16384)));
    KumarPoint p11{NFElem(1), NFElem(1)};
    CHECK(kumar_igcl(p11).I2 == NFElem(24));
    auto jp = kumar_jpair(p10);
    CHECK(jp.prod == NFElem(Rat(Int(-287) * 287 * 287)));
    auto quad = jp.quadratic();
    CHECK(quad.degree() == 2);
    CHECK(quad.coeff(0) == jp.prod);
    CHECK(kumar_surface_residual(p11) == NFElem(11408));
    CHECK(kumar_surface_residual(NFElem(0), NFElem(1)) == NFElem(0));
    CHECK_THROWS(KumarPoint(NFElem(0), NFElem(1)));
    // random admissible rational point: I10 = 2^14 r^3
    KumarPoint p12{NFElem(1), NFElem(2)};
    CHECK(kumar_igcl(p12).I10 == NFElem(Rat(16384)));
    KumarPoint p22{NFElem(2), NFElem(5)};
    CHECK(kumar_igcl(p22).I10 == NFElem(Rat(16384 * 8)));
}

TEST_CASE("weighted_equal over a number field") {
    auto K = NumberField::create(Poly<Rat>({Rat(-2), Rat(0), Rat(1)}), "t");
    NFElem t = K->gen();
    auto u = lift(igusa_clebsch(Poly<Rat>({Rat(1), Rat(2), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)})));
    // scale by m = t^2 = 2: lambda = t lives in the field
    IgusaClebsch<NFElem> v{t * t * u.I2, npow2(t, 4) * u.I4, npow2(t, 6) * u.I6,
                           npow2(t, 10) * u.I10};
    CHECK(weighted_equal(u, v, LambdaDomain::Rationals));
    // scale by m = t (not a square in Q(sqrt 2))
    IgusaClebsch<NFElem> w{t * u.I2, t * t * u.I4, t * t * t * u.I6, npow2(t, 5) * u.I10};
    CHECK_FALSE(weighted_equal(u, w, LambdaDomain::Rationals));
    CHECK(weighted_equal(u, w, LambdaDomain::SquareClasses));
}
