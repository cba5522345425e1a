#include "doctest.h"

#include <algorithm>
#include <random>

#include "g2split/cmdata.hpp"
#include "g2split/ecurves.hpp"
#include "g2split/quadfields.hpp"

using namespace g2split;

TEST_CASE("j invariants") {
    CHECK(j_invariant(EllipticCurveModel::short_form(Rat(3), Rat(0))) == Rat(1728));
    CHECK(j_invariant(EllipticCurveModel::short_form(Rat(0), Rat(-1))) == Rat(0));
    CHECK(j_invariant(EllipticCurveModel::short_form(Rat(-30), Rat(-56))) == Rat(8000));
    CHECK(j_invariant(EllipticCurveModel::short_form(Rat(-4320), Rat(96768))) == Rat(8000));
    CHECK(j_invariant(EllipticCurveModel::short_form(Rat(-9504), Rat(365904))) == Rat(-32768));
    CHECK(j_invariant(EllipticCurveModel::short_form(Rat(-15), Rat(22))) == Rat(54000));
    CHECK_THROWS(j_invariant(EllipticCurveModel::short_form(Rat(0), Rat(0))));
}

TEST_CASE("long to short preserves j") {
    // y^2 + xy + y = x^3 - x^2 - 55x - 178, CM by Q(sqrt(-7))
    EllipticCurveModel E{Rat(1), Rat(-1), Rat(1), Rat(-55), Rat(-178)};
    CHECK(j_invariant(E) == j_invariant(E.to_short()));
    CHECK(j_invariant(E) == Rat(-3375));
    CHECK(is_cm_j(j_invariant(E), Int(-7)));
}

TEST_CASE("curve parsing") {
    auto E = parse_curve("[1,-1,1,-55,-178]");
    CHECK(E.a4 == Rat(-55));
    auto S = parse_curve("short:[-15,22]");
    CHECK(S.is_short());
    CHECK(S.a6 == Rat(22));
    auto F = parse_curve("short:[1/2,-3/4]");
    CHECK(F.a4 == Rat(1, 2));
    CHECK(parse_curve(curve_to_string(E)).a6 == E.a6);
    CHECK_THROWS(parse_curve("short:[1]"));
}

TEST_CASE("quartic to weierstrass") {
    auto E = quartic_to_weierstrass(Rat(-15), Rat(22));
    CHECK(E.a2 == Rat(-15));
    CHECK(E.a4 == Rat(484));
    // non-integral j on the quartic side
    CHECK(denominator(j_invariant(E)) > 1);
    CHECK_THROWS(quartic_to_weierstrass(Rat(-15), Rat(0)));
}

TEST_CASE("verify_QxM on table rows") {
    CHECK(verify_QxM(Rat(-15), Rat(22), Int(3)).ok());
    CHECK(verify_QxM(Rat(-11), Rat(14), Int(4)).ok());
    CHECK(verify_QxM(Rat(-30), Rat(-56), Int(8)).ok());
    CHECK_FALSE(verify_QxM(Rat(-15), Rat(22), Int(4)).ok());
}

TEST_CASE("division polynomial") {
    CHECK(division_poly_3(Rat(0), Rat(1)) == Poly<Rat>({Rat(0), Rat(12), Rat(0), Rat(0), Rat(3)}));
    CHECK(division_poly_3(Rat(1), Rat(0)) == Poly<Rat>({Rat(-1), Rat(0), Rat(6), Rat(0), Rat(3)}));
    // the d=8 representative factors into the two printed quadratics
    auto psi8 = division_poly_3(Rat(-4320), Rat(96768));
    Poly<Rat> q1({Rat(864), Rat(-48), Rat(1)}), q2({Rat(-7200), Rat(48), Rat(1)});
    CHECK(psi8 == Rat(3) * (q1 * q2));
}

TEST_CASE("twist relation exact") {
    Rat a(-9504), b(365904), d(7);
    auto psi = division_poly_3(a, b);
    auto psit = division_poly_3(a / (d * d), b / (d * d * d));
    // psi_{E',3}(x) = d^-4 psi_{E,3}(dx)
    CHECK(psit == (Rat(1) / pow_rat(d, 4)) * psi.dilate(d));
}

TEST_CASE("torsion fields at N=2") {
    // d=8 class: Q(E[2]) = Q(sqrt 2)
    auto rep = torsion_field(EllipticCurveModel::short_form(Rat(-4320), Rat(96768)), 2);
    REQUIRE(rep.full_field.has_value());
    CHECK(rep.full_field->degree == 2);
    REQUIRE(rep.full_field->quad_subfields.has_value());
    CHECK(*rep.full_field->quad_subfields == std::vector<Int>{Int(2)});
    // d=7 class representative y^2 = x^3 - 35x - 98: Q(E[2]) quadratic in {7,-7}
    auto rep7 = torsion_field(EllipticCurveModel::short_form(Rat(-35), Rat(-98)), 2);
    CHECK(rep7.x_field.degree == 2);
    // x^3 - 30x + 253/4 class (j = 2^15*3*5^3): degree divisible by 3
    auto rep3 = torsion_field(EllipticCurveModel::short_form(Rat(-38880), Rat(2950992)), 2);
    CHECK(rep3.x_field.divisible_by_three);
}

TEST_CASE("torsion fields at N=3") {
    // d=8: x-field Q(sqrt(-2), sqrt(-3))
    auto r8 = torsion_field(EllipticCurveModel::short_form(Rat(-4320), Rat(96768)), 3);
    REQUIRE(r8.x_field.is_polyquadratic());
    auto g = r8.x_field.generators();
    std::sort(g.begin(), g.end());
    CHECK(g == std::vector<Int>{Int(-3), Int(-2)});
    CHECK(r8.full_degree_lower_bound == 8);
    // d=11: x-field Q(sqrt(-11), sqrt(-3))
    auto r11 = torsion_field(EllipticCurveModel::short_form(Rat(-9504), Rat(365904)), 3);
    REQUIRE(r11.x_field.is_polyquadratic());
    auto g11 = r11.x_field.generators();
    std::sort(g11.begin(), g11.end());
    CHECK(g11 == std::vector<Int>{Int(-11), Int(-3)});
    CHECK(r11.full_degree_lower_bound == 8);
    // j=0 with 4b a cube: full field Q(sqrt(-3), sqrt(b))
    auto r0 = torsion_field(EllipticCurveModel::short_form(Rat(0), Rat(2)), 3);
    REQUIRE(r0.full_field.has_value());
    REQUIRE(r0.full_field->quad_subfields.has_value());
    auto subs = *r0.full_field->quad_subfields;
    CHECK(std::find(subs.begin(), subs.end(), Int(-3)) != subs.end());
    CHECK(std::find(subs.begin(), subs.end(), Int(2)) != subs.end());
    // the d=3 conductor-2 class: degree divisible by 3
    auto r54 = torsion_field(EllipticCurveModel::short_form(Rat(-15), Rat(22)), 3);
    CHECK(r54.x_field.divisible_by_three);
}

TEST_CASE("point counting") {
    // y^2 = x^3 - 2 at p = 7: 7 splits in Q(sqrt(-3)), a_p = 1 mod 3
    auto E = EllipticCurveModel::short_form(Rat(0), Rat(-2));
    auto r = count_points_ap(E, Int(7));
    CHECK(((r.ap % 3) + 3) % 3 == 1);
    CHECK(r.ap * r.ap <= 4 * Int(7));
    // supersingular: y^2 = x^3 - 30x - 56 has CM by Q(sqrt(-8)); p inert -> ap = 0
    auto E8 = EllipticCurveModel::short_form(Rat(-30), Rat(-56));
    for (long p : {7, 13, 23, 29, 31}) {
        if (kronecker(Int(-8), Int(p)) != -1) continue;
        CHECK(count_points_ap(E8, Int(p)).ap == 0);
    }
    CHECK_THROWS(count_points_ap(EllipticCurveModel::short_form(Rat(3), Rat(0)), Int(3)));
}

TEST_CASE("naive count agrees with the norm equation") {
    auto E8 = EllipticCurveModel::short_form(Rat(-30), Rat(-56));
    Int p = 3;
    int tested = 0;
    while (p < 500) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p < 5 || kronecker(Int(-8), p) != 1) continue;
        if (numerator(E8.disc()) % p == 0) continue;
        auto naive = count_points_ap(E8, p);
        auto cands = cm_trace_ap(Int(8), p);
        CHECK(std::find(cands.begin(), cands.end(), naive.ap) != cands.end());
        ++tested;
    }
    CHECK(tested > 10);
}

TEST_CASE("cm_trace_ap examples") {
    auto t7 = cm_trace_ap(Int(7), Int(29));
    CHECK(t7 == std::vector<Int>{Int(2), Int(-2)});
    auto t8 = cm_trace_ap(Int(8), Int(17));
    CHECK(t8 == std::vector<Int>{Int(6), Int(-6)});
    auto t11 = cm_trace_ap(Int(11), Int(5));
    CHECK(t11 == std::vector<Int>{Int(3), Int(-3)});
    CHECK_THROWS(cm_trace_ap(Int(3), Int(29)));
}

TEST_CASE("twist invariance of the 3-torsion x-field") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> coeff(-12, 12), tw(1, 9);
    int done = 0;
    while (done < 20) {
        Rat a(coeff(rng)), b(coeff(rng));
        auto E = EllipticCurveModel::short_form(a, b);
        if (a == 0 && b == 0) continue;
        if (E.disc() == 0) continue;
        Rat t(tw(rng));
        auto Et = EllipticCurveModel::short_form(a * t * t, b * t * t * t);
        auto d1 = torsion_field(E, 3).x_field;
        auto d2 = torsion_field(Et, 3).x_field;
        CHECK(d1.same_field(d2));
        ++done;
    }
}
