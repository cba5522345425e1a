#include "doctest.h"

#include <cstdio>

#include "g2split/cmdata.hpp"
#include "g2split/quadfields.hpp"

using namespace g2split;

TEST_CASE("class polynomials of class number 1") {
    auto h4 = hilbert_class_poly(Int(-4));
    CHECK(h4.poly == Poly<Rat>({Rat(-1728), Rat(1)}));
    auto h8 = hilbert_class_poly(Int(-8));
    CHECK(h8.poly == Poly<Rat>({Rat(-8000), Rat(1)}));
    auto h11 = hilbert_class_poly(Int(-11));
    CHECK(h11.poly == Poly<Rat>({Rat(32768), Rat(1)}));
    auto h3 = hilbert_class_poly(Int(-3));
    CHECK(h3.poly == Poly<Rat>({Rat(0), Rat(1)}));
}

TEST_CASE("non-fundamental orders") {
    CHECK(hilbert_class_poly(Int(-12)).poly == Poly<Rat>({Rat(-54000), Rat(1)}));
    CHECK(hilbert_class_poly(Int(-27)).poly == Poly<Rat>({Rat(Int("12288000")), Rat(1)}));
    CHECK(hilbert_class_poly(Int(-16)).poly == Poly<Rat>({Rat(-287496), Rat(1)}));
    CHECK(hilbert_class_poly(Int(-28)).poly == Poly<Rat>({Rat(Int("-16581375")), Rat(1)}));
}

TEST_CASE("H_{-15} against the classical polynomial") {
    auto h = hilbert_class_poly(Int(-15));
    CHECK(h.poly == Poly<Rat>({Rat(Int("-121287375")), Rat(Int("191025")), Rat(1)}));
}

TEST_CASE("degree matches the class number") {
    for (long n : {84, 120, 195, 231, 340, 480}) {
        Int D(-n);
        if (((D % 4) + 4) % 4 > 1) continue;
        auto h = hilbert_class_poly(D);
        CHECK(h.poly.degree() == static_cast<long>(reduced_forms(D).size()));
        CHECK(h.poly.is_monic());
        for (const auto& c : h.poly.coeffs()) CHECK(is_integer(c));
    }
}

TEST_CASE("catalogue cross-certified") {
    for (long d : {3, 4, 7, 8, 11, 19, 43, 67, 163}) {
        auto cat = cm_j_catalogue(Int(d));
        CHECK(!cat.empty());
        for (const auto& e : cat) {
            auto h = hilbert_class_poly(e.order_disc);
            CHECK(h.poly.degree() == 1);
            CHECK(h.poly(e.j) == 0);
            CHECK(is_cm_j(e.j, e.order_disc));
        }
    }
    CHECK_THROWS(cm_j_catalogue(Int(15)));
}

TEST_CASE("is_cm_j") {
    CHECK(is_cm_j(Rat(1728), Int(-4)));
    CHECK(is_cm_j(Rat(8000), Int(-8)));
    CHECK_FALSE(is_cm_j(Rat(1729), Int(-4)));
    CHECK_FALSE(is_cm_j(Rat(8000), Int(-4)));
}

TEST_CASE("cache round trip") {
    std::string path = "test_cmdata_cache.tmp";
    std::vector<ClassPolynomial> polys{hilbert_class_poly(Int(-4)), hilbert_class_poly(Int(-15))};
    save_class_poly_cache(path, polys);
    auto back = load_class_poly_cache(path);
    REQUIRE(back.size() == 2);
    CHECK(back[0].disc == Int(-4));
    CHECK(back[0].poly == polys[0].poly);
    CHECK(back[1].poly == polys[1].poly);
    std::remove(path.c_str());
}
