#ifndef G2SPLIT_GENUS2_HPP
#define G2SPLIT_GENUS2_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "g2split/numfield.hpp"
#include "g2split/poly.hpp"
#include "g2split/rational.hpp"

namespace g2split {

template <typename T>
struct IgusaClebsch {
    T I2, I4, I6, I10;
};

// Invariants of the binary sextic c6 x^6 + ... + c0 in the classical
// normalization (I2 = -240 c0 c6 + ..., I10 = disc). The coefficient
// formulas were generated once from the root-difference definitions by
// symmetric reduction and are validated against a numeric oracle in the
// test suite. A vanishing c6 is the degree-5 case (root at infinity);
// the same polynomials apply, and I10 specializes to c5^2 disc_5.
template <typename T>
IgusaClebsch<T> igusa_clebsch_coeffs(const std::array<T, 7>& c) {
    const T &c0 = c[0], &c1 = c[1], &c2 = c[2], &c3 = c[3], &c4 = c[4], &c5 = c[5], &c6 = c[6];
    IgusaClebsch<T> I;
    I.I2 = T(-240) * c0 * c6 + T(40) * c1 * c5 + T(-16) * c2 * c4 + T(6) * c3 * c3;
    I.I4 = T(1620) * c0 * c0 * c6 * c6 + T(-540) * c0 * c1 * c5 * c6 +
           T(-504) * c0 * c2 * c4 * c6 + T(300) * c0 * c2 * c5 * c5 +
           T(324) * c0 * c3 * c3 * c6 + T(-180) * c0 * c3 * c4 * c5 + T(48) * c0 * c4 * c4 * c4 +
           T(300) * c1 * c1 * c4 * c6 + T(-80) * c1 * c1 * c5 * c5 + T(-180) * c1 * c2 * c3 * c6 +
           T(4) * c1 * c2 * c4 * c5 + T(36) * c1 * c3 * c3 * c5 + T(-12) * c1 * c3 * c4 * c4 +
           T(48) * c2 * c2 * c2 * c6 + T(-12) * c2 * c2 * c3 * c5 + T(4) * c2 * c2 * c4 * c4;
    I.I6 = T(-119880) * c0 * c0 * c0 * c6 * c6 * c6 + T(59940) * c0 * c0 * c1 * c5 * c6 * c6 +
           T(20664) * c0 * c0 * c2 * c4 * c6 * c6 + T(-18600) * c0 * c0 * c2 * c5 * c5 * c6 +
           T(-10044) * c0 * c0 * c3 * c3 * c6 * c6 + T(3060) * c0 * c0 * c3 * c4 * c5 * c6 +
           T(2250) * c0 * c0 * c3 * c5 * c5 * c5 + T(-96) * c0 * c0 * c4 * c4 * c4 * c6 +
           T(-900) * c0 * c0 * c4 * c4 * c5 * c5 + T(-18600) * c0 * c1 * c1 * c4 * c6 * c6 +
           T(-2240) * c0 * c1 * c1 * c5 * c5 * c6 + T(3060) * c0 * c1 * c2 * c3 * c6 * c6 +
           T(3472) * c0 * c1 * c2 * c4 * c5 * c6 + T(1600) * c0 * c1 * c2 * c5 * c5 * c5 +
           T(1818) * c0 * c1 * c3 * c3 * c5 * c6 + T(-876) * c0 * c1 * c3 * c4 * c4 * c6 +
           T(-1860) * c0 * c1 * c3 * c4 * c5 * c5 + T(616) * c0 * c1 * c4 * c4 * c4 * c5 +
           T(-96) * c0 * c2 * c2 * c2 * c6 * c6 + T(-876) * c0 * c2 * c2 * c3 * c5 * c6 +
           T(424) * c0 * c2 * c2 * c4 * c4 * c6 + T(-640) * c0 * c2 * c2 * c4 * c5 * c5 +
           T(-468) * c0 * c2 * c3 * c3 * c4 * c6 + T(330) * c0 * c2 * c3 * c3 * c5 * c5 +
           T(492) * c0 * c2 * c3 * c4 * c4 * c5 + T(-160) * c0 * c2 * c4 * c4 * c4 * c4 +
           T(162) * c0 * c3 * c3 * c3 * c3 * c6 + T(-198) * c0 * c3 * c3 * c3 * c4 * c5 +
           T(60) * c0 * c3 * c3 * c4 * c4 * c4 + T(2250) * c1 * c1 * c1 * c3 * c6 * c6 +
           T(1600) * c1 * c1 * c1 * c4 * c5 * c6 + T(-320) * c1 * c1 * c1 * c5 * c5 * c5 +
           T(-900) * c1 * c1 * c2 * c2 * c6 * c6 + T(-1860) * c1 * c1 * c2 * c3 * c5 * c6 +
           T(-640) * c1 * c1 * c2 * c4 * c4 * c6 + T(64) * c1 * c1 * c2 * c4 * c5 * c5 +
           T(330) * c1 * c1 * c3 * c3 * c4 * c6 + T(176) * c1 * c1 * c3 * c3 * c5 * c5 +
           T(26) * c1 * c1 * c3 * c4 * c4 * c5 + T(-36) * c1 * c1 * c4 * c4 * c4 * c4 +
           T(616) * c1 * c2 * c2 * c2 * c5 * c6 + T(492) * c1 * c2 * c2 * c3 * c4 * c6 +
           T(26) * c1 * c2 * c2 * c3 * c5 * c5 + T(28) * c1 * c2 * c2 * c4 * c4 * c5 +
           T(-198) * c1 * c2 * c3 * c3 * c3 * c6 + T(-238) * c1 * c2 * c3 * c3 * c4 * c5 +
           T(76) * c1 * c2 * c3 * c4 * c4 * c4 + T(72) * c1 * c3 * c3 * c3 * c3 * c5 +
           T(-24) * c1 * c3 * c3 * c3 * c4 * c4 + T(-160) * c2 * c2 * c2 * c2 * c4 * c6 +
           T(-36) * c2 * c2 * c2 * c2 * c5 * c5 + T(60) * c2 * c2 * c2 * c3 * c3 * c6 +
           T(76) * c2 * c2 * c2 * c3 * c4 * c5 + T(-24) * c2 * c2 * c2 * c4 * c4 * c4 +
           T(-24) * c2 * c2 * c3 * c3 * c3 * c5 + T(8) * c2 * c2 * c3 * c3 * c4 * c4;
    Poly<T> f(std::vector<T>(c.begin(), c.end()));
    if (f.degree() == 6) I.I10 = discriminant(f);
    else if (f.degree() == 5) I.I10 = f.leading() * f.leading() * discriminant(f);
    else throw std::invalid_argument("igusa_clebsch_coeffs: degree must be 5 or 6");
    return I;
}

// y^2 = f(x) with f squarefree of degree 5 or 6
struct GenusTwoModel {
    Poly<Rat> f;
    explicit GenusTwoModel(Poly<Rat> poly);
};

IgusaClebsch<Rat> igusa_clebsch(const GenusTwoModel& C);
IgusaClebsch<Rat> igusa_clebsch(const Poly<Rat>& f);

IgusaClebsch<NFElem> lift(const IgusaClebsch<Rat>& u);

enum class LambdaDomain { Rationals, SquareClasses };

namespace detail {
inline bool has_sqrt(const Rat& r) { return exact_sqrt(r).has_value(); }
inline bool has_sqrt(const NFElem& a) { return is_square_in_field(a); }
inline std::optional<Rat> fifth_root(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    Int n, d;
    bool neg = num < 0;
    Int an = neg ? Int(-num) : num;
    mpz_root(n.get_mpz_t(), an.get_mpz_t(), 5);
    mpz_root(d.get_mpz_t(), den.get_mpz_t(), 5);
    if (pow_int(n, 5) != an || pow_int(d, 5) != den) return std::nullopt;
    Rat out(neg ? Int(-n) : n, d);
    return out;
}
inline std::optional<Rat> fifth_root(const NFElem& a) {
    if (!a.is_rational()) return std::nullopt;
    return fifth_root(a.rat());
}
}  // namespace detail

// true iff v = (m I2, m^2 I4, m^3 I6, m^5 I10) for some m = lambda^2;
// with domain Rationals, m must additionally be a square in the field
template <typename T>
bool weighted_equal(const IgusaClebsch<T>& u, const IgusaClebsch<T>& v, LambdaDomain domain) {
    const T zero(0);
    if (u.I10 == zero || v.I10 == zero)
        throw std::invalid_argument("weighted_equal: I10 must be nonzero");
    T m(0);
    bool found = false;
    if (u.I2 != zero && v.I2 != zero) {
        m = v.I2 / u.I2;
        found = true;
    } else if ((u.I2 == zero) != (v.I2 == zero)) {
        return false;
    }
    if (!found) {
        if (u.I4 != zero && v.I4 != zero) {
            T q = u.I4 / v.I4;
            m = (v.I10 / u.I10) * q * q;
            found = true;
        } else if ((u.I4 == zero) != (v.I4 == zero)) {
            return false;
        }
    }
    if (!found) {
        if (u.I6 != zero && v.I6 != zero) {
            T r6 = v.I6 / u.I6;
            T m2 = (v.I10 / u.I10) / r6;
            m = r6 / m2;
            found = true;
        } else if ((u.I6 == zero) != (v.I6 == zero)) {
            return false;
        }
    }
    if (!found) {
        auto r = detail::fifth_root(v.I10 / u.I10);
        if (!r) throw std::runtime_error("weighted_equal: cannot extract fifth root");
        m = T(*r);
    }
    if (m == zero) return false;
    if (v.I2 != m * u.I2) return false;
    if (v.I4 != m * m * u.I4) return false;
    if (v.I6 != m * m * m * u.I6) return false;
    if (v.I10 != m * m * m * m * m * u.I10) return false;
    if (domain == LambdaDomain::Rationals) return detail::has_sqrt(m);
    return true;
}

// Kumar's degree-3 family: invariants and elliptic j-data of the point
// (r, s) on the moduli surface of genus-2 curves with a degree-3 map to
// an elliptic curve
struct KumarPoint {
    NFElem r, s;
    KumarPoint(NFElem r_, NFElem s_);  // requires r != 0
};

IgusaClebsch<NFElem> kumar_igcl(const KumarPoint& p);

struct JPair {
    NFElem sum, prod;
    // X^2 - sum X + prod
    Poly<NFElem> quadratic() const;
    // roots inside the parent field when the discriminant is a square there
    std::optional<std::pair<NFElem, NFElem>> split() const;
};

JPair kumar_jpair(const KumarPoint& p);

// right-hand side of the surface equation z^2 = ... at (r, s); the plain
// (r, s) overload skips the admissibility requirement on r
NFElem kumar_surface_residual(const KumarPoint& p);
NFElem kumar_surface_residual(const NFElem& r, const NFElem& s);

}  // namespace g2split

#endif
