#ifndef G2SPLIT_ECURVES_HPP
#define G2SPLIT_ECURVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "g2split/factor.hpp"
#include "g2split/poly.hpp"
#include "g2split/rational.hpp"

namespace g2split {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct EllipticCurveModel {
    Rat a1, a2, a3, a4, a6;

    static EllipticCurveModel short_form(const Rat& a, const Rat& b) {
        return {Rat(0), Rat(0), Rat(0), a, b};
    }
    bool is_short() const { return a1 == 0 && a2 == 0 && a3 == 0; }

    Rat b2() const { return a1 * a1 + 4 * a2; }
    Rat b4() const { return 2 * a4 + a1 * a3; }
    Rat b6() const { return a3 * a3 + 4 * a6; }
    Rat b8() const { return (b2() * b6() - b4() * b4()) / 4; }
    Rat c4() const { return b2() * b2() - 24 * b4(); }
    Rat c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
    Rat disc() const;

    // isomorphic model y^2 = x^3 - 27 c4 x - 54 c6 (valid away from 2, 3)
    EllipticCurveModel to_short() const {
        return short_form(Rat(-27) * c4(), Rat(-54) * c6());
    }
};

Rat j_invariant(const EllipticCurveModel& E);

// parse `[a1,a2,a3,a4,a6]` or `short:[a,b]`, rationals as n/d
EllipticCurveModel parse_curve(const std::string& text);
std::string curve_to_string(const EllipticCurveModel& E);

// E': y^2 = x(x^3 + ax + b) rewritten through the point at x = 0:
// u = 1/x, v = y/x^2 gives v^2 = bu^3 + au^2 + 1; scaling by b^2 yields
// Y^2 = X^3 + a X^2 + b^2 X.
EllipticCurveModel quartic_to_weierstrass(const Rat& a, const Rat& b);

struct QxMReport {
    bool cm_side_ok = false;       // j(E) on the d-catalogue
    Int matched_order_disc = 0;
    bool quartic_side_ok = false;  // j(E') non-integral, hence no CM
    Rat j_e, j_eprime;
    bool ok() const { return cm_side_ok && quartic_side_ok; }
};

// Prop-style check for y^2 = x(x^3 + ax + b): the companion cubic curve
// has CM by an order of Q(sqrt(-d)) and the quartic curve has
// non-integral j-invariant.
QxMReport verify_QxM(const Rat& a, const Rat& b, const Int& d);

// psi_{E,3}(x) = 3x^4 + 6ax^2 + 12bx - a^2 for y^2 = x^3 + ax + b.
Poly<Rat> division_poly_3(const Rat& a, const Rat& b);

struct TorsionFieldReport {
    int level = 2;
    SplittingDescriptor x_field;
    std::optional<SplittingDescriptor> full_field;  // known exactly
    long full_degree_lower_bound = 1;
};

TorsionFieldReport torsion_field(const EllipticCurveModel& E, int N);

enum class ApMethod { NaiveCount, CmCornacchia };

struct ApResult {
    Int p;
    Int ap;
    ApMethod method = ApMethod::NaiveCount;
};

// a_p = p + 1 - #E(F_p), naive quadratic-character count; p of good
// reduction, p <= 10^6.
ApResult count_points_ap(const EllipticCurveModel& E, const Int& p);

// {+t, -t} from the norm equation; requires d not in {3,4}, p >= 5 split.
std::vector<Int> cm_trace_ap(const Int& d, const Int& p);

}  // namespace g2split

#endif
