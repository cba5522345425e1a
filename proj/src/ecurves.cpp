#include "g2split/ecurves.hpp"

#include <sstream>
#include <stdexcept>

#include "g2split/cmdata.hpp"
#include "g2split/quadfields.hpp"

namespace g2split {

Rat EllipticCurveModel::disc() const {
    Rat B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

Rat j_invariant(const EllipticCurveModel& E) {
    Rat d = E.disc();
    if (d == 0) throw std::invalid_argument("j_invariant: singular model");
    Rat C4 = E.c4();
    return C4 * C4 * C4 / d;
}

namespace {

std::vector<Rat> parse_rat_list(const std::string& body) {
    std::vector<Rat> out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        Rat r(tok);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

bool is_cube(const Rat& q) {
    if (q == 0) return true;
    auto root_exact = [](const Int& n) {
        Int m = abs(n), r;
        return mpz_root(r.get_mpz_t(), m.get_mpz_t(), 3) != 0;
    };
    return root_exact(numerator(q)) && root_exact(denominator(q));
}

}  // namespace

EllipticCurveModel parse_curve(const std::string& text) {
    std::string s = text;
    bool short_form = false;
    if (s.rfind("short:", 0) == 0) {
        short_form = true;
        s = s.substr(6);
    }
    auto l = s.find('['), r = s.find(']');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw std::invalid_argument("parse_curve: expected [..] coefficient list");
    auto coeffs = parse_rat_list(s.substr(l + 1, r - l - 1));
    if (short_form) {
        if (coeffs.size() != 2) throw std::invalid_argument("parse_curve: short form needs [a,b]");
        return EllipticCurveModel::short_form(coeffs[0], coeffs[1]);
    }
    if (coeffs.size() != 5) throw std::invalid_argument("parse_curve: long form needs [a1,a2,a3,a4,a6]");
    return {coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]};
}

std::string curve_to_string(const EllipticCurveModel& E) {
    std::ostringstream os;
    if (E.is_short())
        os << "short:[" << E.a4.get_str() << "," << E.a6.get_str() << "]";
    else
        os << "[" << E.a1.get_str() << "," << E.a2.get_str() << "," << E.a3.get_str() << ","
           << E.a4.get_str() << "," << E.a6.get_str() << "]";
    return os.str();
}

EllipticCurveModel quartic_to_weierstrass(const Rat& a, const Rat& b) {
    if (b == 0) throw std::invalid_argument("quartic_to_weierstrass: x^4+ax^2+bx not squarefree (b=0)");
    Poly<Rat> cubic({b, a, Rat(0), Rat(1)});
    if (discriminant(cubic) == 0)
        throw std::invalid_argument("quartic_to_weierstrass: quartic not squarefree");
    EllipticCurveModel E{Rat(0), a, Rat(0), b * b, Rat(0)};
    if (E.disc() == 0) throw std::invalid_argument("quartic_to_weierstrass: singular result");
    return E;
}

QxMReport verify_QxM(const Rat& a, const Rat& b, const Int& d) {
    QxMReport rep;
    rep.j_e = j_invariant(EllipticCurveModel::short_form(a, b));
    for (const auto& e : cm_j_catalogue(d)) {
        if (e.j == rep.j_e) {
            rep.cm_side_ok = true;
            rep.matched_order_disc = e.order_disc;
            break;
        }
    }
    rep.j_eprime = j_invariant(quartic_to_weierstrass(a, b));
    rep.quartic_side_ok = denominator(rep.j_eprime) > 1;
    return rep;
}

Poly<Rat> division_poly_3(const Rat& a, const Rat& b) {
    return Poly<Rat>({-a * a, 12 * b, 6 * a, Rat(0), Rat(3)});
}

TorsionFieldReport torsion_field(const EllipticCurveModel& E, int N) {
    if (E.disc() == 0) throw std::invalid_argument("torsion_field: singular model");
    if (N != 2 && N != 3) throw std::invalid_argument("torsion_field: N must be 2 or 3");
    EllipticCurveModel S = E.is_short() ? E : E.to_short();
    TorsionFieldReport rep;
    rep.level = N;
    if (N == 2) {
        // Q(E[2]) is the splitting field of the 2-division cubic; the
        // descriptor is twist-invariant
        Poly<Rat> cubic({S.a6, S.a4, Rat(0), Rat(1)});
        rep.x_field = splitting_field_descriptor(cubic);
        rep.full_field = rep.x_field;
        rep.full_degree_lower_bound = rep.x_field.degree;
        return rep;
    }
    Poly<Rat> psi = division_poly_3(S.a4, S.a6);
    rep.x_field = splitting_field_descriptor(psi);
    if (S.a4 == 0 && is_cube(Rat(4) * S.a6)) {
        // y^2 = x^3 + b with 4b a rational cube: Q(E[3]) = Q(sqrt(-3), sqrt(b))
        SplittingDescriptor full;
        Int sb = squarefree_part(S.a6);
        std::vector<Int> subs{Int(-3)};
        if (sb != 1) {
            subs.push_back(sb);
            Int third = squarefree_part(Int(-3 * sb));
            if (third != 1) subs.push_back(third);
        }
        full.quad_subfields = subs;
        full.degree = static_cast<long>(subs.size()) + 1;
        full.divisible_by_three = false;
        rep.full_field = full;
        rep.full_degree_lower_bound = full.degree;
        return rep;
    }
    // a Klein-four x-coordinate field forces [Q(E[3]):Q] >= 8: the image
    // in PGL2(F3) has order 4 and the kernel of the x-action contains -I
    if (rep.x_field.degree == 4)
        rep.full_degree_lower_bound = 8;
    else
        rep.full_degree_lower_bound = rep.x_field.degree;
    return rep;
}

ApResult count_points_ap(const EllipticCurveModel& E, const Int& p) {
    if (!is_prime(p) || p > 1000000) throw std::invalid_argument("count_points_ap: bad prime");
    long lp = mpz_get_si(p.get_mpz_t());
    auto red = [&](const Rat& q) -> long {
        if (denominator(q) % p == 0) throw std::invalid_argument("count_points_ap: bad reduction");
        Int num = numerator(q) % p, den = denominator(q) % p;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::invalid_argument("count_points_ap: bad reduction");
        Int v = (num * inv) % p;
        return mpz_get_si(Int(((v % p) + p) % p).get_mpz_t());
    };
    Rat D = E.disc();
    if (D == 0 || numerator(D) % p == 0 || denominator(D) % p == 0)
        throw std::invalid_argument("count_points_ap: bad reduction");

    if (p < 5) {
        long A1 = red(E.a1), A2 = red(E.a2), A3 = red(E.a3), A4 = red(E.a4), A6 = red(E.a6);
        long count = 1;  // infinity
        for (long x = 0; x < lp; ++x)
            for (long y = 0; y < lp; ++y) {
                long lhs = (y * y + A1 * x * y + A3 * y) % lp;
                long rhs = (((x * x % lp) * x + A2 * x * x + A4 * x + A6) % lp + lp) % lp;
                if ((lhs % lp + lp) % lp == rhs) ++count;
            }
        return {p, Int(lp + 1 - count), ApMethod::NaiveCount};
    }

    EllipticCurveModel S = E.is_short() ? E : E.to_short();
    long A = red(S.a4), B = red(S.a6);
    std::vector<signed char> chi(lp, -1);
    chi[0] = 0;
    for (long y = 1; y <= lp / 2; ++y) chi[(y * y) % lp] = 1;
    long sum = 0;
    for (long x = 0; x < lp; ++x) {
        long fx = ((x * x % lp) * x + A * x + B) % lp;
        sum += chi[(fx % lp + lp) % lp];
    }
    return {p, Int(-sum), ApMethod::NaiveCount};
}

std::vector<Int> cm_trace_ap(const Int& d, const Int& p) {
    if (d == 3 || d == 4) throw std::invalid_argument("cm_trace_ap: d must not be 3 or 4");
    if (p < 5) throw std::invalid_argument("cm_trace_ap: p must be >= 5");
    auto M = ImagQuadField::from_d(d);
    auto pi = cornacchia(M, p);
    if (!pi) throw std::invalid_argument("cm_trace_ap: p inert in the CM field");
    Int t = pi->trace();
    return {t, -t};
}

}  // namespace g2split
