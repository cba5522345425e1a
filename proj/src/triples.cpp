#include "g2split/triples.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "g2split/cmdata.hpp"
#include "g2split/constants.hpp"
#include "g2split/ecurves.hpp"
#include "g2split/quadfields.hpp"

namespace g2split {

bool ObstructionVerdict::pair_excluded() const {
    if (!hypothesis_i) return false;
    for (const auto& [q, rep] : hypothesis_ii)
        if (rep.verdict != QVerdict::True) return false;
    return true;
}

namespace {

void check_triple(const PrimeTriple& t) {
    if (t.d == 3 || t.d == 4)
        throw std::invalid_argument("PrimeTriple: d must not be 3 or 4");
    if (t.d == t.dprime) throw std::invalid_argument("PrimeTriple: d = d'");
    if (t.p1 == t.p2) throw std::invalid_argument("PrimeTriple: equal primes");
    if (t.p1 < 5 || t.p2 < 5) throw std::invalid_argument("PrimeTriple: primes must be >= 5");
}

// possible shapes of Q(E[2]) across the Q-isomorphism classes of a CM
// class: twisting scales the 2-division cubic's roots, so for j != 0,
// 1728 the splitting field is a single fixed field per j
struct Shape {
    enum Kind { Rational, Quadratic, DegDivThree, AnyQuadratic } kind;
    Int m;  // squarefree field label when Quadratic

    bool compatible(const Shape& o) const {
        if (kind == AnyQuadratic)
            return o.kind == AnyQuadratic || o.kind == Quadratic || o.kind == Rational;
        if (o.kind == AnyQuadratic) return o.compatible(*this);
        if (kind != o.kind) return false;
        if (kind == Quadratic) return m == o.m;
        return true;  // Rational/Rational or DegDivThree/DegDivThree: cannot separate
    }
    std::string str() const {
        switch (kind) {
            case Rational: return "Q";
            case Quadratic: return "Q(sqrt(" + m.get_str() + "))";
            case DegDivThree: return "degree divisible by 3";
            case AnyQuadratic: return "any quadratic";
        }
        return "?";
    }
};

std::vector<Shape> two_torsion_shapes(const Int& d) {
    std::vector<Shape> shapes;
    for (const auto& e : cm_j_catalogue(d)) {
        if (e.j == 0) {
            // y^2 = x^3 + b: splitting of x^3 + b
            shapes.push_back({Shape::Quadratic, Int(-3)});
            shapes.push_back({Shape::DegDivThree, Int(0)});
            continue;
        }
        if (e.j == 1728) {
            // y^2 = x^3 + ax: x(x^2 + a) splits over Q(sqrt(-a)), any class
            shapes.push_back({Shape::AnyQuadratic, Int(0)});
            continue;
        }
        // representative with this j; the 2-division field is twist-invariant
        Rat a = 3 * e.j * (1728 - e.j), b = 2 * e.j * (1728 - e.j) * (1728 - e.j);
        auto rep = torsion_field(EllipticCurveModel::short_form(a, b), 2);
        const auto& desc = rep.x_field;
        if (desc.divisible_by_three) shapes.push_back({Shape::DegDivThree, Int(0)});
        else if (desc.degree == 1) shapes.push_back({Shape::Rational, Int(0)});
        else {
            // degree-2 splitting field of a cubic: a single quadratic
            shapes.push_back({Shape::Quadratic, desc.quad_subfields->at(0)});
        }
    }
    return shapes;
}

QReport decide_q2(const Int& d, const Int& dprime) {
    auto A = two_torsion_shapes(d), B = two_torsion_shapes(dprime);
    for (const auto& x : A)
        for (const auto& y : B)
            if (x.compatible(y))
                return {QVerdict::Inconclusive,
                        "2-torsion fields may coincide: " + x.str() + " vs " + y.str()};
    std::string reason = "2-torsion field sets disjoint: {";
    for (std::size_t i = 0; i < A.size(); ++i) reason += (i ? ", " : "") + A[i].str();
    reason += "} vs {";
    for (std::size_t i = 0; i < B.size(); ++i) reason += (i ? ", " : "") + B[i].str();
    reason += "}";
    return {QVerdict::True, reason};
}

// the d'=3 residual classes when d=8: the two curves whose 3-torsion
// field is Q(sqrt(-3), sqrt(-2)); a_p = 1 mod 3 at primes split in
// Q(sqrt(-3)) and inert in Q(sqrt(-2)), against a_p(E) = 0 there
QReport congruence_scan_83(const Int& bound) {
    for (const auto& b : {Rat(-2), Rat(54)}) {
        auto E = EllipticCurveModel::short_form(Rat(0), b);
        Int p = 3;
        while (true) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            if (p > bound) break;
            if (numerator(E.disc()) % p == 0) continue;
            if (kronecker(Int(-3), p) != 1) continue;
            if (kronecker(Int(-8), p) != -1) continue;
            auto r = count_points_ap(E, p);
            if (((r.ap % 3) + 3) % 3 != 1)
                return {QVerdict::False, "congruence a_p = 1 mod 3 failed at p = " + p.get_str()};
        }
    }
    return {QVerdict::True,
            "residual classes y^2=x^3-2, y^2=x^3+54 give a_p = 1 mod 3 at split/inert primes, "
            "contradicting a_p(E) = 0 at primes inert in Q(sqrt(-2))"};
}

QReport decide_q3(const Int& d, const Int& dprime) {
    if (dprime != 3 || (d != 8 && d != 11))
        return {QVerdict::Inconclusive, "no 3-torsion criterion for this pair"};
    if (d == 11) {
        // Q(x(E[3])) = Q(sqrt(-11), sqrt(-3)) forces [Q(E[3]):Q] >= 8,
        // while the d'=3 classes have degree divisible by 3 or at most 4
        auto rep = torsion_field(EllipticCurveModel::short_form(Rat(-9504), Rat(365904)), 3);
        if (!rep.x_field.is_polyquadratic() || rep.x_field.degree != 4 ||
            rep.full_degree_lower_bound < 8)
            return {QVerdict::False, "unexpected 3-torsion x-field for the d=11 class"};
        return {QVerdict::True,
                "Q(E[3]) has degree >= 8 over Q (x-field Q(sqrt(-11),sqrt(-3))); "
                "d'=3 classes have 3-torsion field of degree <= 4 or divisible by 3"};
    }
    return congruence_scan_83(Int(1000));
}

}  // namespace

bool verify_hypothesis_i(const PrimeTriple& t) {
    check_triple(t);
    auto M = ImagQuadField::from_d(t.d);
    auto Mp = ImagQuadField::from_d(t.dprime);
    for (const auto& p : {t.p1, t.p2}) {
        if (!is_prime(p)) return false;
        if (kronecker(M.D, p) != 1) return false;
        if (kronecker(Mp.D, p) != -1) return false;
        auto pi = cornacchia(M, p);
        if (!pi || pi->trace() != t.a) return false;
    }
    return true;
}

std::map<long, QReport> verify_hypothesis_ii(const PrimeTriple& t) {
    check_triple(t);
    std::map<long, QReport> out;
    if (t.a == 1) return out;  // vacuous
    for (const auto& term : trial_factor(t.a)) {
        long q = mpz_get_si(term.prime.get_mpz_t());
        if (q == 2) out[2] = decide_q2(t.d, t.dprime);
        else if (q == 3) out[3] = decide_q3(t.d, t.dprime);
        else out[q] = {QVerdict::Inconclusive, "prime divisor outside {2,3}"};
    }
    return out;
}

ObstructionVerdict verify_triple(const PrimeTriple& t) {
    ObstructionVerdict v;
    v.triple = t;
    v.hypothesis_i = verify_hypothesis_i(t);
    v.hypothesis_ii = verify_hypothesis_ii(t);
    return v;
}

std::vector<PrimeTriple> find_triples(const Int& d, const Int& dprime, const Int& prime_bound) {
    if (d == 3 || d == 4) throw std::invalid_argument("find_triples: d must not be 3 or 4");
    auto M = ImagQuadField::from_d(d);
    auto Mp = ImagQuadField::from_d(dprime);
    auto primes = split_primes_with_trace(M, Int(0), Int(1), Mp, prime_bound);
    std::map<Int, std::vector<Int>> by_trace;
    for (const auto& [p, a] : primes) by_trace[a].push_back(p);
    std::vector<PrimeTriple> out;
    for (const auto& [a, ps] : by_trace) {
        if (a == 0) continue;  // trace 0 gives no usable congruence
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                out.push_back({d, dprime, ps[i], ps[j], a});
    }
    std::sort(out.begin(), out.end(), [](const PrimeTriple& x, const PrimeTriple& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.p1 != y.p1) return x.p1 < y.p1;
        return x.p2 < y.p2;
    });
    return out;
}

std::vector<PairClassification> classify_all_pairs(const Int& prime_bound) {
    std::vector<PairClassification> out;
    const auto& D1 = set_D1();
    for (std::size_t i = 0; i < D1.size(); ++i) {
        for (std::size_t j = 0; j < D1.size(); ++j) {
            if (i == j) continue;
            Int d = D1[i], dp = D1[j];
            if (d < dp) continue;  // table orientation: d > d'
            PairClassification pc;
            pc.d = d;
            pc.dprime = dp;
            if (d == 3 || d == 4) {
                pc.status = "inconclusive";
                out.push_back(std::move(pc));
                continue;
            }
            // decide each q at most once per pair, then scan triples cheapest-first
            std::optional<QReport> q2, q3;
            auto q_ok = [&](long q) {
                if (q == 2) {
                    if (!q2) q2 = decide_q2(d, dp);
                    return q2->verdict == QVerdict::True;
                }
                if (q == 3) {
                    if (!q3) q3 = decide_q3(d, dp);
                    return q3->verdict == QVerdict::True;
                }
                return false;
            };
            auto a_decidable = [&](const Int& a) {
                if (a == 1) return true;
                for (const auto& term : trial_factor(a))
                    if (!q_ok(mpz_get_si(term.prime.get_mpz_t()))) return false;
                return true;
            };
            for (const auto& t : find_triples(d, dp, prime_bound)) {
                if (!a_decidable(t.a)) continue;
                auto v = verify_triple(t);
                if (v.pair_excluded()) {
                    pc.excluded = true;
                    pc.status = "pair_excluded";
                    pc.certificates.push_back(std::move(v));
                    break;
                }
            }
            if (!pc.excluded) pc.status = "inconclusive";
            out.push_back(std::move(pc));
        }
    }
    return out;
}

const std::vector<PrimeTriple>& table2_triples() {
    auto T = [](long d, long dp, long p1, long p2, long a) {
        return PrimeTriple{Int(d), Int(dp), Int(p1), Int(p2), Int(a)};
    };
    static const std::vector<PrimeTriple> rows = {
        T(7, 3, 29, 113, 2),     T(8, 3, 17, 41, 6),       T(8, 7, 73, 1153, 2),
        T(11, 3, 5, 71, 3),      T(11, 4, 223, 619, 1),    T(11, 7, 223, 619, 1),
        T(11, 8, 223, 1213, 1),  T(19, 3, 5, 233, 1),      T(19, 4, 43, 3463, 1),
        T(19, 7, 5, 1069, 1),    T(19, 8, 5, 1069, 1),     T(19, 11, 43, 233, 1),
        T(43, 3, 11, 269, 1),    T(43, 4, 11, 6719, 1),    T(43, 7, 97, 269, 1),
        T(43, 8, 269, 1301, 1),  T(43, 11, 9041, 10331, 1), T(43, 19, 97, 269, 1),
        T(67, 3, 17, 419, 1),    T(67, 4, 151, 419, 1),    T(67, 7, 17, 419, 1),
        T(67, 8, 151, 821, 1),   T(67, 11, 17, 151, 1),    T(67, 19, 151, 2027, 1),
        T(67, 43, 151, 419, 1),  T(163, 3, 41, 1019, 1),   T(163, 4, 367, 1019, 1),
        T(163, 7, 41, 367, 1),   T(163, 8, 367, 1997, 1),  T(163, 11, 41, 1019, 1),
        T(163, 19, 41, 1019, 1), T(163, 43, 1019, 1997, 1), T(163, 67, 41, 367, 1),
    };
    return rows;
}

}  // namespace g2split
