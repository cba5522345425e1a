#include "g2split/gluing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "g2split/ecurves.hpp"
#include "g2split/factor.hpp"
#include "g2split/genus2.hpp"

namespace g2split {

namespace {

struct CubicRoots {
    std::vector<Rat> rational;
    // nonempty only when the cubic has an irreducible quadratic factor:
    // roots (-p +- w sqrt(m)) / 2
    bool has_pair = false;
    Rat p, w;
    Int m = 1;
};

CubicRoots cubic_roots(const Poly<Rat>& f) {
    if (f.degree() != 3) throw std::invalid_argument("glue2: input must be a cubic");
    if (f.leading() != 1) throw std::invalid_argument("glue2: cubic must be monic");
    if (discriminant(f) == 0) throw std::invalid_argument("glue2: cubic must be squarefree");
    CubicRoots out;
    for (const auto& fac : factor_small(f).factors) {
        if (fac.factor.degree() == 1) {
            out.rational.push_back(-fac.factor.coeff(0));
        } else if (fac.factor.degree() == 2) {
            out.has_pair = true;
            out.p = fac.factor.coeff(1);
            Rat disc = out.p * out.p - 4 * fac.factor.coeff(0);
            out.m = squarefree_part(disc);
            auto w = exact_sqrt(disc / Rat(out.m));
            if (!w) throw std::logic_error("cubic_roots: non-square cofactor");
            out.w = *w;
        } else {
            throw std::invalid_argument(
                "glue2: cubic with trivial Galois pairing structure only (splitting field at "
                "most quadratic)");
        }
    }
    std::sort(out.rational.begin(), out.rational.end());
    return out;
}

// roots as field elements, canonical order: rational ascending, then the
// conjugate pair ordered by the first embedding
std::vector<NFElem> embed_roots(const CubicRoots& r, const NumberFieldPtr& K, bool ascending) {
    std::vector<NFElem> out;
    for (const auto& q : r.rational) out.push_back(K ? K->from_rat(q) : NFElem(q));
    if (r.has_pair) {
        NFElem plus(K, {-r.p / 2, r.w / 2});
        NFElem minus(K, {-r.p / 2, -r.w / 2});
        auto a = plus.embed(0, 128), b = minus.embed(0, 128);
        bool plus_first = a.re < b.re || (a.re == b.re && a.im < b.im);
        if (!ascending) plus_first = !plus_first;
        out.push_back(plus_first ? plus : minus);
        out.push_back(plus_first ? minus : plus);
    }
    return out;
}

NFElem conj_in(const RootPairing& rp, const NFElem& a) {
    if (!a.parent()) return a;
    return NFElem(rp.field, {a.coeff(0), -a.coeff(1)});
}

Rat j_of_cubic(const Poly<Rat>& f) {
    EllipticCurveModel E{Rat(0), f.coeff(2), Rat(0), f.coeff(1), f.coeff(0)};
    return j_invariant(E);
}

}  // namespace

RootPairing make_pairing(const Poly<Rat>& f, const Poly<Rat>& g) {
    auto rf = cubic_roots(f), rg = cubic_roots(g);
    RootPairing rp;
    if (rf.has_pair && rg.has_pair && rf.m != rg.m)
        throw std::invalid_argument("glue2: cubics have no common quadratic splitting field");
    if (rf.has_pair || rg.has_pair) {
        Int m = rf.has_pair ? rf.m : rg.m;
        rp.field = NumberField::create(Poly<Rat>({Rat(-m), Rat(0), Rat(1)}), "w");
    }
    // conjugate pairs: alpha ascending under the fixed embedding, beta
    // descending; this crossed orientation is the labeling whose output
    // matches the published intermediate sextic
    rp.alpha = embed_roots(rf, rp.field, true);
    rp.beta = embed_roots(rg, rp.field, false);
    return rp;
}

bool check_galois_pairing(const RootPairing& rp) {
    if (rp.alpha.size() != 3 || rp.beta.size() != 3) return false;
    for (int i = 0; i < 3; ++i) {
        if (rp.alpha[i].is_rational() != rp.beta[i].is_rational()) return false;
        // conjugation must act by the same index permutation on both lists
        for (int j = 0; j < 3; ++j) {
            bool ca = conj_in(rp, rp.alpha[i]) == rp.alpha[j];
            bool cb = conj_in(rp, rp.beta[i]) == rp.beta[j];
            if (ca != cb) return false;
        }
    }
    return true;
}

Poly<Rat> glue2(const RootPairing& rp) {
    if (!check_galois_pairing(rp)) throw std::invalid_argument("glue2: pairing not equivariant");
    const auto &al = rp.alpha, &be = rp.beta;
    auto poly_of = [](const std::vector<NFElem>& roots) {
        // recover the rational cubic from its roots for the j-invariant test
        Poly<NFElem> q({NFElem(1)});
        for (const auto& r : roots) q = q * Poly<NFElem>({-r, NFElem(1)});
        std::vector<Rat> c;
        for (long i = 0; i <= q.degree(); ++i) c.push_back(q.coeff(i).rat());
        return Poly<Rat>(c);
    };
    Poly<Rat> f = poly_of(al), g = poly_of(be);
    if (j_of_cubic(f) == j_of_cubic(g))
        throw std::invalid_argument(
            "glue2: equal j-invariants; the pairing may be induced by an isomorphism");

    NFElem a32 = al[2] - al[1], a21 = al[1] - al[0], a13 = al[0] - al[2];
    NFElem b32 = be[2] - be[1], b21 = be[1] - be[0], b13 = be[0] - be[2];
    NFElem a1 = a32 * a32 / b32 + a21 * a21 / b21 + a13 * a13 / b13;
    NFElem a2 = al[0] * b32 + al[1] * b13 + al[2] * b21;
    NFElem b1 = b32 * b32 / a32 + b21 * b21 / a21 + b13 * b13 / a13;
    NFElem b2 = be[0] * a32 + be[1] * a13 + be[2] * a21;
    if (a2.is_zero() || b2.is_zero())
        throw std::invalid_argument("glue2: degenerate configuration (a2 or b2 vanishes)");
    NFElem df = (a32 * a21 * a13) * (a32 * a21 * a13);
    NFElem dg = (b32 * b21 * b13) * (b32 * b21 * b13);
    NFElem A = dg * a1 / a2, B = df * b1 / b2;

    auto quad = [](const NFElem& u, const NFElem& v) {
        return Poly<NFElem>({v, NFElem(0), u});
    };
    Poly<NFElem> h = quad(A * a21 * a13, B * b21 * b13) * quad(A * a32 * a21, B * b32 * b21) *
                     quad(A * a13 * a32, B * b13 * b32);
    h = NFElem(-1) * h;
    std::vector<Rat> c;
    for (long i = 0; i <= h.degree(); ++i) {
        if (!h.coeff(i).is_rational())
            throw std::logic_error("glue2: sextic did not descend to the rationals");
        c.push_back(h.coeff(i).rat());
    }
    Poly<Rat> out(c);
    if (out.degree() != 6 || discriminant(out) == 0)
        throw std::invalid_argument("glue2: glued sextic is degenerate");
    return out;
}

Poly<Rat> glue2(const Poly<Rat>& f, const Poly<Rat>& g) {
    return glue2(make_pairing(f, g));
}

Poly<Rat> simplify_sextic(const Poly<Rat>& h) {
    if (h.degree() != 6 || discriminant(h) == 0)
        throw std::invalid_argument("simplify_sextic: expected a squarefree sextic");
    // collect primes of all coefficient numerators and denominators
    std::map<Int, int> primes;
    for (long i = 0; i <= 6; ++i) {
        if (h.coeff(i) == 0) continue;
        for (const auto& t : trial_factor(numerator(h.coeff(i)))) primes[t.prime] = 1;
        for (const auto& t : trial_factor(denominator(h.coeff(i)))) primes[t.prime] = 1;
    }
    auto valp = [](const Rat& q, const Int& p) {
        int v = 0;
        Int n = numerator(q), d = denominator(q);
        while (n % p == 0) n /= p, ++v;
        while (d % p == 0) d /= p, --v;
        return v;
    };
    Rat u(1), v2(1);
    for (const auto& [p, one] : primes) {
        (void)one;
        long best_a = 0, best_b = 0;
        long best_cost = -1;
        for (long a = -3; a <= 3; ++a) {
            // with x -> p^a x, the i-th valuation becomes e_i + i a; pick an
            // even b near the median for the y-scaling p^(b/2)
            std::vector<long> vals;
            for (long i = 0; i <= 6; ++i)
                if (h.coeff(i) != 0) vals.push_back(valp(h.coeff(i), p) + i * a);
            std::sort(vals.begin(), vals.end());
            long med = vals[vals.size() / 2];
            for (long b : {med - (med % 2 + 2) % 2, med + (med % 2 + 2) % 2}) {
                long cost = 0;
                for (long e : vals) cost += std::abs(e - b);
                cost += 2 * std::abs(a);  // prefer the smaller substitution
                if (best_cost < 0 || cost < best_cost) {
                    best_cost = cost;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        u *= pow_rat(Rat(p), best_a);
        v2 *= pow_rat(Rat(p), best_b);
    }
    std::vector<Rat> c;
    for (long i = 0; i <= 6; ++i) c.push_back(h.coeff(i) * pow_rat(u, i) / v2);
    Poly<Rat> out(c);
    if (!weighted_equal(igusa_clebsch(h), igusa_clebsch(out), LambdaDomain::Rationals))
        throw std::logic_error("simplify_sextic: reduction changed the curve");
    return out;
}

}  // namespace g2split
