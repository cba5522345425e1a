#include "g2split/quadfields.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace g2split {

namespace {
bool is_squarefree(const Int& n) {
    Int m = abs(n);
    if (m == 0) return false;
    for (const auto& t : trial_factor(m)) {
        if (!t.certified && !is_prime(t.prime))
            throw std::runtime_error("is_squarefree: cofactor too large");
        if (t.exponent > 1) return false;
    }
    return true;
}
}  // namespace

bool ImagQuadField::is_fundamental(const Int& D) {
    if (D >= 0) return false;
    Int r = ((D % 4) + 4) % 4;
    if (r == 1) return is_squarefree(D);
    if (r != 0) return false;
    Int m = D / 4;
    Int rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

ImagQuadField ImagQuadField::from_disc(const Int& D) {
    if (!is_fundamental(D)) throw std::invalid_argument("not a fundamental discriminant");
    return {abs(D), D};
}

ImagQuadField ImagQuadField::from_d(const Int& d) {
    // the table label is the absolute value of the fundamental discriminant
    return from_disc(-d);
}

Int ImagQuadField::d_of_disc(const Int& D) { return abs(D); }

bool QuadForm::is_reduced() const {
    if (!(abs(b) <= a && a <= c)) return false;
    if ((abs(b) == a || a == c) && b < 0) return false;
    return true;
}

QuadForm reduce_form(QuadForm f) {
    if (f.a <= 0 || f.disc() >= 0) throw std::invalid_argument("reduce_form: not positive definite");
    Int D = f.disc();
    while (!f.is_reduced()) {
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if (f.b > f.a || f.b <= -f.a) {
            Int two_a = 2 * f.a;
            Int k = floor_div(f.a - f.b, two_a);
            f.b += two_a * k;
            f.c = (f.b * f.b - D) / (4 * f.a);
            continue;
        }
        if (f.b < 0 && (f.b == -f.a || f.a == f.c)) {
            f.b = -f.b;
            continue;
        }
        break;
    }
    return f;
}

std::vector<QuadForm> reduced_forms(const Int& D) {
    if (D >= 0) throw std::invalid_argument("reduced_forms: D must be negative");
    if (((D % 4) + 4) % 4 > 1) throw std::invalid_argument("reduced_forms: D not 0,1 mod 4");
    std::vector<QuadForm> out;
    Int amax = isqrt(-D / 3);
    for (Int a = 1; a <= amax; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            Int num = b * b - D;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            QuadForm f{a, b, c};
            if (!f.is_reduced() || !f.is_primitive()) continue;
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    Int D = f.disc();
    if (D != g.disc()) throw std::invalid_argument("compose: mismatched discriminants");
    Int s = (f.b + g.b) / 2;
    Int e = gcd(gcd(f.a, g.a), s);
    Int A = f.a * g.a / (e * e);
    // B solves B = b1 mod 2a1/e, B = b2 mod 2a2/e, B^2 = D mod 4A
    Int m1 = 2 * f.a / e, m2 = 2 * g.a / e;
    Int g12, u, v;
    mpz_gcdext(g12.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    Int diff = g.b - f.b;
    if (diff % g12 != 0) throw std::logic_error("compose: inconsistent congruences");
    Int L = m1 / g12 * m2;  // lcm
    Int t = (diff / g12 * u) % (m2 / g12);
    Int B0 = f.b + m1 * t;
    B0 = ((B0 % L) + L) % L;
    Int fourA = 4 * A;
    Int g0 = gcd(f.a, g.a);
    Int steps = g0 / e;
    for (Int k = 0; k < steps; ++k) {
        Int B = B0 + k * L;
        Int num = B * B - D;
        if (num % fourA == 0) {
            return reduce_form({A, B, num / fourA});
        }
    }
    throw std::logic_error("compose: no square root of D in the progression");
}

namespace {

QuadForm principal_form(const Int& D) {
    Int b = (((D % 2) + 2) % 2);  // 0 or 1 matching D's parity
    return {Int(1), b, (b * b - D) / 4};
}

QuadForm form_pow(const QuadForm& f, Int n) {
    QuadForm acc = principal_form(f.disc());
    QuadForm base = reduce_form(f);
    while (n > 0) {
        if (n % 2 == 1) acc = compose(acc, base);
        base = compose(base, base);
        n /= 2;
    }
    return acc;
}

}  // namespace

ClassGroup class_group(const Int& D) {
    if (D >= 0) throw std::invalid_argument("class_group: D must be negative");
    ClassGroup cg;
    cg.D = D;
    cg.forms = reduced_forms(D);
    cg.h = static_cast<long>(cg.forms.size());

    // abelian type from the counts of elements of order dividing p^k
    std::map<Int, std::vector<long>> ppart;  // prime -> cyclic factor exponents, descending
    Int h(cg.h);
    for (const auto& t : trial_factor(h)) {
        const Int& p = t.prime;
        std::vector<long> nk{1};  // nk[k] = #elements of order dividing p^k
        Int pk = 1;
        while (true) {
            pk *= p;
            long cnt = 0;
            for (const auto& f : cg.forms)
                if (form_pow(f, pk) == principal_form(D)) ++cnt;
            nk.push_back(cnt);
            if (Int(cnt) == pow_int(p, t.exponent)) break;
        }
        // number of factors of order >= p^k is log_p(nk[k]/nk[k-1])
        std::vector<long> exps;
        for (std::size_t k = 1; k < nk.size(); ++k) {
            long r = 0;
            Int q(nk[k] / nk[k - 1]);
            while (q > 1) { q /= p; ++r; }
            for (long i = 0; i < r; ++i) {
                if (static_cast<std::size_t>(i) >= exps.size()) exps.push_back(0);
                exps[i] += 1;
            }
        }
        std::sort(exps.rbegin(), exps.rend());
        if (!exps.empty()) ppart[p] = exps;
    }
    // invariant factors d1 | d2 | ... : align the largest exponents
    std::size_t len = 0;
    for (const auto& [p, exps] : ppart) len = std::max(len, exps.size());
    std::vector<Int> divisors(len, Int(1));
    for (const auto& [p, exps] : ppart)
        for (std::size_t i = 0; i < exps.size(); ++i)
            divisors[i] *= pow_int(p, exps[i]);
    std::reverse(divisors.begin(), divisors.end());  // ascending, each divides the next
    cg.elementary_divisors = std::move(divisors);
    return cg;
}

std::vector<Int> scan_class_groups(const Int& max_abs_disc, ScanTarget target) {
    if (max_abs_disc < 4) throw std::invalid_argument("scan_class_groups: bound too small");
    std::vector<Int> out;
    for (Int n = 3; n <= max_abs_disc; ++n) {
        Int D = -n;
        if (!ImagQuadField::is_fundamental(D)) continue;
        auto forms = reduced_forms(D);
        long h = static_cast<long>(forms.size());
        bool match = false;
        switch (target) {
            case ScanTarget::H1: match = (h == 1); break;
            case ScanTarget::H2: match = (h == 2); break;
            case ScanTarget::TwoTwo:
                if (h == 4) match = class_group(D).is_two_two();
                break;
        }
        if (match) out.push_back(n);
    }
    return out;
}

int kronecker(const Int& D, const Int& p) {
    return mpz_kronecker(D.get_mpz_t(), p.get_mpz_t());
}

std::optional<QuadIntegral> cornacchia(const ImagQuadField& M, const Int& p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("cornacchia: p must be an odd prime");
    int k = kronecker(M.D, p);
    if (k == 0) throw std::invalid_argument("cornacchia: p ramified");
    if (k == -1) return std::nullopt;
    // x^2 + |D| y^2 = 4p with x = y*D mod 2
    Int absD = -M.D;
    Int fourp = 4 * p;
    for (Int y = 0; absD * y * y <= fourp; ++y) {
        Int rem = fourp - absD * y * y;
        if (auto x = exact_sqrt(rem)) {
            if ((*x - y * M.D) % 2 != 0) continue;
            return QuadIntegral{M, *x, y};  // x >= 0: trace already normalized
        }
    }
    // a split prime always has a representation in the maximal order
    throw std::logic_error("cornacchia: split prime without representation");
}

std::vector<std::pair<Int, Int>> split_primes_with_trace(const ImagQuadField& M,
                                                         const Int& trace_residue,
                                                         const Int& modulus,
                                                         const ImagQuadField& inert_in,
                                                         const Int& bound) {
    if (M.D == inert_in.D) throw std::invalid_argument("split_primes_with_trace: fields coincide");
    if (modulus < 1) throw std::invalid_argument("split_primes_with_trace: modulus must be >= 1");
    std::vector<std::pair<Int, Int>> out;
    Int p = 3;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > bound) break;
        if (kronecker(M.D, p) != 1) continue;
        if (kronecker(inert_in.D, p) != -1) continue;
        auto pi = cornacchia(M, p);
        if (!pi) continue;
        Int a = pi->trace();
        Int r1 = ((a - trace_residue) % modulus + modulus) % modulus;
        Int r2 = ((a + trace_residue) % modulus + modulus) % modulus;
        if (r1 == 0 || r2 == 0) out.emplace_back(p, a);
    }
    return out;
}

Rat ring_class_degree(const Int& d, const Int& f) {
    if (f < 1) throw std::invalid_argument("ring_class_degree: conductor must be >= 1");
    ImagQuadField M = ImagQuadField::from_d(d);
    Rat out(f);
    for (const auto& t : trial_factor(f)) {
        int k = kronecker(M.D, t.prime);
        out *= Rat(1) - Rat(k) / Rat(t.prime);
    }
    return out;
}

}  // namespace g2split
