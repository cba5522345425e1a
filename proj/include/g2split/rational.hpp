#ifndef G2SPLIT_RATIONAL_HPP
#define G2SPLIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2split {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from(long v) { return Int(v); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int numerator(const Rat& q) { return q.get_num(); }
inline Int denominator(const Rat& q) { return q.get_den(); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline std::optional<Int> exact_sqrt(const Int& n) {
    if (!is_square(n)) return std::nullopt;
    return isqrt(n);
}

// Rational square root when it exists.
inline std::optional<Rat> exact_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto n = exact_sqrt(numerator(q));
    auto d = exact_sqrt(denominator(q));
    if (!n || !d) return std::nullopt;
    return Rat(*n, *d);
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat r(1);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Trial division; factors up to `limit`, the (possibly composite) cofactor
// above the limit is returned with exponent tagged via the bool.
struct FactorTerm {
    Int prime;
    unsigned exponent;
    bool certified;  // false when `prime` is an uncertified cofactor
};

inline std::vector<FactorTerm> trial_factor(Int n, const Int& limit = Int(1000000)) {
    std::vector<FactorTerm> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    auto push = [&](const Int& p, unsigned e, bool cert) { out.push_back({p, e, cert}); };
    unsigned e2 = 0;
    while (n % 2 == 0) { n /= 2; ++e2; }
    if (e2) push(Int(2), e2, true);
    for (Int p = 3; p * p <= n && p <= limit; p += 2) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            push(p, e, true);
        }
    }
    if (n > 1) push(n, 1, n <= limit * limit || is_prime(n));
    return out;
}

// Squarefree part of a nonzero integer (sign preserved).
inline Int squarefree_part(const Int& n) {
    if (n == 0) throw std::invalid_argument("squarefree_part of zero");
    Int m = n < 0 ? -n : n;
    Int sf = 1;
    for (const auto& t : trial_factor(m)) {
        if (!t.certified) {
            // large certified-prime cofactor is handled above; a genuinely
            // composite leftover would need full factorization
            if (!is_prime(t.prime)) throw std::runtime_error("squarefree_part: cofactor too large");
        }
        if (t.exponent % 2) sf *= t.prime;
    }
    return n < 0 ? -sf : sf;
}

inline Int squarefree_part(const Rat& q) {
    // square class of a rational: sf(num * den)
    return squarefree_part(Int(numerator(q) * denominator(q)));
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace g2split

#endif
