#ifndef G2SPLIT_QUADFIELDS_HPP
#define G2SPLIT_QUADFIELDS_HPP

#include <optional>
#include <vector>

#include "g2split/rational.hpp"

namespace g2split {

// Imaginary quadratic field labelled the way the tables are: d is the
// absolute value of the fundamental discriminant up to the usual
// convention (d = 4 means disc -4, d = 15 means disc -15, d = 84 means
// disc -84). normalization lives here and nowhere else.
struct ImagQuadField {
    Int d;  // positive label
    Int D;  // fundamental discriminant, negative

    static ImagQuadField from_d(const Int& d);
    static ImagQuadField from_disc(const Int& D);
    // label for a fundamental discriminant
    static Int d_of_disc(const Int& D);
    static bool is_fundamental(const Int& D);
};

struct QuadForm {
    Int a, b, c;
    Int disc() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    bool is_primitive() const { return gcd(gcd(a, b), c) == 1; }
    friend bool operator==(const QuadForm& x, const QuadForm& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const QuadForm& x, const QuadForm& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
};

// Gauss reduction of a positive definite form.
QuadForm reduce_form(QuadForm f);

// Dirichlet composition of primitive forms of the same discriminant,
// result reduced.
QuadForm compose(const QuadForm& f, const QuadForm& g);

// All reduced primitive positive definite forms of discriminant D < 0.
std::vector<QuadForm> reduced_forms(const Int& D);

struct ClassGroup {
    Int D;
    long h = 1;
    std::vector<Int> elementary_divisors;  // each dividing the next
    std::vector<QuadForm> forms;
    bool is_two_two() const {
        return elementary_divisors == std::vector<Int>{Int(2), Int(2)};
    }
};

// Class group of the (possibly non-maximal) order of discriminant D.
ClassGroup class_group(const Int& D);

enum class ScanTarget { H1, H2, TwoTwo };

// d labels of all fundamental discriminants with |D| <= max_abs_disc
// matching the target, ascending.
std::vector<Int> scan_class_groups(const Int& max_abs_disc, ScanTarget target);

int kronecker(const Int& D, const Int& p);

// (x + y sqrt(D))/2 in the maximal order of M.
struct QuadIntegral {
    ImagQuadField parent;
    Int x, y;
    Int trace() const { return x; }
    Int norm() const { return (x * x - parent.D * y * y) / 4; }
    QuadIntegral conj() const { return {parent, x, -y}; }
};

// Splits p = pi * conj(pi) in O_M when p splits; trace normalized >= 0.
std::optional<QuadIntegral> cornacchia(const ImagQuadField& M, const Int& p);

// Primes 5 <= p <= bound split in M, inert in `inert_in`, with normalized
// trace congruent to +-trace_residue mod modulus; pairs (p, trace).
std::vector<std::pair<Int, Int>> split_primes_with_trace(const ImagQuadField& M,
                                                         const Int& trace_residue,
                                                         const Int& modulus,
                                                         const ImagQuadField& inert_in,
                                                         const Int& bound);

// [H_f : H] = f * prod_{p | f} (1 - (-d/p)/p) for the ring class field of
// conductor f over the Hilbert class field.
Rat ring_class_degree(const Int& d, const Int& f);

}  // namespace g2split

#endif
