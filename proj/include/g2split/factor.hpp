#ifndef G2SPLIT_FACTOR_HPP
#define G2SPLIT_FACTOR_HPP

#include <optional>
#include <vector>

#include "g2split/poly.hpp"
#include "g2split/rational.hpp"

namespace g2split {

struct RatFactor {
    Poly<Rat> factor;  // monic irreducible over Q
    unsigned multiplicity = 1;
};

struct Factorization {
    Rat unit;  // p = unit * prod factor^multiplicity
    std::vector<RatFactor> factors;
    Poly<Rat> product() const;
};

// Exact factorization into irreducibles over Q, degree <= 6 only.
// Certified: candidate factors found by complex-root clustering are
// accepted only after exact division.
Factorization factor_small(const Poly<Rat>& p);

bool is_irreducible(const Poly<Rat>& p);

// Description of the splitting field of a polynomial of degree <= 4.
struct SplittingDescriptor {
    long degree = 1;
    bool divisible_by_three = false;
    // When the splitting field is multiquadratic: the full set of
    // squarefree d != 1 with Q(sqrt(d)) inside it, sorted.
    std::optional<std::vector<Int>> quad_subfields;

    bool is_polyquadratic() const { return quad_subfields.has_value(); }
    // minimal generating subset of quad_subfields
    std::vector<Int> generators() const;
    bool same_field(const SplittingDescriptor& other) const;
};

SplittingDescriptor splitting_field_descriptor(const Poly<Rat>& p);

// u + v*sqrt(m), m squarefree (m = 1 means a plain rational).
struct QuadSurd {
    Rat u, v;
    Int m = 1;
    friend QuadSurd operator+(const QuadSurd& a, const QuadSurd& b);
    friend QuadSurd operator-(const QuadSurd& a, const QuadSurd& b);
    friend QuadSurd operator*(const QuadSurd& a, const QuadSurd& b);
    friend QuadSurd operator/(const QuadSurd& a, const QuadSurd& b);
    friend bool operator==(const QuadSurd& a, const QuadSurd& b);
    QuadSurd conj() const { return {u, -v, m}; }
    Rat norm() const { return u * u - Rat(m) * v * v; }
};

// Exact square root of a quadratic surd inside the same field, if any.
std::optional<QuadSurd> quad_surd_sqrt(const QuadSurd& a);

}  // namespace g2split

#endif
