#ifndef G2SPLIT_BIGFLOAT_HPP
#define G2SPLIT_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "g2split/poly.hpp"
#include "g2split/rational.hpp"

namespace g2split {

// Arbitrary-precision real. Operations round to the thread default
// precision; wrap numeric blocks in a PrecisionGuard.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

inline unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(bits * 0.30103) + 4; }

class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits) : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(bits_to_digits(bits));
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

inline BigFloat to_bigfloat(const Rat& q) {
    return BigFloat(q.get_num().get_str()) / BigFloat(q.get_den().get_str());
}

inline BigFloat bf_pi() { return 4 * atan(BigFloat(1)); }

struct BigComplex {
    BigFloat re, im;
    unsigned precision_bits = 256;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i, unsigned bits = 256)
        : re(std::move(r)), im(std::move(i)), precision_bits(bits) {}
    static BigComplex from_rat(const Rat& r, unsigned bits) { return {to_bigfloat(r), BigFloat(0), bits}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im, std::min(a.precision_bits, b.precision_bits)};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im, std::min(a.precision_bits, b.precision_bits)};
    }
    BigComplex operator-() const { return {-re, -im, precision_bits}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re,
                std::min(a.precision_bits, b.precision_bits)};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n,
                std::min(a.precision_bits, b.precision_bits)};
    }
    BigComplex conj() const { return {re, -im, precision_bits}; }
    BigFloat abs() const { return sqrt(re * re + im * im); }
};

// exp(2*pi*i*tau) for tau = x + i*y with y > 0.
inline BigComplex cis_q(const BigFloat& x, const BigFloat& y, unsigned bits) {
    BigFloat pi = bf_pi();
    BigFloat r = exp(BigFloat(-2 * pi * y));
    BigFloat ang = 2 * pi * x;
    return {r * cos(ang), r * sin(ang), bits};
}

// All complex roots of a squarefree polynomial over Q (Durand-Kerner).
// Must be called inside a PrecisionGuard of the stated precision.
std::vector<BigComplex> complex_roots(const Poly<Rat>& f, unsigned bits);

// Nearest integer and the rounding distance.
std::pair<Int, BigFloat> round_to_int(const BigFloat& x);

// Nearest rational with denominator <= dmax within tol, via continued
// fraction convergents; nullopt when no convergent is close enough.
std::optional<Rat> reconstruct_rational(const BigFloat& x, const Int& dmax, const BigFloat& tol);

}  // namespace g2split

#endif
