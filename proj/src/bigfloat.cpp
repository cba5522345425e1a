#include "g2split/bigfloat.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace g2split {

std::pair<Int, BigFloat> round_to_int(const BigFloat& x) {
    BigFloat r = round(x);
    Int n;
    mpfr_get_z(n.get_mpz_t(), r.backend().data(), MPFR_RNDN);
    return {n, BigFloat(abs(x - r))};
}

std::vector<BigComplex> complex_roots(const Poly<Rat>& f, unsigned bits) {
    if (f.degree() < 1) return {};
    const long n = f.degree();
    std::vector<BigComplex> c(n + 1);
    for (long i = 0; i <= n; ++i) c[i] = BigComplex::from_rat(f.coeff(i), bits);
    BigComplex lead = c[n];
    for (auto& v : c) v = v / lead;

    // Cauchy bound on root magnitude
    BigFloat bound(1);
    for (long i = 0; i < n; ++i) bound = (std::max)(bound, BigFloat(1 + abs(c[i].re) + abs(c[i].im)));

    auto eval = [&](const BigComplex& z) {
        BigComplex acc = c[n];
        for (long i = n - 1; i >= 0; --i) acc = acc * z + c[i];
        return acc;
    };

    // Durand-Kerner from a non-real, non-symmetric starting configuration
    std::vector<BigComplex> z(n);
    BigFloat pi = bf_pi();
    for (long k = 0; k < n; ++k) {
        BigFloat ang = 2 * pi * BigFloat(k) / BigFloat(n) + BigFloat("0.3951");
        BigFloat rad = bound * (BigFloat("0.6") + BigFloat(k) / BigFloat(4 * n));
        z[k] = {rad * cos(ang), rad * sin(ang), bits};
    }

    BigFloat eps = pow(BigFloat(2), -static_cast<int>(bits > 48 ? bits - 16 : 32));
    const int max_iter = 2000;
    for (int iter = 0; iter < max_iter; ++iter) {
        BigFloat worst(0);
        for (long k = 0; k < n; ++k) {
            BigComplex num = eval(z[k]);
            BigComplex den{BigFloat(1), BigFloat(0), bits};
            for (long j = 0; j < n; ++j)
                if (j != k) den = den * (z[k] - z[j]);
            BigComplex delta = num / den;
            z[k] = z[k] - delta;
            worst = (std::max)(worst, delta.abs());
        }
        if (worst < eps) break;
        if (iter == max_iter - 1) throw std::runtime_error("complex_roots: no convergence");
    }
    return z;
}

std::optional<Rat> reconstruct_rational(const BigFloat& x, const Int& dmax, const BigFloat& tol) {
    // continued fraction expansion of x
    BigFloat v = x;
    Int p0 = 1, q0 = 0;  // convergent h_{-1}
    Int p1 = 0, q1 = 1;  // dummy init; replaced below
    {
        auto [a0, d0] = round_to_int(BigFloat(floor(v)));
        (void)d0;
        p1 = a0;
        q1 = 1;
        v = v - to_bigfloat(Rat(a0));
    }
    for (int i = 0; i < 200; ++i) {
        Rat cand(p1, q1);
        cand.canonicalize();
        if (abs(to_bigfloat(cand) - x) < tol && denominator(cand) <= dmax) return cand;
        if (q1 > dmax) break;
        if (abs(v) < tol) break;
        v = 1 / v;
        BigFloat fl = floor(v);
        auto [a, dist] = round_to_int(fl);
        (void)dist;
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1;
        p1 = p2; q1 = q2;
        v = v - fl;
    }
    Rat cand(p1, q1);
    cand.canonicalize();
    if (abs(to_bigfloat(cand) - x) < tol && denominator(cand) <= dmax) return cand;
    return std::nullopt;
}

}  // namespace g2split
