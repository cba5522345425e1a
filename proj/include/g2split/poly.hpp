#ifndef G2SPLIT_POLY_HPP
#define G2SPLIT_POLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "g2split/rational.hpp"

namespace g2split {

// Dense univariate polynomial over a field T. coeffs[i] is the coefficient
// of x^i; the zero polynomial is the empty vector.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    // x^n with given leading coefficient
    static Poly monomial(const T& v, std::size_t n) {
        if (is_zero_val(v)) return Poly();
        std::vector<T> c(n + 1, zero_like(v));
        c[n] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& leading() const {
        if (c_.empty()) throw std::logic_error("leading of zero polynomial");
        return c_.back();
    }
    T coeff(std::size_t i) const {
        if (i < c_.size()) return c_[i];
        if (!c_.empty()) return zero_like(c_[0]);
        return T(0);
    }

    bool is_monic() const { return !c_.empty() && is_one_val(c_.back()); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        auto c = c_;
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const T& s, const Poly& p) {
        if (is_zero_val(s)) return Poly();
        auto c = p.c_;
        for (auto& v : c) v = s * v;
        return Poly(std::move(c));
    }

    Poly scaled(const T& s) const { return s * *this; }

    T operator()(const T& x) const {
        if (c_.empty()) return T(0);
        T acc = zero_like(c_[0]);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> c(c_.size() - 1, zero_like(c_[0]));
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = T(long(i)) * c_[i];
        return Poly(std::move(c));
    }

    // substitute x -> u*x
    Poly dilate(const T& u) const {
        auto c = c_;
        T pw = one_like_from(c);
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = c[i] * pw;
            pw = pw * u;
        }
        return Poly(std::move(c));
    }

    // substitute x -> x + s
    Poly shift(const T& s) const {
        Poly res;
        Poly lin({s, T(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) res = res * lin + constant(*it);
        return res;
    }

    // x^deg * f(1/x)
    Poly reversed() const {
        auto c = c_;
        std::reverse(c.begin(), c.end());
        return Poly(std::move(c));
    }

    std::string str(const std::string& var = "x") const;

  private:
    static bool is_zero_val(const T& v) { return v == T(0); }
    static bool is_one_val(const T& v) { return v == T(1); }
    static T zero_like(const T& v) { return v - v; }
    static T one_like_from(const std::vector<T>& c) {
        return c.empty() ? T(1) : c[0] - c[0] + T(1);
    }
    void trim() {
        while (!c_.empty() && is_zero_val(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<T>(), a};
    std::vector<T> rem(a.coeffs());
    std::vector<T> quo(a.degree() - b.degree() + 1, a.coeffs()[0] - a.coeffs()[0]);
    const auto& bc = b.coeffs();
    T lead_inv = T(1) / b.leading();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
        T q = rem[i + b.degree()] * lead_inv;
        quo[i] = q;
        if (!(q == q - q)) {
            for (long j = 0; j <= b.degree(); ++j) rem[i + j] = rem[i + j] - q * bc[j];
        }
    }
    rem.resize(b.degree() >= 0 ? b.degree() : 0);
    return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

// Monic gcd.
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (T(1) / a.leading()) * a;
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> poly_xgcd(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r0 = a, r1 = b;
    Poly<T> s0 = Poly<T>::constant(T(1)), s1;
    Poly<T> t0, t1 = Poly<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Poly<T> s2 = s0 - q * s1;
        Poly<T> t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T inv = T(1) / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

// Resultant via the subresultant-free fraction-field Euclidean scheme.
template <class T>
T resultant(Poly<T> a, Poly<T> b) {
    if (a.is_zero() || b.is_zero()) return T(0);
    T res = T(1);
    while (true) {
        if (b.degree() == 0) {
            T lb = b.leading();
            T p = T(1);
            for (long i = 0; i < a.degree(); ++i) p = p * lb;
            return res * p;
        }
        auto r = divrem(a, b).second;
        if (r.is_zero()) return T(0);
        // res(a,b) = (-1)^(deg a * deg b) res(b,a); res(b, a mod b) picks up lc(b)^(deg a - deg r)
        long da = a.degree(), db = b.degree(), dr = r.degree();
        T lb = b.leading();
        T p = T(1);
        for (long i = 0; i < da - dr; ++i) p = p * lb;
        if ((da * db) % 2 == 1) res = -res;
        res = res * p;
        a = std::move(b);
        b = std::move(r);
    }
}

// disc(f) = (-1)^{n(n-1)/2} resultant(f, f') / lc(f).
template <class T>
T discriminant(const Poly<T>& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
    T r = resultant(f, f.derivative());
    long n = f.degree();
    if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
    return r / f.leading();
}

// --- Rational-coefficient helpers ---

// Smallest positive integer D with D*f integral.
inline Int common_denominator(const Poly<Rat>& f) {
    Int d = 1;
    for (const auto& c : f.coeffs()) d = lcm(d, denominator(c));
    return d;
}

// content of an integral polynomial (gcd of coefficients), zero poly -> 0
inline Int integer_content(const Poly<Rat>& f) {
    Int g = 0;
    for (const auto& c : f.coeffs()) g = gcd(g, numerator(c));
    return g;
}

// Primitive integral polynomial with the same roots, positive leading coeff.
inline Poly<Rat> primitive_part(const Poly<Rat>& f) {
    if (f.is_zero()) return f;
    Poly<Rat> g = Rat(common_denominator(f)) * f;
    Int c = integer_content(g);
    g = Rat(1, 1) / Rat(c) * g;
    if (g.leading() < 0) g = -g;
    return g;
}

// For monic f over Q, a scaling x -> x/c with c integral making c^n f(x/c)
// monic with integer coefficients; returns (monic integral poly, c).
inline std::pair<Poly<Rat>, Int> monic_integral_model(const Poly<Rat>& f) {
    if (!f.is_monic()) throw std::invalid_argument("monic_integral_model: input not monic");
    long n = f.degree();
    Int c = 1;
    for (long i = 0; i < n; ++i) {
        // need den(f_i) | c^(n-i): for p^e || den, p^ceil(e/(n-i)) | c
        Int den = denominator(f.coeff(i));
        for (const auto& t : trial_factor(den)) {
            unsigned long k = (t.exponent + (n - i) - 1) / (n - i);
            Int want = pow_int(t.prime, k);
            Int have = 1;
            while (c % (have * t.prime) == 0) have *= t.prime;
            if (want > have) c *= want / have;
        }
    }
    std::vector<Rat> out(n + 1);
    for (long i = 0; i <= n; ++i) out[i] = f.coeff(i) * Rat(pow_int(c, (unsigned long)(n - i)));
    return {Poly<Rat>(std::move(out)), c};
}

template <class T>
std::string Poly<T>::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        if (is_zero_val(c_[i]) && degree() > 0) continue;
        std::string term;
        if constexpr (std::is_same_v<T, Rat>) {
            term = c_[i].get_str();
        } else {
            term = "(...)";
        }
        if (i > 0) {
            if (term == "1") term.clear();
            else if (term == "-1") term = "-";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

}  // namespace g2split

#endif
