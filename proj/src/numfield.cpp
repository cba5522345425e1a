#include "g2split/numfield.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2split/factor.hpp"

namespace g2split {

std::shared_ptr<const NumberField> NumberField::create(Poly<Rat> min_poly, std::string var) {
    if (min_poly.degree() < 1) throw std::invalid_argument("NumberField: constant polynomial");
    if (!min_poly.is_monic()) throw std::invalid_argument("NumberField: polynomial not monic");
    if (min_poly.degree() <= 6 && !is_irreducible(min_poly))
        throw std::invalid_argument("NumberField: polynomial not irreducible");
    return std::shared_ptr<const NumberField>(new NumberField(std::move(min_poly), std::move(var)));
}

const std::vector<BigComplex>& NumberField::embeddings(unsigned bits) const {
    if (emb_bits_ >= bits && !emb_.empty()) return emb_;
    PrecisionGuard guard(bits);
    auto roots = complex_roots(min_poly_, bits);
    // fixed order: real roots first (ascending), then by (re, im)
    BigFloat eps = pow(BigFloat(2), -static_cast<int>(bits / 3));
    std::sort(roots.begin(), roots.end(), [&](const BigComplex& a, const BigComplex& b) {
        bool ra = abs(a.im) < eps, rb = abs(b.im) < eps;
        if (ra != rb) return ra;
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    emb_ = std::move(roots);
    emb_bits_ = bits;
    return emb_;
}

NFElem NumberField::gen() const {
    std::vector<Rat> c(degree(), Rat(0));
    c.resize(std::max<std::size_t>(2, c.size()));
    c[1] = 1;
    return NFElem(shared_from_this(), std::move(c));
}

NFElem NumberField::element(std::vector<Rat> coeffs) const {
    return NFElem(shared_from_this(), std::move(coeffs));
}

NFElem NumberField::from_rat(const Rat& r) const { return NFElem(shared_from_this(), {r}); }

NFElem::NFElem(NumberFieldPtr parent, std::vector<Rat> coeffs)
    : parent_(std::move(parent)), c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Rat(0));
    reduce();
}

void NFElem::reduce() {
    if (!parent_) {
        c_.resize(1);
        return;
    }
    Poly<Rat> r = divrem(Poly<Rat>(c_), parent_->min_poly()).second;
    c_ = r.coeffs();
    c_.resize(parent_->degree(), Rat(0));
}

bool NFElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat NFElem::rat() const {
    if (!is_rational()) throw std::domain_error("NFElem: not rational");
    return c_[0];
}

bool NFElem::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

const NumberFieldPtr& NFElem::common_parent(const NFElem& a, const NFElem& b) {
    if (a.parent_ && b.parent_ && a.parent_ != b.parent_ &&
        a.parent_->min_poly() != b.parent_->min_poly())
        throw std::invalid_argument("NFElem: elements of different fields");
    return a.parent_ ? a.parent_ : b.parent_;
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    const auto& par = NFElem::common_parent(a, b);
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return NFElem(par, std::move(c));
}

NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }

NFElem NFElem::operator-() const {
    auto c = c_;
    for (auto& v : c) v = -v;
    NFElem r;
    r.parent_ = parent_;
    r.c_ = std::move(c);
    return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    const auto& par = NFElem::common_parent(a, b);
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return NFElem(par, std::move(c));
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

bool operator==(const NFElem& a, const NFElem& b) {
    if (a.parent_ && b.parent_ && a.parent_ != b.parent_ &&
        a.parent_->min_poly() != b.parent_->min_poly())
        return false;
    return (a - b).is_zero();
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw std::domain_error("NFElem: inverse of zero");
    if (!parent_ || is_rational()) {
        NFElem r;
        r.parent_ = parent_;
        r.c_ = {Rat(1) / c_[0]};
        r.reduce();
        return r;
    }
    auto [g, u, v] = poly_xgcd(as_poly(), parent_->min_poly());
    (void)v;
    if (g.degree() != 0) throw std::logic_error("NFElem: min poly not coprime to element");
    Poly<Rat> inv = (Rat(1) / g.coeff(0)) * u;
    return NFElem(parent_, inv.coeffs());
}

BigComplex NFElem::embed(std::size_t k, unsigned bits) const {
    if (!parent_) return BigComplex::from_rat(c_[0], bits);
    const auto& emb = parent_->embeddings(bits);
    if (k >= emb.size()) throw std::out_of_range("NFElem: embedding index");
    BigComplex acc{BigFloat(0), BigFloat(0), bits};
    const BigComplex& z = emb[k];
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + BigComplex::from_rat(*it, bits);
    return acc;
}

std::string NFElem::str() const {
    if (!parent_ || is_rational()) return c_[0].get_str();
    return as_poly().str(parent_->var());
}

namespace {

BigComplex complex_sqrt(const BigComplex& z) {
    BigFloat r = z.abs();
    BigFloat x = sqrt(BigFloat((r + z.re) / 2));
    BigFloat y = sqrt(BigFloat((r - z.re) / 2));
    if (z.im < 0) y = -y;
    return {x, y, z.precision_bits};
}

// square root of a rational as an element of a degree-2 field when possible
std::optional<NFElem> sqrt_deg2(const NFElem& a) {
    const auto& K = a.parent();
    Rat b = K->min_poly().coeff(1), c = K->min_poly().coeff(0);
    Rat d = b * b - Rat(4) * c;  // gen = (-b + sqrt(d)) / 2
    Int m = squarefree_part(d);
    Rat w2 = d / Rat(m);
    auto w = exact_sqrt(w2);  // sqrt(d) = w * sqrt(m)
    if (!w) throw std::logic_error("sqrt_deg2: squarefree part inconsistency");
    // a = a0 + a1*gen  ->  (a0 - a1 b/2) + (a1 w / 2) sqrt(m)
    QuadSurd s{a.coeff(0) - a.coeff(1) * b / 2, a.coeff(1) * *w / 2, m};
    auto r = quad_surd_sqrt(s);
    if (!r) return std::nullopt;
    // back: sqrt(m) = sqrt(d)/w = (2*gen + b)/w
    Rat c1 = Rat(2) * r->v / *w;
    Rat c0 = r->u + r->v * b / *w;
    return K->element({c0, c1});
}

std::optional<NFElem> sqrt_numeric(const NFElem& a) {
    const auto& K = a.parent();
    const long n = K->degree();
    for (unsigned bits : {512u, 1024u, 2048u}) {
        PrecisionGuard guard(bits);
        const auto& emb = K->embeddings(bits);
        std::vector<BigComplex> sq(n);
        for (long k = 0; k < n; ++k) sq[k] = complex_sqrt(a.embed(k, bits));
        BigFloat tol = pow(BigFloat(2), -static_cast<int>(bits / 3));
        Int dmax = pow_int(Int(2), bits / 4);
        // try sign patterns (global sign is free: fix the first positive)
        for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
            // solve V x = rhs for the power-basis coefficients
            std::vector<std::vector<BigComplex>> M(n, std::vector<BigComplex>(n + 1));
            for (long k = 0; k < n; ++k) {
                BigComplex pw{BigFloat(1), BigFloat(0), bits};
                for (long i = 0; i < n; ++i) {
                    M[k][i] = pw;
                    pw = pw * emb[k];
                }
                BigComplex rhs = sq[k];
                if (k > 0 && (mask >> (k - 1)) & 1) rhs = -rhs;
                M[k][n] = rhs;
            }
            bool singular = false;
            for (long col = 0; col < n && !singular; ++col) {
                long piv = col;
                for (long r = col + 1; r < n; ++r)
                    if (M[r][col].abs() > M[piv][col].abs()) piv = r;
                if (M[piv][col].abs() < tol) { singular = true; break; }
                std::swap(M[col], M[piv]);
                for (long r = 0; r < n; ++r) {
                    if (r == col) continue;
                    BigComplex f = M[r][col] / M[col][col];
                    for (long cc = col; cc <= n; ++cc) M[r][cc] = M[r][cc] - f * M[col][cc];
                }
            }
            if (singular) continue;
            std::vector<Rat> coeffs(n);
            bool ok = true;
            for (long i = 0; i < n && ok; ++i) {
                BigComplex xi = M[i][n] / M[i][i];
                if (abs(xi.im) > tol * 1000) { ok = false; break; }
                auto r = reconstruct_rational(xi.re, dmax, tol * 1000);
                if (!r) { ok = false; break; }
                coeffs[i] = *r;
            }
            if (!ok) continue;
            NFElem cand = K->element(std::move(coeffs));
            if (cand * cand == a) return cand;
        }
        // no pattern certified at this precision; a genuine square would
        // have been caught, but retry once in case of numeric failure
    }
    return std::nullopt;
}

}  // namespace

std::optional<NFElem> sqrt_in_field(const NFElem& a) {
    if (!a.parent() || a.is_rational()) {
        Rat v = a.coeff(0);
        if (auto r = exact_sqrt(v)) {
            if (!a.parent()) return NFElem(*r);
            return a.parent()->from_rat(*r);
        }
        if (!a.parent()) return std::nullopt;
        if (a.parent()->degree() == 2) return sqrt_deg2(a);
        return sqrt_numeric(a);
    }
    if (a.parent()->degree() == 2) return sqrt_deg2(a);
    return sqrt_numeric(a);
}

}  // namespace g2split
