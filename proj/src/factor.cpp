#include "g2split/factor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "g2split/bigfloat.hpp"

namespace g2split {

Poly<Rat> Factorization::product() const {
    Poly<Rat> p = Poly<Rat>::constant(unit);
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i) p = p * f.factor;
    return p;
}

namespace {

// roots of a squarefree primitive integral polynomial, grouped into
// conjugation-closed units: real roots singly, conjugate pairs together
struct RootUnit {
    std::vector<BigComplex> roots;  // size 1 (real) or 2 (conjugate pair)
};

std::vector<RootUnit> root_units(const Poly<Rat>& q, unsigned bits) {
    auto roots = complex_roots(q, bits);
    BigFloat eps = pow(BigFloat(2), -static_cast<int>(bits / 3));
    BigFloat scale(1);
    for (const auto& r : roots) scale = (std::max)(scale, r.abs());
    std::vector<bool> used(roots.size(), false);
    std::vector<RootUnit> units;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        if (abs(roots[i].im) < eps * scale) {
            units.push_back({{roots[i]}});
            used[i] = true;
            continue;
        }
        // find the conjugate partner
        std::size_t best = i;
        BigFloat bestd(-1);
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            BigFloat d = (roots[j] - roots[i].conj()).abs();
            if (bestd < 0 || d < bestd) { bestd = d; best = j; }
        }
        if (best == i) throw std::runtime_error("factor_small: unpaired complex root");
        units.push_back({{roots[i], roots[best]}});
        used[i] = used[best] = true;
    }
    return units;
}

// try to certify the monic factor with the given roots; exact division check
std::optional<Poly<Rat>> certify_factor(const Poly<Rat>& q, const std::vector<BigComplex>& roots,
                                        const Int& lead, unsigned bits) {
    BigComplex one{BigFloat(1), BigFloat(0), bits};
    std::vector<BigComplex> coef{one};
    for (const auto& r : roots) {
        std::vector<BigComplex> nxt(coef.size() + 1, BigComplex{BigFloat(0), BigFloat(0), bits});
        for (std::size_t i = 0; i < coef.size(); ++i) {
            nxt[i + 1] = nxt[i + 1] + coef[i];
            nxt[i] = nxt[i] - coef[i] * r;
        }
        coef = std::move(nxt);
    }
    // coefficients of a monic rational factor have denominator dividing lead
    BigFloat tol = pow(BigFloat(2), -static_cast<int>(bits / 4));
    std::vector<Rat> rc(coef.size());
    BigFloat lead_f = to_bigfloat(Rat(lead));
    for (std::size_t i = 0; i < coef.size(); ++i) {
        if (abs(coef[i].im) > tol) return std::nullopt;
        auto [n, dist] = round_to_int(BigFloat(coef[i].re * lead_f));
        if (dist > BigFloat("0.25")) return std::nullopt;
        rc[i] = Rat(n, lead);
        rc[i].canonicalize();
    }
    Poly<Rat> cand{std::vector<Rat>(rc)};
    if (cand.degree() != static_cast<long>(roots.size())) return std::nullopt;
    auto [quo, rem] = divrem(q, cand);
    (void)quo;
    if (!rem.is_zero()) return std::nullopt;
    return cand;
}

// factor a squarefree polynomial (deg <= 6) into monic irreducibles
std::vector<Poly<Rat>> factor_squarefree(Poly<Rat> q) {
    std::vector<Poly<Rat>> out;
    if (q.degree() <= 1) {
        if (q.degree() == 1) out.push_back((Rat(1) / q.leading()) * q);
        return out;
    }
    Poly<Rat> p = primitive_part(q);
    // Mignotte-style bound on factor coefficient size drives precision
    BigFloat norm2(0);
    for (const auto& c : p.coeffs()) norm2 += to_bigfloat(c) * to_bigfloat(c);
    double height_bits = 0.5 * static_cast<double>(log2(norm2)) + p.degree() + 4;
    unsigned bits = std::max(320u, static_cast<unsigned>(height_bits) + 128);

    for (int attempt = 0; attempt < 3; ++attempt, bits *= 2) {
      try {
        PrecisionGuard guard(bits);
        Poly<Rat> rest = p;
        std::vector<Poly<Rat>> found;
        bool progress = true;
        while (rest.degree() > 1 && progress) {
            progress = false;
            Int lead = numerator(rest.leading());
            auto units = root_units(rest, bits);
            // subsets of root units by total size, smallest factor first
            long target_max = rest.degree() / 2;
            for (long k = 1; k <= target_max && !progress; ++k) {
                std::size_t n = units.size();
                for (std::size_t mask = 1; mask < (std::size_t(1) << n) && !progress; ++mask) {
                    long sz = 0;
                    std::vector<BigComplex> roots;
                    for (std::size_t i = 0; i < n; ++i)
                        if (mask & (std::size_t(1) << i)) {
                            sz += units[i].roots.size();
                            for (const auto& r : units[i].roots) roots.push_back(r);
                        }
                    if (sz != k) continue;
                    if (auto f = certify_factor(rest, roots, lead, bits)) {
                        found.push_back(*f);
                        rest = rest / *f;
                        progress = true;
                    }
                }
            }
        }
        if (rest.degree() >= 1) found.push_back((Rat(1) / rest.leading()) * rest);
        // accept: all found factors certified by exact division; the last
        // piece is irreducible because every smaller split was ruled out
        out = std::move(found);
        return out;
      } catch (const std::runtime_error&) {
        if (attempt == 2) throw;
      }
    }
    throw std::runtime_error("factor_small: precision cap exceeded");
}

}  // namespace

Factorization factor_small(const Poly<Rat>& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_small: zero polynomial");
    if (p.degree() > 6) throw std::invalid_argument("factor_small: degree above 6");
    Factorization out;
    out.unit = p.leading();
    if (p.degree() == 0) return out;

    // squarefree decomposition by repeated gcd with the derivative
    Poly<Rat> mon = (Rat(1) / p.leading()) * p;
    std::map<std::string, std::pair<Poly<Rat>, unsigned>> acc;
    Poly<Rat> rest = mon;
    while (rest.degree() > 0) {
        Poly<Rat> g = poly_gcd(rest, rest.derivative());
        Poly<Rat> sqfree = rest / g;  // product of distinct irreducible factors of rest
        for (const auto& f : factor_squarefree(sqfree)) {
            auto key = f.str();
            auto it = acc.find(key);
            if (it == acc.end()) acc.emplace(key, std::make_pair(f, 1u));
            else it->second.second += 1;
        }
        rest = g;
    }
    for (auto& [k, v] : acc) out.factors.push_back({v.first, v.second});
    std::sort(out.factors.begin(), out.factors.end(), [](const RatFactor& a, const RatFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.str() < b.factor.str();
    });
    return out;
}

bool is_irreducible(const Poly<Rat>& p) {
    auto f = factor_small(p);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

// --- quadratic surds ---

namespace {
void check_same_field(const QuadSurd& a, const QuadSurd& b) {
    if (a.m != b.m && a.v != 0 && b.v != 0) throw std::invalid_argument("QuadSurd: mixed fields");
}
Int surd_m(const QuadSurd& a, const QuadSurd& b) { return a.v != 0 ? a.m : b.m; }
}  // namespace

QuadSurd operator+(const QuadSurd& a, const QuadSurd& b) {
    check_same_field(a, b);
    return {a.u + b.u, a.v + b.v, surd_m(a, b)};
}
QuadSurd operator-(const QuadSurd& a, const QuadSurd& b) {
    check_same_field(a, b);
    return {a.u - b.u, a.v - b.v, surd_m(a, b)};
}
QuadSurd operator*(const QuadSurd& a, const QuadSurd& b) {
    check_same_field(a, b);
    Int m = surd_m(a, b);
    return {a.u * b.u + Rat(m) * a.v * b.v, a.u * b.v + a.v * b.u, m};
}
QuadSurd operator/(const QuadSurd& a, const QuadSurd& b) {
    check_same_field(a, b);
    Rat n = b.norm();
    if (n == 0) throw std::domain_error("QuadSurd division by zero");
    QuadSurd c = a * b.conj();
    return {c.u / n, c.v / n, surd_m(a, b)};
}
bool operator==(const QuadSurd& a, const QuadSurd& b) {
    return a.u == b.u && a.v == b.v && (a.v == 0 || a.m == b.m);
}

std::optional<QuadSurd> quad_surd_sqrt(const QuadSurd& a) {
    const Int& m = a.m;
    if (a.v == 0) {
        if (auto r = exact_sqrt(a.u)) return QuadSurd{*r, Rat(0), m};
        // sqrt(u) = y*sqrt(m) with y^2 = u/m
        if (m != 1 && a.u != 0) {
            Rat ym = a.u / Rat(m);
            if (auto y = exact_sqrt(ym)) return QuadSurd{Rat(0), *y, m};
        }
        return std::nullopt;
    }
    // (x + y sqrt m)^2 = u + v sqrt m  =>  x^2 + m y^2 = u, 2xy = v
    Rat n = a.norm();
    auto t = exact_sqrt(n);
    if (!t) return std::nullopt;
    for (int sgn = 0; sgn < 2; ++sgn) {
        Rat x2 = (a.u + (sgn ? -*t : *t)) / 2;
        if (auto x = exact_sqrt(x2)) {
            if (*x == 0) continue;
            QuadSurd r{*x, a.v / (Rat(2) * *x), m};
            if (r * r == a) return r;
        }
    }
    return std::nullopt;
}

// --- splitting fields ---

namespace {

// multiply squarefree classes: sf(a*b)
Int sf_mul(const Int& a, const Int& b) { return squarefree_part(Int(a * b)); }

// closure of a set of squarefree integers under products
std::vector<Int> sf_closure(std::set<Int> gens) {
    gens.erase(Int(1));
    std::set<Int> full(gens);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Int> cur(full.begin(), full.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                Int p = sf_mul(cur[i], cur[j]);
                if (p != 1 && full.insert(p).second) grew = true;
            }
    }
    return {full.begin(), full.end()};
}

struct QuarticClass {
    long degree;
    bool polyquadratic;
    std::vector<Int> subfields;  // when polyquadratic
};

// Galois classification of an irreducible quartic via the cubic whose
// roots are the a^2 of factorizations (x^2+ax+b)(x^2-ax+c).
QuarticClass classify_quartic(const Poly<Rat>& f0) {
    // depress: x -> x - c3/4
    Poly<Rat> f = (Rat(1) / f0.leading()) * f0;
    f = f.shift(-f.coeff(3) / 4);
    Rat p = f.coeff(2), q = f.coeff(1), r = f.coeff(0);
    Poly<Rat> zc{{-q * q, p * p - Rat(4) * r, Rat(2) * p, Rat(1)}};
    auto zf = factor_small(zc);
    std::vector<Rat> zrats;
    std::vector<Poly<Rat>> zquads;
    for (const auto& fac : zf.factors) {
        if (fac.factor.degree() == 1) zrats.push_back(-fac.factor.coeff(0));
        else zquads.push_back(fac.factor);
    }
    Rat discf = discriminant(f);
    bool disc_sq = exact_sqrt(discf).has_value();
    if (zrats.size() == 3) {
        // V4: splitting field generated by the sqrt(z_i)
        std::set<Int> gens;
        for (const auto& z : zrats)
            if (z != 0 && !exact_sqrt(z)) gens.insert(squarefree_part(z));
        return {4, true, sf_closure(gens)};
    }
    if (zrats.empty()) return {disc_sq ? 12L : 24L, false, {}};
    // exactly one rational root of the resolvent: C4 or D4; C4 iff f
    // factors into quadratics over Q(sqrt(disc f))
    Int m = squarefree_part(discf);
    auto try_split = [&](const QuadSurd& z) -> bool {
        auto a = quad_surd_sqrt(z);
        if (!a) return false;
        QuadSurd P{p, Rat(0), m}, Q{q, Rat(0), m}, R{r, Rat(0), m};
        if (a->u == 0 && a->v == 0) {
            // biquadratic branch: f = (x^2+b)(x^2+c), b+c = p, bc = r
            QuadSurd disc = P * P - QuadSurd{Rat(4), Rat(0), m} * R;
            return quad_surd_sqrt(disc).has_value();
        }
        QuadSurd b = (P + *a * *a - Q / *a) / QuadSurd{Rat(2), Rat(0), m};
        QuadSurd c = (P + *a * *a + Q / *a) / QuadSurd{Rat(2), Rat(0), m};
        // verify (x^2+ax+b)(x^2-ax+c) == x^4+px^2+qx+r
        return b + c - *a * *a == P && *a * (c - b) == Q && b * c == R;
    };
    bool c4 = false;
    for (const auto& z : zrats)
        if (try_split(QuadSurd{z, Rat(0), m})) c4 = true;
    for (const auto& zq : zquads) {
        Rat d2 = discriminant(zq);
        if (d2 == 0) continue;
        if (squarefree_part(d2) != m) continue;
        auto s = exact_sqrt(d2 / Rat(m * m));
        // root (-b + sqrt(d2))/2 = -b/2 + (s*m/... ) sqrt(m) with d2 = (s*m)^2 * m? not generally; solve directly
        // zq = x^2 + B x + C, roots (-B +- sqrt(d2))/2, sqrt(d2) = w sqrt(m) with w^2 = d2/m
        auto w = exact_sqrt(d2 / Rat(m));
        (void)s;
        if (!w) continue;
        for (int sgn = 0; sgn < 2; ++sgn) {
            QuadSurd z{-zq.coeff(1) / 2, (sgn ? -*w : *w) / 2, m};
            if (try_split(z)) c4 = true;
        }
    }
    return {c4 ? 4L : 8L, false, {}};
}

}  // namespace

std::vector<Int> SplittingDescriptor::generators() const {
    if (!quad_subfields) return {};
    std::vector<Int> sorted(*quad_subfields);
    std::sort(sorted.begin(), sorted.end(), [](const Int& a, const Int& b) {
        Int aa = abs(a), ab = abs(b);
        if (aa != ab) return aa < ab;
        return a < b;
    });
    std::vector<Int> gens;
    std::set<Int> span;
    for (const auto& d : sorted) {
        if (span.count(d)) continue;
        gens.push_back(d);
        auto cl = sf_closure(std::set<Int>(gens.begin(), gens.end()));
        span = std::set<Int>(cl.begin(), cl.end());
        if (static_cast<long>(span.size()) == static_cast<long>(quad_subfields->size())) break;
    }
    return gens;
}

bool SplittingDescriptor::same_field(const SplittingDescriptor& other) const {
    if (is_polyquadratic() != other.is_polyquadratic()) return false;
    if (is_polyquadratic()) return *quad_subfields == *other.quad_subfields;
    return degree == other.degree && divisible_by_three == other.divisible_by_three;
}

SplittingDescriptor splitting_field_descriptor(const Poly<Rat>& p) {
    if (p.degree() < 1 || p.degree() > 4)
        throw std::invalid_argument("splitting_field_descriptor: degree must be 1..4");
    auto fac = factor_small(p);
    std::vector<Poly<Rat>> irr;
    for (const auto& f : fac.factors) irr.push_back(f.factor);

    std::set<Int> quad_gens;
    std::optional<QuarticClass> quartic;
    std::optional<bool> cubic_disc_square;
    for (const auto& f : irr) {
        switch (f.degree()) {
            case 1: break;
            case 2: {
                Rat d = discriminant(f);
                quad_gens.insert(squarefree_part(d));
                break;
            }
            case 3: cubic_disc_square = exact_sqrt(discriminant(f)).has_value(); break;
            case 4: quartic = classify_quartic(f); break;
            default: break;
        }
    }
    SplittingDescriptor out;
    if (quartic) {
        out.degree = quartic->degree;
        out.divisible_by_three = out.degree % 3 == 0;
        if (quartic->polyquadratic) out.quad_subfields = quartic->subfields;
        return out;
    }
    if (cubic_disc_square.has_value()) {
        // degree <= 4 input: a cubic factor leaves room only for linears
        out.degree = *cubic_disc_square ? 3 : 6;
        out.divisible_by_three = true;
        return out;
    }
    auto cl = sf_closure(quad_gens);
    // the closure has 2^rank - 1 elements; field degree is 2^rank
    out.degree = static_cast<long>(cl.size()) + 1;
    out.divisible_by_three = false;
    out.quad_subfields = cl;
    return out;
}

}  // namespace g2split
