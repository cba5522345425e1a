#include "g2split/cmdata.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "g2split/bigfloat.hpp"
#include "g2split/quadfields.hpp"

namespace g2split {

namespace {

// j(tau) for tau = (-b + i sqrt(|D|)) / (2a) via the q-expansions of
// E4 and Delta; terms chosen so the tail is below the working precision
BigComplex j_from_form(const QuadForm& f, const Int& D, unsigned bits) {
    BigFloat sD = sqrt(to_bigfloat(Rat(-D)));
    BigFloat two_a = to_bigfloat(Rat(2 * f.a));
    BigFloat x = to_bigfloat(Rat(-f.b)) / two_a;
    BigFloat y = sD / two_a;
    BigComplex q = cis_q(x, y, bits);

    double abs_log_q = 3.14159265358979 * std::sqrt(mpz_get_d(Int(-D).get_mpz_t())) /
                       mpz_get_d(f.a.get_mpz_t());
    long N = static_cast<long>((bits + 48) * 0.6931471805599453 / abs_log_q) + 4;

    // sigma3 sieve
    std::vector<unsigned long long> s3(N + 1, 0);
    for (long d = 1; d <= N; ++d) {
        unsigned long long d3 = 1ull * d * d * d;
        for (long n = d; n <= N; n += d) s3[n] += d3;
    }

    BigComplex one{BigFloat(1), BigFloat(0), bits};
    BigComplex e4 = one;
    BigComplex qn = one;
    std::vector<BigComplex> qpow(N + 1, one);
    for (long n = 1; n <= N; ++n) {
        qn = qn * q;
        qpow[n] = qn;
        Int sn(std::to_string(s3[n]));
        e4 = e4 + BigComplex{to_bigfloat(Rat(Int(240 * sn))), BigFloat(0), bits} * qn;
    }

    BigComplex delta = q;
    for (long n = 1; n <= N; ++n) {
        BigComplex t = one - qpow[n];
        // (1 - q^n)^24
        BigComplex t2 = t * t;
        BigComplex t4 = t2 * t2;
        BigComplex t8 = t4 * t4;
        BigComplex t24 = t8 * t8 * t8;
        delta = delta * t24;
    }
    return e4 * e4 * e4 / delta;
}

struct Rounded {
    Poly<Rat> poly;
    BigFloat worst;
};

Rounded compute_rounded(const Int& disc, unsigned bits) {
    PrecisionGuard guard(bits);
    auto forms = reduced_forms(disc);
    std::vector<BigComplex> coeffs{BigComplex{BigFloat(1), BigFloat(0), bits}};
    for (const auto& f : forms) {
        BigComplex j = j_from_form(f, disc, bits);
        std::vector<BigComplex> nxt(coeffs.size() + 1, BigComplex{BigFloat(0), BigFloat(0), bits});
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            nxt[i + 1] = nxt[i + 1] + coeffs[i];
            nxt[i] = nxt[i] - coeffs[i] * j;
        }
        coeffs = std::move(nxt);
    }
    std::vector<Rat> out(coeffs.size());
    BigFloat worst(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        auto [n, dist] = round_to_int(coeffs[i].re);
        worst = (std::max)(worst, dist);
        worst = (std::max)(worst, BigFloat(abs(coeffs[i].im)));
        out[i] = Rat(n);
    }
    return {Poly<Rat>(std::move(out)), worst};
}

}  // namespace

ClassPolynomial hilbert_class_poly(const Int& disc) {
    if (disc >= 0 || ((disc % 4) + 4) % 4 > 1)
        throw std::invalid_argument("hilbert_class_poly: disc must be negative, 0 or 1 mod 4");
    if (-disc > 100000) throw std::invalid_argument("hilbert_class_poly: |disc| above 10^5");

    double sd = std::sqrt(mpz_get_d(Int(-disc).get_mpz_t()));
    double inv_a_sum = 0;
    for (const auto& f : reduced_forms(disc)) inv_a_sum += 1.0 / mpz_get_d(f.a.get_mpz_t());
    unsigned bits = static_cast<unsigned>(3.1415926535898 * sd * inv_a_sum / 0.6931471805599) + 64;

    const BigFloat quarter("0.25");
    for (int attempt = 0; attempt < 5; ++attempt, bits *= 2) {
        auto first = compute_rounded(disc, bits);
        if (!(first.worst < quarter)) continue;
        auto second = compute_rounded(disc, bits * 2);
        if (!(second.worst < quarter)) continue;
        if (first.poly == second.poly) return {disc, first.poly};
    }
    throw std::runtime_error("hilbert_class_poly: certification failed at precision cap");
}

std::vector<CmCatalogueEntry> cm_j_catalogue(const Int& field_d) {
    auto E = [](long disc, long d, long f, const char* j) {
        return CmCatalogueEntry{Int(disc), Int(d), Int(f), Rat(Int(j))};
    };
    if (field_d == 3)
        return {E(-3, 3, 1, "0"), E(-12, 3, 2, "54000"), E(-27, 3, 3, "-12288000")};
    if (field_d == 4) return {E(-4, 4, 1, "1728"), E(-16, 4, 2, "287496")};
    if (field_d == 7) return {E(-7, 7, 1, "-3375"), E(-28, 7, 2, "16581375")};
    if (field_d == 8) return {E(-8, 8, 1, "8000")};
    if (field_d == 11) return {E(-11, 11, 1, "-32768")};
    if (field_d == 19) return {E(-19, 19, 1, "-884736")};
    if (field_d == 43) return {E(-43, 43, 1, "-884736000")};
    if (field_d == 67) return {E(-67, 67, 1, "-147197952000")};
    if (field_d == 163) return {E(-163, 163, 1, "-262537412640768000")};
    throw std::invalid_argument("cm_j_catalogue: field_d not in the class-number-1 list");
}

bool is_cm_j(const Rat& j, const Int& disc) {
    return hilbert_class_poly(disc).poly(j) == 0;
}

bool is_cm_j(const NFElem& j, const Int& disc) {
    auto H = hilbert_class_poly(disc).poly;
    NFElem acc(0);
    for (auto it = H.coeffs().rbegin(); it != H.coeffs().rend(); ++it) acc = acc * j + NFElem(*it);
    return acc.is_zero();
}

std::vector<ClassPolynomial> load_class_poly_cache(const std::string& path) {
    std::vector<ClassPolynomial> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        Int disc(line.substr(0, tab));
        std::vector<Rat> coeffs;
        std::stringstream ss(line.substr(tab + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.emplace_back(Int(tok));
        out.push_back({disc, Poly<Rat>(std::move(coeffs))});
    }
    return out;
}

void save_class_poly_cache(const std::string& path, const std::vector<ClassPolynomial>& polys) {
    std::ofstream outf(path);
    for (const auto& cp : polys) {
        outf << cp.disc.get_str() << '\t';
        for (long i = 0; i <= cp.poly.degree(); ++i) {
            if (i) outf << ',';
            outf << numerator(cp.poly.coeff(i)).get_str();
        }
        outf << '\n';
    }
}

}  // namespace g2split
