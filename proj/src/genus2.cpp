#include "g2split/genus2.hpp"

namespace g2split {

GenusTwoModel::GenusTwoModel(Poly<Rat> poly) : f(std::move(poly)) {
    if (f.degree() != 5 && f.degree() != 6)
        throw std::invalid_argument("GenusTwoModel: degree must be 5 or 6");
    if (discriminant(f) == 0) throw std::invalid_argument("GenusTwoModel: f is not squarefree");
}

IgusaClebsch<Rat> igusa_clebsch(const Poly<Rat>& f) {
    return igusa_clebsch(GenusTwoModel(f));
}

IgusaClebsch<Rat> igusa_clebsch(const GenusTwoModel& C) {
    std::array<Rat, 7> c;
    for (std::size_t i = 0; i < 7; ++i) c[i] = C.f.coeff(i);
    return igusa_clebsch_coeffs(c);
}

IgusaClebsch<NFElem> lift(const IgusaClebsch<Rat>& u) {
    return {NFElem(u.I2), NFElem(u.I4), NFElem(u.I6), NFElem(u.I10)};
}

KumarPoint::KumarPoint(NFElem r_, NFElem s_) : r(std::move(r_)), s(std::move(s_)) {
    if (r.is_zero()) throw std::invalid_argument("KumarPoint: r must be nonzero (I10 = 2^14 r^3)");
}

namespace {
NFElem npow(const NFElem& a, int e) {
    NFElem out(1);
    for (int i = 0; i < e; ++i) out = out * a;
    return out;
}
}  // namespace

IgusaClebsch<NFElem> kumar_igcl(const KumarPoint& p) {
    const NFElem &r = p.r, &s = p.s;
    IgusaClebsch<NFElem> I;
    I.I2 = NFElem(8) * npow(s, 2) + NFElem(32) * s - NFElem(16);
    I.I4 = NFElem(4) * npow(s, 4) - NFElem(16) * npow(s, 3) - NFElem(192) * r * s +
           NFElem(24) * npow(s, 2) + NFElem(768) * r - NFElem(16) * s + NFElem(4);
    I.I6 = NFElem(8) * npow(s, 6) + NFElem(16) * npow(s, 5) - NFElem(320) * r * npow(s, 3) -
           NFElem(168) * npow(s, 4) + NFElem(1152) * r * npow(s, 2) + NFElem(352) * npow(s, 3) -
           NFElem(2304) * npow(r, 2) + NFElem(6336) * r * s - NFElem(328) * npow(s, 2) -
           NFElem(2560) * r + NFElem(144) * s - NFElem(24);
    I.I10 = NFElem(Rat(Int(1) << 14)) * npow(r, 3);
    return I;
}

JPair kumar_jpair(const KumarPoint& p) {
    const NFElem &r = p.r, &s = p.s;
    NFElem num_sum =
        NFElem(2) * npow(s, 9) - NFElem(17) * npow(s, 8) - NFElem(324) * r * npow(s, 6) +
        NFElem(64) * npow(s, 7) + NFElem(1350) * r * npow(s, 5) - NFElem(140) * npow(s, 6) +
        NFElem(17496) * npow(r, 2) * npow(s, 3) - NFElem(2097) * r * npow(s, 4) +
        NFElem(196) * npow(s, 5) - NFElem(23328) * npow(r, 2) * npow(s, 2) +
        NFElem(1368) * r * npow(s, 3) - NFElem(182) * npow(s, 4) - NFElem(314928) * npow(r, 3) +
        NFElem(9720) * npow(r, 2) * s - NFElem(162) * r * npow(s, 2) + NFElem(112) * npow(s, 3) -
        NFElem(432) * npow(r, 2) - NFElem(198) * r * s - NFElem(44) * npow(s, 2) +
        NFElem(63) * r + NFElem(10) * s - NFElem(1);
    NFElem base = npow(s, 4) - NFElem(4) * npow(s, 3) + NFElem(432) * r * s +
                  NFElem(6) * npow(s, 2) - NFElem(288) * r - NFElem(4) * s + NFElem(1);
    JPair jp;
    jp.sum = num_sum / npow(r, 2);
    jp.prod = npow(base, 3) / npow(r, 3);
    return jp;
}

Poly<NFElem> JPair::quadratic() const {
    return Poly<NFElem>({prod, -sum, NFElem(1)});
}

std::optional<std::pair<NFElem, NFElem>> JPair::split() const {
    NFElem disc = sum * sum - NFElem(4) * prod;
    auto root = sqrt_in_field(disc);
    if (!root) return std::nullopt;
    NFElem half(Rat(1, 2));
    NFElem j1 = (sum + *root) * half;
    NFElem j2 = (sum - *root) * half;
    return std::make_pair(j1, j2);
}

NFElem kumar_surface_residual(const KumarPoint& p) {
    return kumar_surface_residual(p.r, p.s);
}

NFElem kumar_surface_residual(const NFElem& r, const NFElem& s) {
    NFElem cubic = NFElem(54) * npow(s, 3) + NFElem(27) * npow(s, 2) - NFElem(72) * s + NFElem(23);
    NFElem tail = npow(s - NFElem(1), 4) * npow(NFElem(2) * s - NFElem(1), 2);
    return NFElem(11664) * npow(r, 2) - NFElem(8) * cubic * r + tail;
}

}  // namespace g2split
