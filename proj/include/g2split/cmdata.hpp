#ifndef G2SPLIT_CMDATA_HPP
#define G2SPLIT_CMDATA_HPP

#include <string>
#include <vector>

#include "g2split/numfield.hpp"
#include "g2split/poly.hpp"
#include "g2split/rational.hpp"

namespace g2split {

struct ClassPolynomial {
    Int disc;       // order discriminant, possibly non-fundamental
    Poly<Rat> poly; // monic, integer coefficients
};

// Hilbert class polynomial of the order of discriminant `disc`, computed
// from the CM values j((-b + sqrt(disc))/(2a)) over reduced forms and
// certified: rounding distance < 0.25 and a re-run at doubled precision
// must reproduce the same integer polynomial.
ClassPolynomial hilbert_class_poly(const Int& disc);

struct CmCatalogueEntry {
    Int order_disc;
    Int field_d;
    Int conductor;
    Rat j;
};

// All class-number-1 orders in Q(sqrt(-field_d)) with their j-invariants,
// for field_d in the class-number-1 list {3,4,7,8,11,19,43,67,163}.
// Hardcoded data; tests re-derive it from hilbert_class_poly.
std::vector<CmCatalogueEntry> cm_j_catalogue(const Int& field_d);

bool is_cm_j(const Rat& j, const Int& disc);
bool is_cm_j(const NFElem& j, const Int& disc);

// Cache file format: one record per line, `disc<TAB>coeff0,coeff1,...`.
std::vector<ClassPolynomial> load_class_poly_cache(const std::string& path);
void save_class_poly_cache(const std::string& path, const std::vector<ClassPolynomial>& polys);

}  // namespace g2split

#endif
