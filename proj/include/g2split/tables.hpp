#ifndef G2SPLIT_TABLES_HPP
#define G2SPLIT_TABLES_HPP

#include <string>
#include <vector>

#include "g2split/genus2.hpp"
#include "g2split/numfield.hpp"
#include "g2split/poly.hpp"
#include "g2split/rational.hpp"

namespace g2split {

// y^2 = x^6 + a x^2 + b realizing Q x Q(sqrt(-d))
struct AbRow {
    Rat a, b;
    Int d;
};
const std::vector<AbRow>& table_ab();

// published curves realizing each algebra built from class-number-1
// fields (matrix algebras, products of fields)
struct AlgebraCurveRow {
    std::string algebra;
    Poly<Rat> f;
};
const std::vector<AlgebraCurveRow>& table3_rows();

// curves with algebra M2(Q(sqrt(-d))), d of class number 2
struct Table4Row {
    Int d;
    Poly<Rat> f;
};
const std::vector<Table4Row>& table4_rows();

// curves with algebra M2(Q(sqrt(-d))), d with class group (2,2); n is
// the degree of the optimal elliptic cover
struct Table5Row {
    Int d;
    int n;
    Poly<Rat> f;
};
const std::vector<Table5Row>& table5_rows();

struct Table5Report {
    Int d;
    int n = 0;
    bool squarefree = false;
    bool ic_rational = false;
    bool moduli_attempted = false;
    bool moduli_match = false;
    bool cm_certified = false;
    std::string note;
    bool ok() const {
        return squarefree && ic_rational && (!moduli_attempted || (moduli_match && cm_certified));
    }
};

// invariant-level check for every row; for d = 84 (the degree-3 cover
// with a published moduli point) additionally matches the Kumar moduli
// point and certifies the CM of the elliptic quotients
Table5Report verify_table5_row(const Int& d);

// Q(g) with g^4 - 28160 g^2 + 65536 = 0 and the published moduli
// coordinates (r, s) of the d = 84 curve
NumberFieldPtr kumar84_field();
KumarPoint kumar84_point();

}  // namespace g2split

#endif
