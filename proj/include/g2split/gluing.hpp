#ifndef G2SPLIT_GLUING_HPP
#define G2SPLIT_GLUING_HPP

#include <vector>

#include "g2split/numfield.hpp"
#include "g2split/poly.hpp"
#include "g2split/rational.hpp"

namespace g2split {

// A 2-torsion identification between y^2 = f(x) and y^2 = g(x): the
// x-coordinates alpha_i of f and beta_i of g, listed so that the gluing
// isomorphism sends the point above alpha_i to the point above beta_i.
struct RootPairing {
    NumberFieldPtr field;  // null when every root is rational
    std::vector<NFElem> alpha, beta;
};

// Roots of two squarefree monic cubics inside a common field (at most
// quadratic over Q), in the canonical order: rational roots first, then
// the conjugate pair — ascending under the first complex embedding on
// the alpha side, descending on the beta side. Pairing is by position.
RootPairing make_pairing(const Poly<Rat>& f, const Poly<Rat>& g);

// true iff pairing by position commutes with the Galois action: rational
// roots match rational roots and conjugation permutes both lists the
// same way
bool check_galois_pairing(const RootPairing& rp);

// Howe--Leprevost--Poonen 2-gluing. Returns the sextic h with
// y^2 = h(x) of genus 2 whose Jacobian is (E x E')/graph. Requires an
// equivariant pairing, distinct j-invariants, and a nondegenerate
// configuration (a2, b2 != 0); the result provably descends to Q, and
// rationality of every coefficient is asserted.
Poly<Rat> glue2(const RootPairing& rp);
Poly<Rat> glue2(const Poly<Rat>& f, const Poly<Rat>& g);

// Reduces coefficient height by x -> ux, y -> vy substitutions (u, v
// rational), which preserve the curve up to Q-isomorphism. The output is
// weighted-Igusa-Clebsch equivalent to the input (asserted).
Poly<Rat> simplify_sextic(const Poly<Rat>& h);

}  // namespace g2split

#endif
