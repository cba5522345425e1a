#ifndef G2SPLIT_NUMFIELD_HPP
#define G2SPLIT_NUMFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "g2split/bigfloat.hpp"
#include "g2split/poly.hpp"
#include "g2split/rational.hpp"

namespace g2split {

class NFElem;

// Q[x]/(f) for a monic irreducible f. Shared and immutable; elements hold
// a pointer to their parent. Complex embeddings are computed on first use
// at the requested precision and cached.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    static std::shared_ptr<const NumberField> create(Poly<Rat> min_poly, std::string var = "a");

    long degree() const { return min_poly_.degree(); }
    const Poly<Rat>& min_poly() const { return min_poly_; }
    const std::string& var() const { return var_; }

    // roots of the defining polynomial, in a fixed order (cached; re-run
    // when more precision is requested than cached)
    const std::vector<BigComplex>& embeddings(unsigned bits) const;

    NFElem gen() const;
    NFElem element(std::vector<Rat> coeffs) const;
    NFElem from_rat(const Rat& r) const;

  private:
    explicit NumberField(Poly<Rat> f, std::string var)
        : min_poly_(std::move(f)), var_(std::move(var)) {}
    Poly<Rat> min_poly_;
    std::string var_;
    mutable std::vector<BigComplex> emb_;
    mutable unsigned emb_bits_ = 0;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field in the power basis. A null parent means a
// plain rational constant; binary operations adopt the non-null parent,
// which lets Poly<NFElem> construct constants like T(1) generically.
class NFElem {
  public:
    NFElem() : c_{Rat(0)} {}
    NFElem(long v) : c_{Rat(v)} {}                     // NOLINT(google-explicit-constructor)
    NFElem(const Rat& v) : c_{v} {}                    // NOLINT(google-explicit-constructor)
    NFElem(NumberFieldPtr parent, std::vector<Rat> coeffs);

    const NumberFieldPtr& parent() const { return parent_; }
    bool is_rational() const;
    // rational value; throws when the element is not rational
    Rat rat() const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    bool is_zero() const;

    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b);
    NFElem operator-() const;
    friend bool operator==(const NFElem& a, const NFElem& b);
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    NFElem inverse() const;
    // image under the k-th complex embedding of the parent
    BigComplex embed(std::size_t k, unsigned bits) const;

    Poly<Rat> as_poly() const { return Poly<Rat>(c_); }
    std::string str() const;

  private:
    friend class NumberField;
    static const NumberFieldPtr& common_parent(const NFElem& a, const NFElem& b);
    void reduce();
    NumberFieldPtr parent_;  // null: rational constant
    std::vector<Rat> c_;     // power-basis coefficients (size 1 when parentless)
};

// Exact square root in the parent field when one exists. Degree <= 2 is
// decided by surd arithmetic; degrees 3 and 4 by a numeric candidate that
// is then certified exactly (x^2 == a in the field).
std::optional<NFElem> sqrt_in_field(const NFElem& a);
inline bool is_square_in_field(const NFElem& a) { return sqrt_in_field(a).has_value(); }

}  // namespace g2split

#endif
