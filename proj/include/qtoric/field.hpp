// The coefficient field Q(u): reduced fractions of u-polynomials. Canonical form:
// denominator is an ordinary polynomial with constant term 1 and no common factor with
// the numerator; the numerator may be a Laurent polynomial (it carries the u-valuation).
#pragma once

#include "qtoric/upoly.hpp"

namespace qtoric {

class FieldElement {
 public:
  FieldElement() : den_(Rat(1)) {}
  explicit FieldElement(const Rat& c) : num_(c), den_(Rat(1)) {}
  FieldElement(UPoly num, UPoly den);
  static FieldElement from_novikov(const NovikovScalar& s) {
    return FieldElement(UPoly::term(s.coeff, s.uexp), UPoly(Rat(1)));
  }
  static FieldElement u_power(const Int& e) {
    return FieldElement(UPoly::term(Rat(1), e), UPoly(Rat(1)));
  }
  static FieldElement one() { return FieldElement(Rat(1)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;  // pre: o nonzero
  FieldElement inv() const;                              // pre: nonzero
  bool operator==(const FieldElement& o) const { return num_ == o.num_ && den_ == o.den_; }

  // u-adic valuation of the element (min_exp of the numerator); pre: nonzero.
  Int valuation() const { return num_.min_exp(); }
  // value at u = 0 for elements of valuation >= 0 (denominator has constant term 1)
  Rat eval0() const;

  // single term c*u^k (denominator 1)?
  bool is_single_term() const { return den_ == UPoly(Rat(1)) && num_.is_term(); }

  // deterministic total order for canonical sorting (not a field order)
  static int compare(const FieldElement& a, const FieldElement& b);

  std::string str() const;

 private:
  void normalize();
  UPoly num_, den_;
};

}  // namespace qtoric
