#include "qtoric/field.hpp"

#include <cassert>
#include <sstream>

namespace qtoric {

FieldElement::FieldElement(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void FieldElement::normalize() {
  if (den_.is_zero()) throw error(errc::invalid_argument, "division by zero in Q(u)");
  if (num_.is_zero()) {
    den_ = UPoly(Rat(1));
    return;
  }
  // shift the denominator to an ordinary polynomial with nonzero constant term
  Int dshift = den_.min_exp();
  if (dshift != 0) {
    den_ = den_.shifted(-dshift);
    num_ = num_.shifted(-dshift);
  }
  // cancel polynomial content: gcd acts on the numerator shifted to valuation 0
  Int v = num_.min_exp();
  UPoly a = num_.shifted(-v);
  UPoly g = upoly_gcd(a, den_);
  if (!(g.is_term() && g.max_exp() == 0)) {
    UPoly q, r;
    upoly_divmod(a, g, q, r);
    assert(r.is_zero());
    a = q;
    upoly_divmod(den_, g, q, r);
    assert(r.is_zero());
    den_ = q;
  }
  // scale the denominator's lowest term to 1
  Rat c = den_.coeff(den_.min_exp());
  assert(den_.min_exp() == 0);
  if (c != 1) {
    den_ = den_.scaled(Rat(1) / c);
    a = a.scaled(Rat(1) / c);
  }
  num_ = a.shifted(v);
}

bool FieldElement::is_one() const {
  return den_ == UPoly(Rat(1)) && num_ == UPoly(Rat(1));
}

FieldElement FieldElement::operator-() const {
  FieldElement r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return FieldElement(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return FieldElement(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) throw error(errc::invalid_argument, "division by zero in Q(u)");
  return FieldElement(num_ * o.den_, den_ * o.num_);
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw error(errc::invalid_argument, "inverting zero in Q(u)");
  return FieldElement(den_, num_);
}

Rat FieldElement::eval0() const {
  if (is_zero()) return Rat(0);
  assert(valuation() >= 0);
  return num_.coeff(0);  // denominator constant term is 1 by canonical form
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
  auto cmp_upoly = [](const UPoly& x, const UPoly& y) {
    auto ix = x.terms().begin(), iy = y.terms().begin();
    for (; ix != x.terms().end() && iy != y.terms().end(); ++ix, ++iy) {
      if (ix->first != iy->first) return ix->first < iy->first ? -1 : 1;
      if (ix->second != iy->second) return ix->second < iy->second ? -1 : 1;
    }
    if (ix != x.terms().end()) return 1;
    if (iy != y.terms().end()) return -1;
    return 0;
  };
  int c = cmp_upoly(a.num_, b.num_);
  if (c) return c;
  return cmp_upoly(a.den_, b.den_);
}

std::string FieldElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool den_one = den_ == UPoly(Rat(1));
  if (den_one && num_.is_term()) {
    Int e = num_.min_exp();
    Rat c = num_.coeff(e);
    std::string cs = rat_to_string(c);
    if (e == 0) return c.get_den() == 1 ? cs : "(" + cs + ")";
    if (c == 1) {
      // pure power of u
    } else if (c == -1) {
      os << "-";
    } else {
      os << (c.get_den() == 1 ? cs : "(" + cs + ")") << "*";
    }
    os << "u";
    if (e != 1) os << "^" << e.get_str();
    return os.str();
  }
  os << "(" << num_.str() << ")";
  if (!den_one) os << "/(" << den_.str() << ")";
  return os.str();
}

}  // namespace qtoric
