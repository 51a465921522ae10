// Laurent polynomials in the Novikov parameter u with rational coefficients.
// u encodes exp(-1/D) for the session-wide denominator D, so every exponential
// exp(q) with D*q integral is the single term u^{-D*q}.
#pragma once

#include <map>

#include "qtoric/numeric.hpp"

namespace qtoric {

struct NovikovScalar {
  Rat coeff;  // rational factor
  Int uexp;   // power of u (may be negative)
};

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Rat& c) {
    if (c != 0) t_[0] = c;
  }
  static UPoly term(const Rat& c, const Int& e) {
    UPoly p;
    if (c != 0) p.t_[e] = c;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_term() const { return t_.size() == 1; }
  const std::map<Int, Rat>& terms() const { return t_; }

  Int min_exp() const;  // pre: nonzero
  Int max_exp() const;  // pre: nonzero
  Rat coeff(const Int& e) const;

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return t_ == o.t_; }

  UPoly shifted(const Int& e) const;  // * u^e
  UPoly scaled(const Rat& c) const;

  std::string str() const;  // e.g. "(1/1)*u^0 + (-3/2)*u^2"

 private:
  std::map<Int, Rat> t_;  // exponent -> coefficient, no zero coefficients
};

// Euclidean division A = Q*B + R in Q[u] (ordinary polynomials, min_exp >= 0).
void upoly_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

// Monic gcd in Q[u]; gcd(0,0) = 0.
UPoly upoly_gcd(UPoly a, UPoly b);

}  // namespace qtoric
