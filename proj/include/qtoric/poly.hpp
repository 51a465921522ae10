// Sparse multivariate polynomials over Q(u).
#pragma once

#include <map>

#include "qtoric/field.hpp"
#include "qtoric/monomial.hpp"

namespace qtoric {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, FieldElement c);
  static Polynomial variable(int nvars, int i);
  static Polynomial term(Monomial m, FieldElement c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  size_t nterms() const { return t_.size(); }
  const std::map<Monomial, FieldElement>& terms() const { return t_; }
  FieldElement coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const FieldElement& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
  Polynomial scaled(const FieldElement& c) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }

  Monomial lead_monomial(const MonomialOrder& ord) const;  // pre: nonzero
  const FieldElement& lead_coeff(const MonomialOrder& ord) const;
  Polynomial monic(const MonomialOrder& ord) const;

  // smallest u-valuation over all coefficients; pre: nonzero
  Int valuation() const;
  // u -> 0 limit after dividing by u^valuation(): keeps terms whose coefficient has the
  // minimal valuation, evaluated at u=0 (a polynomial with rational coefficients).
  Polynomial u_limit() const;

  // remap variables: new exponent vector e'[perm[i]] = e[i]; perm[i] == -1 drops the
  // variable (its exponent must be zero in every term).
  Polynomial map_variables(const std::vector<int>& perm, int new_nvars) const;
  // substitute variable i by the polynomial sub (in the same ring)
  Polynomial substitute(int var, const Polynomial& sub) const;

  // deterministic total order for canonical sorting of polynomial lists
  static int compare(const Polynomial& a, const Polynomial& b);

  std::string str(const std::vector<std::string>& names, const MonomialOrder& ord) const;

 private:
  int nvars_ = 0;
  std::map<Monomial, FieldElement> t_;  // no zero coefficients
};

std::vector<std::string> default_names(int n, const std::string& stem = "z",
                                       int start_index = 1);

}  // namespace qtoric
