// The mirror Landau-Ginzburg model: the Laurent superpotential attached to a support
// function, its logarithmic Jacobian ring (presented in doubled variables X, Xb with
// X*Xb = 1), the monomial ring map from the quantum presentation, and the degeneration
// of the deformed anticanonical quotient back to the image-of-restriction ring.
#pragma once

#include <map>

#include "qtoric/rings.hpp"

namespace qtoric {

// Exact Laurent polynomials over the coefficient field, exponents in Z^d.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<IntVec, FieldElement>& terms() const { return t_; }

  void add_term(const IntVec& e, const FieldElement& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<IntVec, FieldElement> t_;
};

// f = -1 + sum_i u^(D phi_i) X^(v_i)
LaurentPoly mirror_polynomial(const QuantumContext& ctx);

// X_j df/dX_j, exact (multiplies each term by its j-th exponent)
LaurentPoly log_derivative(const LaurentPoly& f, int j);

// Encode in 2d polynomial variables X_1..X_d, Xb_1..Xb_d (negative exponents go to Xb).
Polynomial encode_laurent(const LaurentPoly& p);
// The relations X_j * Xb_j - 1.
std::vector<Polynomial> torus_relations(int d);

// C[X, Xb] / (X_j df/dX_j for all j, X_j Xb_j - 1)
RingPresentation log_jacobian_ideal(const QuantumContext& ctx, const GBOptions& opts = {});

// z_i -> u^(D phi_i) X^(v_i) applied termwise.
LaurentPoly mirror_map_image(const QuantumContext& ctx, const Polynomial& p);

struct MirrorReport {
  bool relations_vanish = false;       // quantum binomials map to 0
  bool divisor_equations_match = false;  // linear forms map to the X_j df/dX_j
  bool dimensions_match = false;       // quantum quotient and Jacobian quotient dims agree
  bool anticanonical_matches = false;  // z_1 + ... + z_n maps to f + 1
  bool ok() const {
    return relations_vanish && divisor_equations_match && dimensions_match &&
           anticanonical_matches;
  }
};

MirrorReport mirror_map_check(const QuantumContext& ctx, const GBOptions& opts = {});

// C[z, z0] / ((z0-part of the quantum ideal + linear ideal + <-z0 + z1 + ... + zn>) : z0)
RingPresentation rf_ring(const QuantumContext& ctx, const GBOptions& opts = {});

// Substituting z0 := z1 + ... + zn, saturating by the anticanonical class, and letting
// u -> 0 recovers the image-of-restriction ring.
bool mirror_limit_check(const QuantumContext& ctx, const GBOptions& opts = {});

}  // namespace qtoric
