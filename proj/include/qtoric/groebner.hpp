// Buchberger engine over Q(u): reduced Groebner bases (normal pair selection, coprime
// criterion, deterministic reduction), normal forms, quotient dimensions and standard
// monomials, weight-initial ideals, elimination, and ideal quotients.
//
// The S-polynomial batches can be reduced in parallel (OpenMP); results are the unique
// reduced basis and therefore identical between the serial and parallel paths.
#pragma once

#include <optional>

#include "qtoric/exec.hpp"
#include "qtoric/poly.hpp"

namespace qtoric {

struct GBOptions {
  Exec exec = {};
};

struct GroebnerBasis {
  MonomialOrder order;
  int nvars = 0;
  std::vector<Polynomial> gens;  // reduced: monic, minimal, tails irreducible; sorted by
                                 // lead monomial ascending in `order`
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GBOptions& opts = {});

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& reducers,
                       const MonomialOrder& order);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

struct QuotientInfo {
  bool finite = false;
  Int dimension = 0;                    // valid when finite
  std::vector<Monomial> std_monomials;  // sorted by (degree, exponent vector)
  std::vector<Int> graded_dims;         // counts by total degree
};

QuotientInfo quotient_dimension(const GroebnerBasis& gb);

/// Weight-initial forms: reduced basis of the ideal generated by the top-weight parts of
// a reduced basis under the (w, grevlex) order. w must be non-negative.
GroebnerBasis initial_ideal(const std::vector<Polynomial>& gens, const std::vector<Rat>& w,
                            const GBOptions& opts = {});

// Generators (a reduced basis in the kept variables, embedded in the ambient ring) of
// the elimination ideal: ideal(gens) intersected with the subring avoiding `eliminated`.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<int>& eliminated,
                                  const GBOptions& opts = {});

// (I : f) = { g : f*g in I }, returned as its reduced basis under `order`.
GroebnerBasis ideal_quotient(const std::vector<Polynomial>& gens, const Polynomial& f,
                             const MonomialOrder& order, const GBOptions& opts = {});

// Exact division q = p / f (nullopt if f does not divide p).
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& f,
                                       const MonomialOrder& order);

}  // namespace qtoric
