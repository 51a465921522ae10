// Piecewise linear functions on a complete regular fan, convexity criteria, and the
// divisibility of the anticanonical degree.
#pragma once

#include "qtoric/fan.hpp"

namespace qtoric {

struct PLFunction {
  std::vector<Rat> values;  // one value per ray
};

// Value at an arbitrary lattice point: express v in the minimal cone containing it and
// extend linearly. Well defined across all containing cones.
Rat evaluate(const Fan& fan, const PLFunction& phi, const LatticeVector& v);

// deg_phi(lambda) = sum lambda_i phi(v_i) for an integer vector indexed by rays.
Rat degree(const Fan& fan, const PLFunction& phi, const IntVec& lambda);

// Strict upper convexity: sum_{i in P} phi(v_i) > phi(v_P) for every primitive
// collection P. The >= relaxation characterizes the closed cone of convex functions.
bool is_strictly_convex(const Fan& fan, const PLFunction& phi);
bool is_convex(const Fan& fan, const PLFunction& phi);

bool is_strictly_convex(const Fan& fan, const std::vector<PrimitiveCollection>& pcs,
                        const PLFunction& phi);
bool is_convex(const Fan& fan, const std::vector<PrimitiveCollection>& pcs,
               const PLFunction& phi);

PLFunction anticanonical_pl(const Fan& fan);  // all values 1

// gcd of |sum lambda_i| over a basis of the relation lattice; 0 if all sums vanish.
Int chern_divisibility(const Fan& fan);

}  // namespace qtoric
