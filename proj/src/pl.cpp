#include "qtoric/pl.hpp"

#include <cassert>

namespace qtoric {

static void check_phi(const Fan& fan, const PLFunction& phi) {
  if (static_cast<int>(phi.values.size()) != fan.nrays())
    throw error(errc::invalid_argument, "pl function needs one value per ray");
}

Rat evaluate(const Fan& fan, const PLFunction& phi, const LatticeVector& v) {
  check_phi(fan, phi);
  if (static_cast<int>(v.size()) != fan.dim)
    throw error(errc::invalid_argument, "point has wrong dimension");
  int ci = locate_cone(fan, v);
  auto coords = cone_coordinates(fan, ci, v);
  assert(coords);
  Rat r = 0;
  for (int k = 0; k < fan.dim; ++k) r += (*coords)[k] * phi.values[fan.max_cones[ci][k]];
  return r;
}

Rat degree(const Fan& fan, const PLFunction& phi, const IntVec& lambda) {
  check_phi(fan, phi);
  if (static_cast<int>(lambda.size()) != fan.nrays())
    throw error(errc::invalid_argument, "lambda has wrong length");
  Rat r = 0;
  for (int i = 0; i < fan.nrays(); ++i) r += Rat(lambda[i]) * phi.values[i];
  return r;
}

static bool convexity(const Fan& fan, const std::vector<PrimitiveCollection>& pcs,
                      const PLFunction& phi, bool strict) {
  check_phi(fan, phi);
  for (const auto& pc : pcs) {
    Rat lhs = 0;
    for (int i : pc.indices) lhs += phi.values[i];
    Rat rhs = 0;  // phi(v_P) via the minimal cone decomposition
    for (size_t k = 0; k < pc.sigma_indices.size(); ++k)
      rhs += Rat(pc.coeffs[k]) * phi.values[pc.sigma_indices[k]];
    if (strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
  }
  return true;
}

bool is_strictly_convex(const Fan& fan, const std::vector<PrimitiveCollection>& pcs,
                        const PLFunction& phi) {
  return convexity(fan, pcs, phi, true);
}

bool is_convex(const Fan& fan, const std::vector<PrimitiveCollection>& pcs,
               const PLFunction& phi) {
  return convexity(fan, pcs, phi, false);
}

bool is_strictly_convex(const Fan& fan, const PLFunction& phi) {
  return convexity(fan, primitive_collections(fan), phi, true);
}

bool is_convex(const Fan& fan, const PLFunction& phi) {
  return convexity(fan, primitive_collections(fan), phi, false);
}

PLFunction anticanonical_pl(const Fan& fan) {
  PLFunction phi;
  phi.values.assign(fan.nrays(), Rat(1));
  return phi;
}

Int chern_divisibility(const Fan& fan) {
  RelationLattice rl = relation_lattice(fan);
  Int g = 0;
  for (const auto& lambda : rl.basis) {
    Int s = 0;
    for (const Int& x : lambda) s += x;
    g = gcd(g, s);
  }
  return g;
}

}  // namespace qtoric
