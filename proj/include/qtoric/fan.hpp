// Complete regular fans in a lattice N = Z^d: validated construction, primitive
// collections (minimal non-faces), minimal cone decompositions, the relation lattice
// R(fan) = ker(Z^n -> N), and point location.
#pragma once

#include <vector>

#include "qtoric/exec.hpp"
#include "qtoric/linalg.hpp"

namespace qtoric {

using LatticeVector = IntVec;

struct Fan {
  int dim = 0;
  std::vector<LatticeVector> rays;          // primitive, pairwise distinct
  std::vector<std::vector<int>> max_cones;  // 0-based ray indices, each sorted, size dim

  int nrays() const { return static_cast<int>(rays.size()); }
  int ncones() const { return static_cast<int>(max_cones.size()); }
};

// Validates: primitive distinct rays, regular (det +-1) maximal cones, pairwise
// intersections are common faces, and completeness (every facet in exactly two maximal
// cones, connected adjacency graph). Throws qtoric::error on failure.
Fan make_fan(int dim, std::vector<LatticeVector> rays, std::vector<std::vector<int>> max_cones,
             const Exec& exec = {});

struct PrimitiveCollection {
  std::vector<int> indices;        // the collection P, sorted ascending
  std::vector<int> sigma_indices;  // generators of the minimal cone containing v_P
  std::vector<Int> coeffs;         // positive integers, parallel to sigma_indices

  LatticeVector v_p(const Fan& fan) const;  // sum of the collection's rays
  bool operator==(const PrimitiveCollection&) const = default;
};

// All minimal non-faces of the fan's underlying simplicial complex, sorted
// lexicographically by index list, each equipped with its minimal cone decomposition.
std::vector<PrimitiveCollection> primitive_collections(const Fan& fan);

// v (in |fan| = R^d, here an integer point) written in the generators of the unique
// minimal cone containing it: returns (sorted ray indices, positive integer coeffs).
// v == 0 gives ({}, {}).
std::pair<std::vector<int>, std::vector<Int>> minimal_cone_decomposition(const Fan& fan,
                                                                         const LatticeVector& v);

// Index of a maximal cone containing v; ties broken by smallest cone index.
int locate_cone(const Fan& fan, const LatticeVector& v);

struct RelationLattice {
  IntMat basis;  // rows: a Z-basis of { lambda in Z^n : sum lambda_i v_i = 0 }, in HNF
};

RelationLattice relation_lattice(const Fan& fan);

// d + sum(lambda_i) for a non-negative relation lambda; errors: NegativeComponent,
// NotARelation.
Int virtual_dimension(const Fan& fan, const IntVec& lambda);

// Coordinates of v in the (column) basis given by the cone's rays; nullopt if v is
// not in the cone. Exact.
std::optional<RatVec> cone_coordinates(const Fan& fan, int cone_index, const LatticeVector& v);

}  // namespace qtoric
