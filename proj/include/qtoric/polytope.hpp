// Rational polytopes in H-form, exact Fourier-Motzkin elimination, and lattice point
// enumeration (serial reference + OpenMP scan).
#pragma once

#include "qtoric/exec.hpp"
#include "qtoric/pl.hpp"

namespace qtoric {

// { x in R^d : <normals[i], x> + offsets[i] >= 0 }
struct RationalPolytopeH {
  int dim = 0;
  IntMat normals;
  std::vector<Rat> offsets;
};

struct DualPolytopeV {
  int dim = 0;
  std::vector<LatticeVector> vertices;
};

RationalPolytopeH polytope_delta(const Fan& fan, const PLFunction& phi);
DualPolytopeV dual_polytope(const Fan& fan);

// One inequality sum coeffs[j] x_j + constant >= 0 over Q.
struct LinIneq {
  RatVec coeffs;
  Rat constant;
};

struct Interval {
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
};

// Exact interval of feasible values of coordinate `var` (projection of the feasible
// set); nullopt if the system is infeasible.
std::optional<Interval> fm_project(std::vector<LinIneq> sys, int nvars, int var);

// A rational point of the feasible region, or nullopt if empty.
std::optional<RatVec> fm_feasible_point(const std::vector<LinIneq>& sys, int nvars);

std::vector<LinIneq> polytope_inequalities(const RationalPolytopeH& p);

/// All lattice points, sorted lexicographically. Errors: Unbounded if some coordinate
// projection is an infinite interval. Empty polytope gives {}.
std::vector<LatticeVector> lattice_points(const RationalPolytopeH& p, const Exec& exec = {});

}  // namespace qtoric
