// Dense exact linear algebra over Z and Q: determinants, Hermite normal form,
// integer kernels, lattice membership/equality, small rational solves.
#pragma once

#include <optional>
#include <vector>

#include "qtoric/numeric.hpp"

namespace qtoric {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

Int det(IntMat a);  // fraction-free (Bareiss)

struct HnfResult {
  IntMat h;  // row Hermite normal form of the input (pivots positive, reduced above)
  IntMat u;  // unimodular, u * a == h
  int rank = 0;
};

HnfResult hnf(const IntMat& a);

// Z-basis (rows) of { x : x^T a == 0 }.
IntMat integer_kernel(const IntMat& a);

// Do the rows of a and b generate the same sublattice of Z^m?
bool lattice_equal(const IntMat& a, const IntMat& b, int m);

// Is v in the lattice generated by the rows of basis?
bool in_row_lattice(const IntVec& v, const IntMat& basis);

// Solve a * x == b exactly over Q (a square, nonsingular); nullopt if singular.
std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b);

// Primitive generator of a 1-dimensional integer kernel direction: divides by content,
// sign left as computed.
IntVec primitivize(IntVec v);

Int dot(const IntVec& a, const IntVec& b);

}  // namespace qtoric
