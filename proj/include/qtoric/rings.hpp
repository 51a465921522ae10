// Presentations of the ordinary and quantum cohomology rings of the toric manifold of a
// complete regular fan: linear and Stanley-Reisner ideals, quantum binomials from
// primitive collections, weight-order bases, Kaehler limits, Z_r-grading, the z0
// extension, flop comparison, and the image-of-restriction ring.
#pragma once

#include "qtoric/groebner.hpp"
#include "qtoric/pl.hpp"

namespace qtoric {

struct RingPresentation {
  std::vector<std::string> variables;
  std::vector<Polynomial> ideal_gens;
  GroebnerBasis gb;
  QuotientInfo quotient;
};

struct QuantumContext {
  Fan fan;
  PLFunction phi;
  Int d_denom;  // D: lcm of the denominators of the phi values; u = exp(-1/D)
  std::vector<PrimitiveCollection> collections;
  RelationLattice relations;
  std::vector<Rat> order_weights;  // phi values, shifted by a global linear function to
                                   // be >= 0 when needed (the shift changes nothing on
                                   // relation-supported binomials)
};

QuantumContext make_quantum_context(Fan fan, PLFunction phi);

std::vector<Polynomial> linear_ideal(const Fan& fan);
std::vector<Polynomial> stanley_reisner_ideal(const Fan& fan);

// the coefficient exp(phi(v_P) - sum_{i in P} phi(v_i)) as a power of u
NovikovScalar novikov_factor(const QuantumContext& ctx, const PrimitiveCollection& pc);

// One binomial per primitive collection: z^P - E * z^{sigma coefficients}.
std::vector<Polynomial> quantum_generators(const QuantumContext& ctx);

RingPresentation ordinary_ring(const Fan& fan, const GBOptions& opts = {});
RingPresentation quantum_ring(const QuantumContext& ctx, const GBOptions& opts = {});

struct LimitReport {
  bool initial_matches_sr = false;     // weight-initial ideal of the quantum ideal = SR
  bool limit_matches_ordinary = false; // u->0 limit of the full basis = ordinary basis
  bool ok() const { return initial_matches_sr && limit_matches_ordinary; }
};

// Requires phi strictly convex (error NotInKahlerCone).
LimitReport limit_check(const QuantumContext& ctx, const GBOptions& opts = {});

struct GradingReport {
  Int r;  // divisibility of the anticanonical degree on the relation lattice
  bool homogeneous = false;
};

GradingReport zr_grading_check(const QuantumContext& ctx);

enum class Z0Mode { laurent, polynomial };

// Homogenized binomials z^P - E z^c z0^(k - sum c). In polynomial mode a negative
// exponent raises NegativeHomogenizationExponent; in laurent mode it moves to the
// inverse variable t (index n+1; z0 has index n).
std::vector<Polynomial> homogenized_quantum_generators(const QuantumContext& ctx, Z0Mode mode);

// Generators of the polynomial-ring part of the z0 quantum ideal, obtained by
// eliminating the inverse variable; polynomials in n+1 variables (z1..zn, z0).
std::vector<Polynomial> z0_intersection_gens(const QuantumContext& ctx,
                                             const GBOptions& opts = {});

// C[z, z0] modulo linear ideal + z0-quantum ideal; infinite over the z0 line.
// Requires the anticanonical class to be convex (error NotConvexAnticanonical).
RingPresentation quantum_ring_z0_polynomial(const QuantumContext& ctx,
                                            const GBOptions& opts = {});
// The Laurent model: variables z1..zn, z0, t with the relation z0*t = 1.
RingPresentation quantum_ring_z0_laurent(const QuantumContext& ctx, const GBOptions& opts = {});

// Does specializing z0 := 1 in the z0 presentation recover the quantum ring's basis?
bool z0_specialization_consistent(const QuantumContext& ctx, const GBOptions& opts = {});

// Is z^lambda - u^(D deg_phi lambda) in the quantum ideal? lambda must be a non-negative
// relation (errors NegativeComponent, NotARelation).
bool quantum_relation_check(const QuantumContext& ctx, const IntVec& lambda,
                            const GBOptions& opts = {});

// Ideal generated by the non-negative relation binomials with entries <= bound (plus the
// linear ideal) equals the quantum ideal?
bool a_ring_equality_check(const QuantumContext& ctx, int bound, const GBOptions& opts = {});

// The two fans must have equal ray sets; phi is indexed by the lexicographically sorted
// rays. True iff the quantum ideals agree after identifying variables through the sorted
// rays (error RaySetMismatch).
bool flop_compare(const Fan& a, const Fan& b, const std::vector<Rat>& phi_sorted,
                  const GBOptions& opts = {});
// Same comparison for the ordinary ideals (expected to differ for a genuine flop).
bool flop_compare_ordinary(const Fan& a, const Fan& b, const GBOptions& opts = {});

// H* / Ann(c1) presented as C[z] / (I_H : z1+...+zn).
RingPresentation restriction_image_ring(const Fan& fan, const GBOptions& opts = {});

RingPresentation make_presentation(std::vector<std::string> variables,
                                   std::vector<Polynomial> ideal_gens, GroebnerBasis gb);

}  // namespace qtoric
