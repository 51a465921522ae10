#include "qtoric/rings.hpp"

#include <algorithm>
#include <cassert>

#include "qtoric/polytope.hpp"

namespace qtoric {

namespace {

int to_int(const Int& v) {
  assert(v.fits_sint_p());
  return static_cast<int>(v.get_si());
}

// exact integer D * q
Int scale_to_int(const Rat& q, const Int& d) {
  Rat s = q * Rat(d);
  s.canonicalize();
  assert(s.get_den() == 1);
  return s.get_num();
}

bool same_gens(const GroebnerBasis& a, const GroebnerBasis& b) {
  return a.gens == b.gens;
}

std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// embed a polynomial in n variables into n + extra variables (same indices)
Polynomial widen(const Polynomial& p, int extra) {
  std::vector<int> perm(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) perm[i] = i;
  return p.map_variables(perm, p.nvars() + extra);
}

std::vector<Polynomial> widen_all(const std::vector<Polynomial>& ps, int extra) {
  std::vector<Polynomial> r;
  r.reserve(ps.size());
  for (const auto& p : ps) r.push_back(widen(p, extra));
  return r;
}

Polynomial first_chern(int nvars, int nrays) {
  Polynomial c(nvars);
  for (int i = 0; i < nrays; ++i) c = c + Polynomial::variable(nvars, i);
  return c;
}

}  // namespace

RingPresentation make_presentation(std::vector<std::string> variables,
                                   std::vector<Polynomial> ideal_gens, GroebnerBasis gb) {
  RingPresentation p;
  p.variables = std::move(variables);
  p.ideal_gens = std::move(ideal_gens);
  p.quotient = quotient_dimension(gb);
  p.gb = std::move(gb);
  return p;
}

QuantumContext make_quantum_context(Fan fan, PLFunction phi) {
  if (static_cast<int>(phi.values.size()) != fan.nrays())
    throw error(errc::invalid_argument, "support function needs one value per ray");
  QuantumContext ctx;
  ctx.d_denom = 1;
  for (const Rat& v : phi.values) ctx.d_denom = lcm(ctx.d_denom, Int(v.get_den()));
  ctx.collections = primitive_collections(fan);
  ctx.relations = relation_lattice(fan);

  bool nonneg = true;
  for (const Rat& v : phi.values)
    if (v < 0) nonneg = false;
  if (nonneg) {
    ctx.order_weights = phi.values;
  } else {
    // Shift by the global linear function <., w> for a rational w with phi + <., w> >= 0
    // on all rays, i.e. w in the polytope of phi. Term comparisons of binomials supported
    // on relations are unchanged.
    auto sys = polytope_inequalities(polytope_delta(fan, phi));
    auto w = fm_feasible_point(sys, fan.dim);
    if (!w)
      throw error(errc::non_global_weight_order,
                  "support function admits no non-negative shift; its polytope is empty");
    ctx.order_weights.resize(fan.nrays());
    for (int i = 0; i < fan.nrays(); ++i) {
      Rat s = phi.values[i];
      for (int j = 0; j < fan.dim; ++j) s += Rat(fan.rays[i][j]) * (*w)[j];
      s.canonicalize();
      assert(s >= 0);
      ctx.order_weights[i] = s;
    }
  }
  ctx.fan = std::move(fan);
  ctx.phi = std::move(phi);
  return ctx;
}

std::vector<Polynomial> linear_ideal(const Fan& fan) {
  const int n = fan.nrays();
  std::vector<Polynomial> gens;
  gens.reserve(fan.dim);
  for (int j = 0; j < fan.dim; ++j) {
    Polynomial g(n);
    for (int i = 0; i < n; ++i) {
      if (fan.rays[i][j] == 0) continue;
      Monomial m = Monomial::one(n);
      m.e[i] = 1;
      g.add_term(m, FieldElement(Rat(fan.rays[i][j])));
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<Polynomial> stanley_reisner_ideal(const Fan& fan) {
  const int n = fan.nrays();
  std::vector<Polynomial> gens;
  for (const auto& pc : primitive_collections(fan)) {
    Monomial m = Monomial::one(n);
    for (int i : pc.indices) m.e[i] = 1;
    gens.push_back(Polynomial::term(m, FieldElement::one()));
  }
  return gens;
}

NovikovScalar novikov_factor(const QuantumContext& ctx, const PrimitiveCollection& pc) {
  Rat e = 0;
  for (int i : pc.indices) e += ctx.phi.values[i];
  for (size_t s = 0; s < pc.sigma_indices.size(); ++s)
    e -= Rat(pc.coeffs[s]) * ctx.phi.values[pc.sigma_indices[s]];
  return NovikovScalar{Rat(1), scale_to_int(e, ctx.d_denom)};
}

std::vector<Polynomial> quantum_generators(const QuantumContext& ctx) {
  const int n = ctx.fan.nrays();
  std::vector<Polynomial> gens;
  gens.reserve(ctx.collections.size());
  for (const auto& pc : ctx.collections) {
    Monomial head = Monomial::one(n);
    for (int i : pc.indices) head.e[i] = 1;
    Monomial tail = Monomial::one(n);
    for (size_t s = 0; s < pc.sigma_indices.size(); ++s)
      tail.e[pc.sigma_indices[s]] = to_int(pc.coeffs[s]);
    FieldElement e = FieldElement::from_novikov(novikov_factor(ctx, pc));
    gens.push_back(Polynomial::term(head, FieldElement::one()) - Polynomial::term(tail, e));
  }
  return gens;
}

RingPresentation ordinary_ring(const Fan& fan, const GBOptions& opts) {
  auto gens = concat(linear_ideal(fan), stanley_reisner_ideal(fan));
  auto gb = buchberger(gens, MonomialOrder::grevlex(), opts);
  return make_presentation(default_names(fan.nrays()), std::move(gens), std::move(gb));
}

RingPresentation quantum_ring(const QuantumContext& ctx, const GBOptions& opts) {
  auto gens = concat(linear_ideal(ctx.fan), quantum_generators(ctx));
  auto gb = buchberger(gens, MonomialOrder::weight(ctx.order_weights), opts);
  return make_presentation(default_names(ctx.fan.nrays()), std::move(gens), std::move(gb));
}

LimitReport limit_check(const QuantumContext& ctx, const GBOptions& opts) {
  if (!is_strictly_convex(ctx.fan, ctx.collections, ctx.phi))
    throw error(errc::not_in_kahler_cone, "support function is not strictly convex");
  LimitReport rep;

  auto forms = initial_ideal(quantum_generators(ctx), ctx.order_weights, opts);
  auto sr = buchberger(stanley_reisner_ideal(ctx.fan), MonomialOrder::weight(ctx.order_weights),
                       opts);
  rep.initial_matches_sr = same_gens(forms, sr);

  auto qgb = quantum_ring(ctx, opts).gb;
  std::vector<Polynomial> limits;
  limits.reserve(qgb.gens.size());
  for (const auto& g : qgb.gens) limits.push_back(g.u_limit());
  auto lim_gb = buchberger(limits, MonomialOrder::grevlex(), opts);
  rep.limit_matches_ordinary = same_gens(lim_gb, ordinary_ring(ctx.fan, opts).gb);
  return rep;
}

GradingReport zr_grading_check(const QuantumContext& ctx) {
  GradingReport rep;
  rep.r = chern_divisibility(ctx.fan);
  rep.homogeneous = true;
  for (const auto& pc : ctx.collections) {
    Int diff = Int(pc.indices.size());
    for (const Int& c : pc.coeffs) diff -= c;
    bool ok = rep.r == 0 ? diff == 0 : diff % rep.r == 0;
    if (!ok) rep.homogeneous = false;
  }
  return rep;
}

std::vector<Polynomial> homogenized_quantum_generators(const QuantumContext& ctx, Z0Mode mode) {
  const int n = ctx.fan.nrays();
  const int nv = mode == Z0Mode::laurent ? n + 2 : n + 1;  // z0 at n, inverse t at n+1
  std::vector<Polynomial> gens;
  gens.reserve(ctx.collections.size());
  for (const auto& pc : ctx.collections) {
    Int h = Int(pc.indices.size());
    for (const Int& c : pc.coeffs) h -= c;
    Monomial head = Monomial::one(nv);
    for (int i : pc.indices) head.e[i] = 1;
    Monomial tail = Monomial::one(nv);
    for (size_t s = 0; s < pc.sigma_indices.size(); ++s)
      tail.e[pc.sigma_indices[s]] = to_int(pc.coeffs[s]);
    if (h >= 0) {
      tail.e[n] = to_int(h);
    } else if (mode == Z0Mode::laurent) {
      tail.e[n + 1] = to_int(-h);
    } else {
      throw error(errc::negative_homogenization_exponent,
                  "anticanonical degree of a primitive collection is negative");
    }
    FieldElement e = FieldElement::from_novikov(novikov_factor(ctx, pc));
    gens.push_back(Polynomial::term(head, FieldElement::one()) - Polynomial::term(tail, e));
  }
  return gens;
}

std::vector<Polynomial> z0_intersection_gens(const QuantumContext& ctx, const GBOptions& opts) {
  const int n = ctx.fan.nrays();
  auto gens = homogenized_quantum_generators(ctx, Z0Mode::laurent);
  Monomial rel = Monomial::one(n + 2);
  rel.e[n] = 1;
  rel.e[n + 1] = 1;
  gens.push_back(Polynomial::term(rel, FieldElement::one()) -
                 Polynomial::constant(n + 2, FieldElement::one()));
  auto kept = eliminate(gens, {n + 1}, opts);
  std::vector<int> perm(n + 2);
  for (int i = 0; i <= n; ++i) perm[i] = i;
  perm[n + 1] = -1;
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& g : kept) out.push_back(g.map_variables(perm, n + 1));
  return out;
}

RingPresentation quantum_ring_z0_polynomial(const QuantumContext& ctx, const GBOptions& opts) {
  if (!is_convex(ctx.fan, ctx.collections, anticanonical_pl(ctx.fan)))
    throw error(errc::not_convex_anticanonical,
                "anticanonical support function is not convex");
  const int n = ctx.fan.nrays();
  auto gens = concat(widen_all(linear_ideal(ctx.fan), 1), z0_intersection_gens(ctx, opts));
  auto gb = buchberger(gens, MonomialOrder::grevlex(), opts);
  auto names = default_names(n);
  names.push_back("z0");
  return make_presentation(std::move(names), std::move(gens), std::move(gb));
}

RingPresentation quantum_ring_z0_laurent(const QuantumContext& ctx, const GBOptions& opts) {
  const int n = ctx.fan.nrays();
  auto gens = widen_all(linear_ideal(ctx.fan), 2);
  auto hom = homogenized_quantum_generators(ctx, Z0Mode::laurent);
  gens.insert(gens.end(), hom.begin(), hom.end());
  Monomial rel = Monomial::one(n + 2);
  rel.e[n] = 1;
  rel.e[n + 1] = 1;
  gens.push_back(Polynomial::term(rel, FieldElement::one()) -
                 Polynomial::constant(n + 2, FieldElement::one()));
  auto gb = buchberger(gens, MonomialOrder::grevlex(), opts);
  auto names = default_names(n);
  names.push_back("z0");
  names.push_back("t");
  return make_presentation(std::move(names), std::move(gens), std::move(gb));
}

bool z0_specialization_consistent(const QuantumContext& ctx, const GBOptions& opts) {
  const int n = ctx.fan.nrays();
  auto pres = quantum_ring_z0_polynomial(ctx, opts);
  std::vector<int> perm(n + 1);
  for (int i = 0; i < n; ++i) perm[i] = i;
  perm[n] = -1;
  std::vector<Polynomial> specialized;
  specialized.reserve(pres.ideal_gens.size());
  for (const auto& g : pres.ideal_gens) {
    Polynomial s = g.substitute(n, Polynomial::constant(n + 1, FieldElement::one()));
    specialized.push_back(s.map_variables(perm, n));
  }
  auto gb = buchberger(specialized, MonomialOrder::weight(ctx.order_weights), opts);
  return same_gens(gb, quantum_ring(ctx, opts).gb);
}

bool quantum_relation_check(const QuantumContext& ctx, const IntVec& lambda,
                            const GBOptions& opts) {
  virtual_dimension(ctx.fan, lambda);  // validates shape, non-negativity, relation property
  const int n = ctx.fan.nrays();
  Monomial m = Monomial::one(n);
  for (int i = 0; i < n; ++i) m.e[i] = to_int(lambda[i]);
  Int e = scale_to_int(degree(ctx.fan, ctx.phi, lambda), ctx.d_denom);
  Polynomial b = Polynomial::term(m, FieldElement::one()) -
                 Polynomial::constant(n, FieldElement::u_power(e));
  return ideal_member(b, quantum_ring(ctx, opts).gb);
}

bool a_ring_equality_check(const QuantumContext& ctx, int bound, const GBOptions& opts) {
  if (bound < 0) throw error(errc::invalid_argument, "bound must be non-negative");
  const int n = ctx.fan.nrays();
  const int d = ctx.fan.dim;
  std::vector<Polynomial> gens = linear_ideal(ctx.fan);
  IntVec lambda(n, 0);
  while (true) {
    IntVec image(d, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) image[j] += lambda[i] * ctx.fan.rays[i][j];
    bool is_relation = std::all_of(image.begin(), image.end(), [](const Int& x) { return x == 0; });
    bool is_zero = std::all_of(lambda.begin(), lambda.end(), [](const Int& x) { return x == 0; });
    if (is_relation && !is_zero) {
      Monomial m = Monomial::one(n);
      for (int i = 0; i < n; ++i) m.e[i] = to_int(lambda[i]);
      Int e = scale_to_int(degree(ctx.fan, ctx.phi, lambda), ctx.d_denom);
      gens.push_back(Polynomial::term(m, FieldElement::one()) -
                     Polynomial::constant(n, FieldElement::u_power(e)));
    }
    int pos = 0;
    while (pos < n && lambda[pos] == bound) lambda[pos++] = 0;
    if (pos == n) break;
    lambda[pos] += 1;
  }
  auto gb = buchberger(gens, MonomialOrder::weight(ctx.order_weights), opts);
  return same_gens(gb, quantum_ring(ctx, opts).gb);
}

namespace {

// variable index i of the fan -> position of ray i in the sorted ray list
std::vector<int> canonical_positions(const Fan& fan, const std::vector<LatticeVector>& sorted) {
  std::vector<int> perm(fan.nrays());
  for (int i = 0; i < fan.nrays(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), fan.rays[i]);
    assert(it != sorted.end() && *it == fan.rays[i]);
    perm[i] = static_cast<int>(it - sorted.begin());
  }
  return perm;
}

std::vector<LatticeVector> sorted_rays(const Fan& fan) {
  auto rays = fan.rays;
  std::sort(rays.begin(), rays.end());
  return rays;
}

}  // namespace

bool flop_compare(const Fan& a, const Fan& b, const std::vector<Rat>& phi_sorted,
                  const GBOptions& opts) {
  auto sa = sorted_rays(a);
  auto sb = sorted_rays(b);
  if (sa != sb) throw error(errc::ray_set_mismatch, "fans have different ray sets");
  if (static_cast<int>(phi_sorted.size()) != a.nrays())
    throw error(errc::invalid_argument, "support values must match the common ray count");

  auto ideal_of = [&](const Fan& f) {
    auto perm = canonical_positions(f, sa);
    PLFunction phi;
    phi.values.resize(f.nrays());
    for (int i = 0; i < f.nrays(); ++i) phi.values[i] = phi_sorted[perm[i]];
    auto ctx = make_quantum_context(f, phi);
    auto gens = concat(linear_ideal(f), quantum_generators(ctx));
    std::vector<Polynomial> mapped;
    mapped.reserve(gens.size());
    for (const auto& g : gens) mapped.push_back(g.map_variables(perm, f.nrays()));
    return buchberger(mapped, MonomialOrder::grevlex(), opts);
  };
  return same_gens(ideal_of(a), ideal_of(b));
}

bool flop_compare_ordinary(const Fan& a, const Fan& b, const GBOptions& opts) {
  auto sa = sorted_rays(a);
  auto sb = sorted_rays(b);
  if (sa != sb) throw error(errc::ray_set_mismatch, "fans have different ray sets");
  auto ideal_of = [&](const Fan& f) {
    auto perm = canonical_positions(f, sa);
    auto gens = concat(linear_ideal(f), stanley_reisner_ideal(f));
    std::vector<Polynomial> mapped;
    mapped.reserve(gens.size());
    for (const auto& g : gens) mapped.push_back(g.map_variables(perm, f.nrays()));
    return buchberger(mapped, MonomialOrder::grevlex(), opts);
  };
  return same_gens(ideal_of(a), ideal_of(b));
}

RingPresentation restriction_image_ring(const Fan& fan, const GBOptions& opts) {
  const int n = fan.nrays();
  auto gens = concat(linear_ideal(fan), stanley_reisner_ideal(fan));
  auto gb = ideal_quotient(gens, first_chern(n, n), MonomialOrder::grevlex(), opts);
  auto quotient_gens = gb.gens;
  return make_presentation(default_names(n), std::move(quotient_gens), std::move(gb));
}

}  // namespace qtoric
