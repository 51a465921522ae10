#include "qtoric/mirror.hpp"

#include <cassert>
#include <sstream>

namespace qtoric {

namespace {

int to_int(const Int& v) {
  assert(v.fits_sint_p());
  return static_cast<int>(v.get_si());
}

Int scale_to_int(const Rat& q, const Int& d) {
  Rat s = q * Rat(d);
  s.canonicalize();
  assert(s.get_den() == 1);
  return s.get_num();
}

}  // namespace

void LaurentPoly::add_term(const IntVec& e, const FieldElement& c) {
  assert(static_cast<int>(e.size()) == nvars_);
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  assert(nvars_ == o.nvars_);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  assert(nvars_ == o.nvars_);
  LaurentPoly r(nvars_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      IntVec e = e1;
      for (int i = 0; i < nvars_; ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << names[i];
      if (e[i] != 1) os << "^" << e[i].get_str();
    }
  }
  return os.str();
}

LaurentPoly mirror_polynomial(const QuantumContext& ctx) {
  const int d = ctx.fan.dim;
  LaurentPoly f(d);
  f.add_term(IntVec(d, 0), FieldElement(Rat(-1)));
  for (int i = 0; i < ctx.fan.nrays(); ++i) {
    Int e = scale_to_int(ctx.phi.values[i], ctx.d_denom);
    f.add_term(ctx.fan.rays[i], FieldElement::u_power(e));
  }
  return f;
}

LaurentPoly log_derivative(const LaurentPoly& f, int j) {
  LaurentPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[j] == 0) continue;
    r.add_term(e, c * FieldElement(Rat(e[j])));
  }
  return r;
}

Polynomial encode_laurent(const LaurentPoly& p) {
  const int d = p.nvars();
  Polynomial r(2 * d);
  for (const auto& [e, c] : p.terms()) {
    Monomial m = Monomial::one(2 * d);
    for (int i = 0; i < d; ++i) {
      if (e[i] > 0)
        m.e[i] = to_int(e[i]);
      else if (e[i] < 0)
        m.e[d + i] = to_int(-e[i]);
    }
    r.add_term(m, c);
  }
  return r;
}

std::vector<Polynomial> torus_relations(int d) {
  std::vector<Polynomial> rels;
  rels.reserve(d);
  for (int i = 0; i < d; ++i) {
    Monomial m = Monomial::one(2 * d);
    m.e[i] = 1;
    m.e[d + i] = 1;
    rels.push_back(Polynomial::term(m, FieldElement::one()) -
                   Polynomial::constant(2 * d, FieldElement::one()));
  }
  return rels;
}

RingPresentation log_jacobian_ideal(const QuantumContext& ctx, const GBOptions& opts) {
  const int d = ctx.fan.dim;
  LaurentPoly f = mirror_polynomial(ctx);
  std::vector<Polynomial> gens;
  for (int j = 0; j < d; ++j) gens.push_back(encode_laurent(log_derivative(f, j)));
  auto rels = torus_relations(d);
  gens.insert(gens.end(), rels.begin(), rels.end());
  auto gb = buchberger(gens, MonomialOrder::grevlex(), opts);
  auto names = default_names(d, "X");
  auto bar = default_names(d, "Xb");
  names.insert(names.end(), bar.begin(), bar.end());
  return make_presentation(std::move(names), std::move(gens), std::move(gb));
}

LaurentPoly mirror_map_image(const QuantumContext& ctx, const Polynomial& p) {
  const int d = ctx.fan.dim;
  const int n = ctx.fan.nrays();
  assert(p.nvars() == n);
  LaurentPoly r(d);
  for (const auto& [m, c] : p.terms()) {
    IntVec e(d, 0);
    Rat deg = 0;
    for (int i = 0; i < n; ++i) {
      if (m.e[i] == 0) continue;
      for (int j = 0; j < d; ++j) e[j] += Int(m.e[i]) * ctx.fan.rays[i][j];
      deg += Rat(m.e[i]) * ctx.phi.values[i];
    }
    r.add_term(e, c * FieldElement::u_power(scale_to_int(deg, ctx.d_denom)));
  }
  return r;
}

MirrorReport mirror_map_check(const QuantumContext& ctx, const GBOptions& opts) {
  const int d = ctx.fan.dim;
  MirrorReport rep;
  LaurentPoly f = mirror_polynomial(ctx);

  rep.relations_vanish = true;
  for (const auto& b : quantum_generators(ctx))
    if (!mirror_map_image(ctx, b).is_zero()) rep.relations_vanish = false;

  rep.divisor_equations_match = true;
  auto lin = linear_ideal(ctx.fan);
  for (int j = 0; j < d; ++j)
    if (!(mirror_map_image(ctx, lin[j]) == log_derivative(f, j)))
      rep.divisor_equations_match = false;

  auto qr = quantum_ring(ctx, opts);
  auto jac = log_jacobian_ideal(ctx, opts);
  rep.dimensions_match = qr.quotient.finite && jac.quotient.finite &&
                         qr.quotient.dimension == jac.quotient.dimension;

  LaurentPoly one(d);
  one.add_term(IntVec(d, 0), FieldElement::one());
  const int n = ctx.fan.nrays();
  Polynomial c1(n);
  for (int i = 0; i < n; ++i) c1 = c1 + Polynomial::variable(n, i);
  rep.anticanonical_matches = mirror_map_image(ctx, c1) == f + one;
  return rep;
}

RingPresentation rf_ring(const QuantumContext& ctx, const GBOptions& opts) {
  const int n = ctx.fan.nrays();
  std::vector<Polynomial> gens;
  for (const auto& g : linear_ideal(ctx.fan)) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    gens.push_back(g.map_variables(perm, n + 1));
  }
  auto inter = z0_intersection_gens(ctx, opts);
  gens.insert(gens.end(), inter.begin(), inter.end());
  Polynomial f0 = -Polynomial::variable(n + 1, n);
  for (int i = 0; i < n; ++i) f0 = f0 + Polynomial::variable(n + 1, i);
  gens.push_back(f0);
  auto gb = ideal_quotient(gens, Polynomial::variable(n + 1, n), MonomialOrder::grevlex(), opts);
  auto names = default_names(n);
  names.push_back("z0");
  auto quotient_gens = gb.gens;
  return make_presentation(std::move(names), std::move(quotient_gens), std::move(gb));
}

bool mirror_limit_check(const QuantumContext& ctx, const GBOptions& opts) {
  const int n = ctx.fan.nrays();
  Polynomial c1(n);
  for (int i = 0; i < n; ++i) c1 = c1 + Polynomial::variable(n, i);

  // z0 := z1 + ... + zn in the z0-part of the quantum ideal
  Polynomial c1_ext = c1;
  {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    c1_ext = c1.map_variables(perm, n + 1);
  }
  std::vector<int> drop(n + 1);
  for (int i = 0; i < n; ++i) drop[i] = i;
  drop[n] = -1;
  std::vector<Polynomial> gens = linear_ideal(ctx.fan);
  for (const auto& g : z0_intersection_gens(ctx, opts))
    gens.push_back(g.substitute(n, c1_ext).map_variables(drop, n));

  auto gb = ideal_quotient(gens, c1, MonomialOrder::weight(ctx.order_weights), opts);
  std::vector<Polynomial> limits;
  limits.reserve(gb.gens.size());
  for (const auto& g : gb.gens) limits.push_back(g.u_limit());
  auto lim_gb = buchberger(limits, MonomialOrder::grevlex(), opts);
  return lim_gb.gens == restriction_image_ring(ctx.fan, opts).gb.gens;
}

}  // namespace qtoric
