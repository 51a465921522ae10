#include "qtoric/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace qtoric {

namespace {

struct Reducer {
  Monomial lm;
  FieldElement lc;
  const Polynomial* g;
};

std::vector<Reducer> make_reducers(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord) {
  std::vector<Reducer> rs;
  rs.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    rs.push_back({g.lead_monomial(ord), g.lead_coeff(ord), &g});
  }
  return rs;
}

Polynomial normal_form_impl(Polynomial p, const std::vector<Reducer>& rs,
                            const MonomialOrder& ord) {
  Polynomial rem(p.nvars());
  while (!p.is_zero()) {
    Monomial m = p.lead_monomial(ord);
    FieldElement c = p.coeff(m);
    const Reducer* hit = nullptr;
    for (const auto& r : rs)  // earliest reducer whose lead divides
      if (r.lm.divides(m)) {
        hit = &r;
        break;
      }
    if (hit) {
      p = p - hit->g->mul_term(m.quotient(hit->lm), c / hit->lc);
    } else {
      rem.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return rem;
}

// normal pair selection key: total degree of the lcm, then the lcm lexicographically
struct PairKey {
  long long deg;
  Monomial lcm;
  int i, j;
  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (lcm != o.lcm) return lcm < o.lcm;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

std::optional<PairKey> make_pair(int i, int j, const std::vector<Monomial>& leads) {
  if (leads[i].coprime(leads[j])) return std::nullopt;  // first Buchberger criterion
  Monomial l = Monomial::lcm(leads[i], leads[j]);
  return PairKey{l.deg(), l, i, j};
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& ord) {
  // drop zero, make monic
  std::vector<Polynomial> gens;
  for (auto& g : basis)
    if (!g.is_zero()) gens.push_back(g.monic(ord));
  // minimalize: sort by lead ascending, keep leads not divisible by a kept lead
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    int c = ord.cmp(a.lead_monomial(ord), b.lead_monomial(ord));
    if (c) return c < 0;
    return Polynomial::compare(a, b) < 0;
  });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    Monomial lm = g.lead_monomial(ord);
    bool divisible = false;
    for (const auto& k : kept)
      if (k.divides(lm)) {
        divisible = true;
        break;
      }
    if (!divisible) {
      kept.push_back(lm);
      minimal.push_back(std::move(g));
    }
  }
  // tail-reduce until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], others, ord);
      assert(!r.is_zero() && "minimal basis element reduced to zero");
      r = r.monic(ord);
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.cmp(a.lead_monomial(ord), b.lead_monomial(ord)) < 0;
  });
  return minimal;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& reducers,
                       const MonomialOrder& ord) {
  return normal_form_impl(p, make_reducers(reducers, ord), ord);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.gens, gb.order);
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb).is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  Monomial lf = f.lead_monomial(ord), lg = g.lead_monomial(ord);
  Monomial l = Monomial::lcm(lf, lg);
  return f.mul_term(l.quotient(lf), f.lead_coeff(ord).inv()) -
         g.mul_term(l.quotient(lg), g.lead_coeff(ord).inv());
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GBOptions& opts) {
  int nvars = 0;
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (nvars == 0) nvars = g.nvars();
    assert(g.nvars() == nvars || g.nvars() == 0);
    if (!g.is_zero()) basis.push_back(g);
  }
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(g.lead_monomial(order));

  std::set<PairKey> pending;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (auto k = make_pair(static_cast<int>(i), static_cast<int>(j), leads)) pending.insert(*k);

  auto append = [&](Polynomial r) {
    r = r.monic(order);
    int idx = static_cast<int>(basis.size());
    leads.push_back(r.lead_monomial(order));
    basis.push_back(std::move(r));
    for (int i = 0; i < idx; ++i)
      if (auto k = make_pair(i, idx, leads)) pending.insert(*k);
  };

  const bool parallel = opts.exec.is_parallel();
#ifndef QTORIC_HAVE_OPENMP
  (void)parallel;
#endif

  while (!pending.empty()) {
#ifdef QTORIC_HAVE_OPENMP
    if (parallel) {
      // one round: reduce every currently pending S-polynomial against the frozen basis
      std::vector<PairKey> round(pending.begin(), pending.end());
      pending.clear();
      std::vector<Polynomial> rem(round.size());
      auto rs = make_reducers(basis, order);
#pragma omp parallel for schedule(dynamic)
      for (long long t = 0; t < static_cast<long long>(round.size()); ++t) {
        Polynomial s = s_polynomial(basis[round[t].i], basis[round[t].j], order);
        rem[t] = normal_form_impl(std::move(s), rs, order);
      }
      // candidates are folded in deterministically (sorted by pair key)
      for (size_t t = 0; t < round.size(); ++t) {
        if (rem[t].is_zero()) continue;
        Polynomial r = normal_form(rem[t], basis, order);
        if (!r.is_zero()) append(std::move(r));
      }
      continue;
    }
#endif
    PairKey k = *pending.begin();
    pending.erase(pending.begin());
    Polynomial s = s_polynomial(basis[k.i], basis[k.j], order);
    Polynomial r = normal_form(s, basis, order);
    if (!r.is_zero()) append(std::move(r));
  }

  GroebnerBasis gb{order, nvars, interreduce(std::move(basis), order)};
  return gb;
}

QuotientInfo quotient_dimension(const GroebnerBasis& gb) {
  QuotientInfo info;
  const int n = gb.nvars;
  std::vector<Monomial> leads;
  for (const auto& g : gb.gens) leads.push_back(g.lead_monomial(gb.order));
  for (const auto& lm : leads)
    if (lm.is_one()) {  // unit ideal
      info.finite = true;
      info.dimension = 0;
      return info;
    }
  std::vector<int> bound(n, -1);
  for (const auto& lm : leads) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i)
      if (lm.e[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = i;
      }
    if (pure && support >= 0)
      if (bound[support] < 0 || lm.e[support] < bound[support]) bound[support] = lm.e[support];
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0) {
      info.finite = false;  // some z_i^k is standard for every k
      return info;
    }
  Int total = 1;
  for (int i = 0; i < n; ++i) total *= bound[i];
  if (total > 10000000)
    throw error(errc::invalid_argument, "standard monomial staircase too large to enumerate");
  info.finite = true;
  Monomial m = Monomial::one(n);
  long long maxdeg = 0;
  std::vector<Monomial> std_mons;
  while (true) {
    bool divisible = false;
    for (const auto& lm : leads)
      if (lm.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) {
      std_mons.push_back(m);
      maxdeg = std::max(maxdeg, m.deg());
    }
    int i = n - 1;
    while (i >= 0 && m.e[i] == bound[i] - 1) m.e[i--] = 0;
    if (i < 0) break;
    ++m.e[i];
  }
  std::sort(std_mons.begin(), std_mons.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a < b;
  });
  info.dimension = static_cast<long>(std_mons.size());
  info.graded_dims.assign(static_cast<size_t>(maxdeg) + 1, Int(0));
  for (const auto& sm : std_mons) info.graded_dims[static_cast<size_t>(sm.deg())] += 1;
  info.std_monomials = std::move(std_mons);
  return info;
}

GroebnerBasis initial_ideal(const std::vector<Polynomial>& gens, const std::vector<Rat>& w,
                            const GBOptions& opts) {
  MonomialOrder ord = MonomialOrder::weight(w);
  GroebnerBasis gb = buchberger(gens, ord, opts);
  std::vector<Polynomial> forms;
  for (const auto& g : gb.gens) {
    Rat top = 0;
    bool first = true;
    auto wt = [&](const Monomial& m) {
      Rat s = 0;
      for (int i = 0; i < m.nvars(); ++i) s += w[i] * m.e[i];
      return s;
    };
    for (const auto& [m, c] : g.terms()) {
      Rat s = wt(m);
      if (first || s > top) top = s;
      first = false;
    }
    Polynomial f(g.nvars());
    for (const auto& [m, c] : g.terms())
      if (wt(m) == top) f.add_term(m, c);
    forms.push_back(std::move(f));
  }
  return buchberger(forms, ord, opts);
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<int>& eliminated, const GBOptions& opts) {
  if (gens.empty()) return {};
  int n = gens.front().nvars();
  MonomialOrder ord = MonomialOrder::elimination(n, eliminated);
  GroebnerBasis gb = buchberger(gens, ord, opts);
  std::vector<bool> elim(n, false);
  for (int i : eliminated) elim[i] = true;
  std::vector<Polynomial> kept;
  for (const auto& g : gb.gens) {
    bool clean = true;
    for (const auto& [m, c] : g.terms()) {
      for (int i = 0; i < n && clean; ++i)
        if (elim[i] && m.e[i] > 0) clean = false;
      if (!clean) break;
    }
    if (clean) kept.push_back(g);
  }
  return kept;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& f,
                                       const MonomialOrder& ord) {
  assert(!f.is_zero());
  Monomial lf = f.lead_monomial(ord);
  FieldElement lc = f.lead_coeff(ord);
  Polynomial q(p.nvars());
  Polynomial r = p;
  while (!r.is_zero()) {
    Monomial m = r.lead_monomial(ord);
    if (!lf.divides(m)) return std::nullopt;
    FieldElement c = r.coeff(m) / lc;
    Monomial mq = m.quotient(lf);
    q.add_term(mq, c);
    r = r - f.mul_term(mq, c);
  }
  return q;
}

GroebnerBasis ideal_quotient(const std::vector<Polynomial>& gens, const Polynomial& f,
                             const MonomialOrder& order, const GBOptions& opts) {
  if (f.is_zero()) throw error(errc::invalid_argument, "ideal quotient by zero");
  assert(!gens.empty());
  const int n = gens.front().nvars();
  std::vector<int> embed(n);
  for (int i = 0; i < n; ++i) embed[i] = i;
  auto ext = [&](const Polynomial& p) { return p.map_variables(embed, n + 1); };
  Polynomial t = Polynomial::variable(n + 1, n);
  Polynomial one_minus_t = Polynomial::constant(n + 1, FieldElement::one()) - t;
  std::vector<Polynomial> j;
  for (const auto& g : gens) j.push_back(t * ext(g));
  j.push_back(one_minus_t * ext(f));
  std::vector<Polynomial> inter = eliminate(j, {n}, opts);  // I intersect <f>, in n+1 vars
  std::vector<int> back(n + 1);
  for (int i = 0; i < n; ++i) back[i] = i;
  back[n] = -1;
  std::vector<Polynomial> quotients;
  for (const auto& h : inter) {
    Polynomial hn = h.map_variables(back, n);
    auto q = divide_exact(hn, f, order);
    assert(q && "element of I cap <f> must be divisible by f");
    quotients.push_back(std::move(*q));
  }
  if (quotients.empty()) quotients.push_back(Polynomial(n));  // zero ideal
  return buchberger(quotients, order, opts);
}

}  // namespace qtoric
