#include "qtoric/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qtoric {

RationalPolytopeH polytope_delta(const Fan& fan, const PLFunction& phi) {
  if (static_cast<int>(phi.values.size()) != fan.nrays())
    throw error(errc::invalid_argument, "pl function needs one value per ray");
  RationalPolytopeH p;
  p.dim = fan.dim;
  p.normals.assign(fan.rays.begin(), fan.rays.end());
  p.offsets = phi.values;
  return p;
}

DualPolytopeV dual_polytope(const Fan& fan) {
  DualPolytopeV d;
  d.dim = fan.dim;
  d.vertices = fan.rays;
  return d;
}

std::vector<LinIneq> polytope_inequalities(const RationalPolytopeH& p) {
  std::vector<LinIneq> sys;
  for (size_t i = 0; i < p.normals.size(); ++i) {
    LinIneq q;
    q.coeffs.assign(p.normals[i].begin(), p.normals[i].end());
    q.constant = p.offsets[i];
    sys.push_back(std::move(q));
  }
  return sys;
}

namespace {

// positive rescaling to a canonical representative, for deduplication
void normalize_ineq(LinIneq& q) {
  Rat scale = 0;
  for (const Rat& c : q.coeffs)
    if (c != 0) {
      scale = abs(c);
      break;
    }
  if (scale == 0) {
    if (q.constant != 0) scale = abs(q.constant);
  }
  if (scale == 0) return;
  for (Rat& c : q.coeffs) c /= scale;
  q.constant /= scale;
}

bool ineq_less(const LinIneq& a, const LinIneq& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  return a.constant < b.constant;
}

std::vector<LinIneq> dedupe(std::vector<LinIneq> sys) {
  for (auto& q : sys) normalize_ineq(q);
  std::sort(sys.begin(), sys.end(), ineq_less);
  sys.erase(std::unique(sys.begin(), sys.end(),
                        [](const LinIneq& a, const LinIneq& b) {
                          return a.coeffs == b.coeffs && a.constant == b.constant;
                        }),
            sys.end());
  return sys;
}

std::vector<LinIneq> fm_eliminate(const std::vector<LinIneq>& sys, int var) {
  std::vector<LinIneq> out;
  std::vector<const LinIneq*> pos, neg;
  for (const auto& q : sys) {
    if (q.coeffs[var] > 0)
      pos.push_back(&q);
    else if (q.coeffs[var] < 0)
      neg.push_back(&q);
    else
      out.push_back(q);
  }
  for (const LinIneq* p : pos)
    for (const LinIneq* n : neg) {
      LinIneq c;
      const Rat a = p->coeffs[var];   // > 0
      const Rat b = -n->coeffs[var];  // > 0
      c.coeffs.resize(sys.front().coeffs.size());
      for (size_t j = 0; j < c.coeffs.size(); ++j)
        c.coeffs[j] = b * p->coeffs[j] + a * n->coeffs[j];
      c.constant = b * p->constant + a * n->constant;
      assert(c.coeffs[var] == 0);
      out.push_back(std::move(c));
    }
  return dedupe(std::move(out));
}

// interval for `var` from inequalities mentioning only `var` (others must be constant
// rows); returns nullopt on a constant contradiction or empty interval
std::optional<Interval> interval_from(const std::vector<LinIneq>& sys, int var) {
  Interval iv;
  for (const auto& q : sys) {
    const Rat& a = q.coeffs[var];
    if (a == 0) {
      bool pure_const = true;
      for (const Rat& c : q.coeffs) pure_const = pure_const && c == 0;
      if (pure_const && q.constant < 0) return std::nullopt;
      continue;
    }
    Rat bound = -q.constant / a;
    if (a > 0) {
      if (!iv.has_lo || bound > iv.lo) iv.lo = bound, iv.has_lo = true;
    } else {
      if (!iv.has_hi || bound < iv.hi) iv.hi = bound, iv.has_hi = true;
    }
  }
  if (iv.has_lo && iv.has_hi && iv.lo > iv.hi) return std::nullopt;
  return iv;
}

}  // namespace

std::optional<Interval> fm_project(std::vector<LinIneq> sys, int nvars, int var) {
  sys = dedupe(std::move(sys));
  for (int v = 0; v < nvars; ++v) {
    if (v == var) continue;
    if (sys.empty()) break;
    sys = fm_eliminate(sys, v);
  }
  if (sys.empty()) return Interval{};  // whole line
  return interval_from(sys, var);
}

std::optional<RatVec> fm_feasible_point(const std::vector<LinIneq>& sys, int nvars) {
  std::vector<std::vector<LinIneq>> stages;
  stages.push_back(dedupe(sys));
  for (int v = nvars - 1; v >= 1; --v) stages.push_back(fm_eliminate(stages.back(), v));
  // stages[k] mentions variables 0 .. nvars-1-k only
  RatVec x(nvars, Rat(0));
  for (int v = 0; v < nvars; ++v) {
    std::vector<LinIneq> cur = stages[nvars - 1 - v];
    // substitute already chosen x_0 .. x_{v-1}
    for (auto& q : cur) {
      for (int j = 0; j < v; ++j) {
        q.constant += q.coeffs[j] * x[j];
        q.coeffs[j] = 0;
      }
    }
    auto iv = interval_from(cur, v);
    if (!iv) return std::nullopt;
    if (iv->has_lo && iv->has_hi)
      x[v] = (iv->lo + iv->hi) / 2;
    else if (iv->has_lo)
      x[v] = iv->lo;
    else if (iv->has_hi)
      x[v] = iv->hi;
    else
      x[v] = 0;
  }
  return x;
}

std::vector<LatticeVector> lattice_points(const RationalPolytopeH& p, const Exec& exec) {
  const int d = p.dim;
  auto sys = polytope_inequalities(p);
  std::vector<Int> lo(d), hi(d);
  for (int v = 0; v < d; ++v) {
    auto iv = fm_project(sys, d, v);
    if (!iv) return {};  // empty polytope
    if (!iv->has_lo || !iv->has_hi)
      throw error(errc::unbounded, "polytope is unbounded in coordinate " + std::to_string(v + 1));
    lo[v] = ceil_rat(iv->lo);
    hi[v] = floor_rat(iv->hi);
    if (lo[v] > hi[v]) return {};
  }
  Int total = 1;
  for (int v = 0; v < d; ++v) total *= hi[v] - lo[v] + 1;
  if (total > Int("4611686018427387904"))
    throw error(errc::invalid_argument, "lattice point box too large");
  const long long count = total.get_si();

  auto point_at = [&](long long idx) {
    LatticeVector pt(d);
    for (int v = d - 1; v >= 0; --v) {
      const long long width = Int(hi[v] - lo[v] + 1).get_si();
      pt[v] = lo[v] + static_cast<long>(idx % width);
      idx /= width;
    }
    return pt;
  };
  auto inside = [&](const LatticeVector& pt) {
    for (size_t i = 0; i < p.normals.size(); ++i) {
      Rat s = p.offsets[i];
      for (int v = 0; v < d; ++v) s += Rat(p.normals[i][v] * pt[v]);
      if (s < 0) return false;
    }
    return true;
  };

  std::vector<LatticeVector> pts;
#ifdef _OPENMP
  if (exec.is_parallel()) {
    std::vector<std::vector<LatticeVector>> buckets;
#pragma omp parallel
    {
#pragma omp single
      buckets.resize(omp_get_num_threads());
      auto& mine = buckets[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (long long i = 0; i < count; ++i) {
        LatticeVector pt = point_at(i);
        if (inside(pt)) mine.push_back(std::move(pt));
      }
    }
    for (auto& b : buckets)
      for (auto& pt : b) pts.push_back(std::move(pt));
    std::sort(pts.begin(), pts.end());
    return pts;
  }
#endif
  (void)exec;
  for (long long i = 0; i < count; ++i) {
    LatticeVector pt = point_at(i);
    if (inside(pt)) pts.push_back(std::move(pt));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace qtoric
