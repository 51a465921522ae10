#include "qtoric/fan.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qtoric {

namespace {

std::string idx_list(const std::vector<int>& v, int base = 1) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + base;
  os << "}";
  return os.str();
}

bool is_primitive(const LatticeVector& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g == 1;
}

// Rows of the inverse of the cone's ray-column matrix. Integer because the cone is
// regular; these are the dual functionals cutting out the cone's facets.
IntMat dual_rows(const Fan& fan, const std::vector<int>& cone) {
  const int d = fan.dim;
  RatMat m(d, RatVec(d));
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) m[r][c] = Rat(fan.rays[cone[c]][r]);
  IntMat out(d, IntVec(d));
  for (int k = 0; k < d; ++k) {
    RatVec e(d, Rat(0));
    e[k] = 1;
    auto col = solve_square(m, e);  // column k of the inverse
    assert(col);
    for (int r = 0; r < d; ++r) {
      assert((*col)[r].get_den() == 1);
      out[r][k] = (*col)[r].get_num();
    }
  }
  // row j of the inverse is the dual functional of generator j; x lies in the cone
  // iff every row pairs >= 0 with x
  return out;
}

// Does the intersection of maximal cones i and j equal the face spanned by their shared
// rays? Work in cone i's coordinates x = V_i t, so cone i becomes the orthant {t >= 0}
// and cone j becomes {M t >= 0} with M = duals[j] V_i (integer: both cones are regular).
// Each shared generator, at position p within cone i, gives e_p in T = {t >= 0, M t >= 0}
// because M e_p = duals[j] v_k >= 0. So the face is always contained in T, and equality
// holds iff every extreme ray of T is supported on shared positions. The extreme rays
// come from a double-description sweep: start from the orthant's rays e_p and insert the
// rows of M one at a time, each ray carrying the bitmask of constraints it satisfies with
// equality.
bool pair_meets_in_common_face(const Fan& fan,
                               const std::vector<std::vector<IntVec>>& dual_coords, int i,
                               int j) {
  const int d = fan.dim;
  assert(2 * d <= 64 && "tight sets are tracked as 64-bit masks");
  const auto& ci = fan.max_cones[i];
  const auto& cj = fan.max_cones[j];
  // column c of M is duals[j] * (generator c of cone i), precomputed per (cone, ray)
  IntMat m(d, IntVec(d));
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) m[r][c] = dual_coords[j][ci[c]][r];

  struct Ray {
    IntVec t;
    uint64_t tight;
  };
  std::vector<Ray> rays;
  rays.reserve(d);
  for (int p = 0; p < d; ++p) {
    IntVec e(d, 0);
    e[p] = 1;
    uint64_t tight = 0;
    for (int q = 0; q < d; ++q)
      if (q != p) tight |= 1ull << q;
    rays.push_back({std::move(e), tight});
  }
  for (int k = 0; k < d; ++k) {
    const uint64_t newbit = 1ull << (d + k);
    std::vector<Int> s(rays.size());
    for (size_t r = 0; r < rays.size(); ++r) s[r] = dot(m[k], rays[r].t);
    std::vector<Ray> next;
    for (size_t r = 0; r < rays.size(); ++r) {
      if (s[r] > 0) {
        next.push_back(rays[r]);
      } else if (s[r] == 0) {
        next.push_back(rays[r]);
        next.back().tight |= newbit;
      }
    }
    for (size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0) continue;
        // combinatorial adjacency: the pair spans an edge iff no third extreme ray is
        // tight on every constraint the pair is jointly tight on
        const uint64_t common = rays[p].tight & rays[q].tight;
        if (std::popcount(common) < d - 2) continue;
        bool adjacent = true;
        for (size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != q && (rays[o].tight & common) == common) adjacent = false;
        if (!adjacent) continue;
        Ray w;
        w.t.assign(d, 0);
        for (int c = 0; c < d; ++c) w.t[c] = s[p] * rays[q].t[c] - s[q] * rays[p].t[c];
        w.t = primitivize(w.t);
        // a positive combination is tight exactly where both parents are
        w.tight = common | newbit;
        next.push_back(std::move(w));
      }
    }
    rays = std::move(next);
  }

  std::vector<char> shared(d, 0);
  for (int p = 0; p < d; ++p)
    shared[p] = std::binary_search(cj.begin(), cj.end(), ci[p]) ? 1 : 0;
  for (const Ray& r : rays)
    for (int p = 0; p < d; ++p)
      if (!shared[p] && r.t[p] != 0) return false;
  return true;
}

}  // namespace

std::optional<RatVec> cone_coordinates(const Fan& fan, int cone_index, const LatticeVector& v) {
  const int d = fan.dim;
  const auto& cone = fan.max_cones[cone_index];
  RatMat m(d, RatVec(d));
  RatVec b(d);
  for (int r = 0; r < d; ++r) {
    b[r] = Rat(v[r]);
    for (int c = 0; c < d; ++c) m[r][c] = Rat(fan.rays[cone[c]][r]);
  }
  auto x = solve_square(m, b);
  if (!x) return std::nullopt;
  for (const Rat& q : *x)
    if (q < 0) return std::nullopt;
  return x;
}

Fan make_fan(int dim, std::vector<LatticeVector> rays, std::vector<std::vector<int>> max_cones,
             const Exec& exec) {
  if (dim < 1) throw error(errc::invalid_argument, "dim must be >= 1");
  const int n = static_cast<int>(rays.size());
  if (n < dim + 1)
    throw error(errc::not_complete, "a complete fan needs at least dim+1 rays");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rays[i].size()) != dim)
      throw error(errc::invalid_argument, "ray " + std::to_string(i + 1) + " has wrong length");
    if (!is_primitive(rays[i]))
      throw error(errc::non_primitive_ray, "ray " + std::to_string(i + 1) + " is not primitive");
  }
  {
    std::set<LatticeVector> seen;
    for (int i = 0; i < n; ++i)
      if (!seen.insert(rays[i]).second)
        throw error(errc::not_a_fan, "duplicate ray " + std::to_string(i + 1));
  }

  std::set<std::vector<int>> cone_sets;
  std::vector<bool> used(n, false);
  for (auto& cone : max_cones) {
    if (static_cast<int>(cone.size()) != dim)
      throw error(errc::invalid_argument, "maximal cone " + idx_list(cone) + " must have dim rays");
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw error(errc::invalid_argument, "maximal cone " + idx_list(cone) + " repeats a ray");
    for (int i : cone) {
      if (i < 0 || i >= n)
        throw error(errc::invalid_argument, "cone index out of range in " + idx_list(cone));
      used[i] = true;
    }
    IntMat m(dim, IntVec(dim));
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r) m[r][c] = rays[cone[c]][r];
    Int dt = det(m);
    if (dt != 1 && dt != -1)
      throw error(errc::non_regular_cone,
                  "cone " + idx_list(cone) + " has determinant " + dt.get_str());
    if (!cone_sets.insert(cone).second)
      throw error(errc::not_a_fan, "duplicate maximal cone " + idx_list(cone));
  }
  if (max_cones.empty()) throw error(errc::not_complete, "no maximal cones");
  for (int i = 0; i < n; ++i)
    if (!used[i])
      throw error(errc::not_a_fan, "ray " + std::to_string(i + 1) + " is not used by any cone");

  Fan fan;
  fan.dim = dim;
  fan.rays = std::move(rays);
  fan.max_cones = std::move(max_cones);

  // Pairwise fan property: the intersection of two maximal cones is the cone spanned by
  // their common rays.
  const int s = fan.ncones();
  std::vector<IntMat> duals(s);
  for (int i = 0; i < s; ++i) duals[i] = dual_rows(fan, fan.max_cones[i]);
  // dual_coords[j][k] = duals[j] * ray k, shared across all pairs involving cone j
  std::vector<std::vector<IntVec>> dual_coords(s, std::vector<IntVec>(n, IntVec(dim)));
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < n; ++k)
      for (int r = 0; r < dim; ++r) dual_coords[j][k][r] = dot(duals[j][r], fan.rays[k]);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) pairs.emplace_back(i, j);
  std::vector<char> violation(pairs.size(), 0);
#ifdef _OPENMP
  if (exec.is_parallel()) {
#pragma omp parallel for schedule(dynamic)
    for (long long pi = 0; pi < static_cast<long long>(pairs.size()); ++pi) {
      auto [i, j] = pairs[pi];
      if (!pair_meets_in_common_face(fan, dual_coords, i, j)) violation[pi] = 1;
    }
  } else
#endif
  {
    (void)exec;
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
      auto [i, j] = pairs[pi];
      if (!pair_meets_in_common_face(fan, dual_coords, i, j)) violation[pi] = 1;
    }
  }
  for (size_t pi = 0; pi < pairs.size(); ++pi)
    if (violation[pi])
      throw error(errc::not_a_fan, "cones " + idx_list(fan.max_cones[pairs[pi].first]) + " and " +
                                       idx_list(fan.max_cones[pairs[pi].second]) +
                                       " do not meet in a common face");

  // Completeness: every facet lies in exactly two maximal cones, and the facet-adjacency
  // graph is connected.
  std::map<std::vector<int>, std::vector<int>> facets;
  for (int ci = 0; ci < s; ++ci) {
    const auto& cone = fan.max_cones[ci];
    for (int drop = 0; drop < fan.dim; ++drop) {
      std::vector<int> f;
      for (int k = 0; k < fan.dim; ++k)
        if (k != drop) f.push_back(cone[k]);
      facets[f].push_back(ci);
    }
  }
  std::vector<int> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [f, owners] : facets) {
    if (owners.size() != 2)
      throw error(errc::not_complete, "facet " + idx_list(f) + " lies in " +
                                          std::to_string(owners.size()) +
                                          " maximal cones (expected 2)");
    parent[find(owners[0])] = find(owners[1]);
  }
  for (int ci = 1; ci < s; ++ci)
    if (find(ci) != find(0))
      throw error(errc::not_complete, "support is not connected through facets");

  return fan;
}

int locate_cone(const Fan& fan, const LatticeVector& v) {
  if (static_cast<int>(v.size()) != fan.dim)
    throw error(errc::invalid_argument, "point has wrong dimension");
  for (int i = 0; i < fan.ncones(); ++i)
    if (cone_coordinates(fan, i, v)) return i;
  throw error(errc::invalid_argument, "point not contained in any maximal cone");
}

std::pair<std::vector<int>, std::vector<Int>> minimal_cone_decomposition(
    const Fan& fan, const LatticeVector& v) {
  if (static_cast<int>(v.size()) != fan.dim)
    throw error(errc::invalid_argument, "point has wrong dimension");
  if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) return {{}, {}};
  int ci = locate_cone(fan, v);
  auto coords = cone_coordinates(fan, ci, v);
  assert(coords);
  std::vector<int> idx;
  std::vector<Int> coeff;
  for (int k = 0; k < fan.dim; ++k) {
    const Rat& q = (*coords)[k];
    if (q == 0) continue;
    assert(q.get_den() == 1 && "regular cones give integral decompositions");
    idx.push_back(fan.max_cones[ci][k]);
    coeff.push_back(q.get_num());
  }
  // generators of a maximal cone are sorted, so idx/coeff are already index-sorted
  return {idx, coeff};
}

LatticeVector PrimitiveCollection::v_p(const Fan& fan) const {
  LatticeVector v(fan.dim, 0);
  for (int i : indices)
    for (int r = 0; r < fan.dim; ++r) v[r] += fan.rays[i][r];
  return v;
}

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan) {
  const int n = fan.nrays();
  std::vector<unsigned long long> cone_masks;
  assert(n < 63);
  for (const auto& cone : fan.max_cones) {
    unsigned long long m = 0;
    for (int i : cone) m |= 1ull << i;
    cone_masks.push_back(m);
  }
  auto is_face = [&](unsigned long long s) {
    for (unsigned long long cm : cone_masks)
      if ((s & cm) == s) return true;
    return false;
  };
  std::vector<std::vector<int>> found;
  // minimal non-faces have size at most dim+1 (all their facets are faces)
  for (int k = 2; k <= fan.dim + 1 && k <= n; ++k) {
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      unsigned long long s = 0;
      for (int i : comb) s |= 1ull << i;
      if (!is_face(s)) {
        bool minimal = true;
        for (int i : comb)
          if (!is_face(s & ~(1ull << i))) {
            minimal = false;
            break;
          }
        if (minimal) found.push_back(comb);
      }
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<PrimitiveCollection> out;
  for (auto& p : found) {
    PrimitiveCollection pc;
    pc.indices = p;
    LatticeVector v(fan.dim, 0);
    for (int i : p)
      for (int r = 0; r < fan.dim; ++r) v[r] += fan.rays[i][r];
    auto [idx, coeff] = minimal_cone_decomposition(fan, v);
    pc.sigma_indices = std::move(idx);
    pc.coeffs = std::move(coeff);
    out.push_back(std::move(pc));
  }
  return out;
}

RelationLattice relation_lattice(const Fan& fan) {
  IntMat v(fan.nrays(), IntVec(fan.dim));
  for (int i = 0; i < fan.nrays(); ++i) v[i] = fan.rays[i];
  IntMat kern = integer_kernel(v);
  HnfResult canon = hnf(kern);
  RelationLattice out;
  for (int i = 0; i < canon.rank; ++i) out.basis.push_back(canon.h[i]);
  return out;
}

Int virtual_dimension(const Fan& fan, const IntVec& lambda) {
  if (static_cast<int>(lambda.size()) != fan.nrays())
    throw error(errc::invalid_argument, "lambda has wrong length");
  Int total = 0;
  for (const Int& x : lambda) {
    if (x < 0) throw error(errc::negative_component, "lambda has a negative component");
    total += x;
  }
  LatticeVector sum(fan.dim, 0);
  for (int i = 0; i < fan.nrays(); ++i)
    for (int r = 0; r < fan.dim; ++r) sum[r] += lambda[i] * fan.rays[i][r];
  for (const Int& x : sum)
    if (x != 0) throw error(errc::not_a_relation, "sum lambda_i v_i != 0");
  return Int(fan.dim) + total;
}

}  // namespace qtoric
