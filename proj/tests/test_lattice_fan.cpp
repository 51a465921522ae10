#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace qt_test;

namespace {

template <typename F>
errc thrown_code(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a qtoric::error");
  return errc::invalid_argument;
}

// oracle: dual functional rows of a regular cone, via rational inversion
IntMat dual_rows_oracle(const Fan& fan, const std::vector<int>& cone) {
  const int d = fan.dim;
  IntMat out(d, IntVec(d));
  RatMat m(d, RatVec(d));
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) m[r][c] = Rat(fan.rays[cone[c]][r]);
  for (int k = 0; k < d; ++k) {
    RatVec e(d, Rat(0));
    e[k] = 1;
    auto col = solve_square(m, e);
    REQUIRE(col.has_value());
    for (int r = 0; r < d; ++r) {
      REQUIRE((*col)[r].get_den() == 1);
      out[r][k] = (*col)[r].get_num();
    }
  }
  return out;
}

// oracle: extreme rays of { x : a x >= 0 } by scanning every (d-1)-subset of rows for a
// one-dimensional kernel; slow but independent of the production sweep
std::set<IntVec> extreme_rays_oracle(const IntMat& a, int d) {
  std::set<IntVec> rays;
  const int m = static_cast<int>(a.size());
  std::vector<int> comb(std::max(d - 1, 0));
  std::iota(comb.begin(), comb.end(), 0);
  auto advance = [&]() -> bool {
    int k = static_cast<int>(comb.size());
    if (k == 0) return false;
    int i = k - 1;
    while (i >= 0 && comb[i] == m - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  if (d < 1 || m < d - 1) return rays;
  while (true) {
    IntMat at(d, IntVec(comb.size()));
    for (size_t s = 0; s < comb.size(); ++s)
      for (int j = 0; j < d; ++j) at[j][s] = a[comb[s]][j];
    IntMat ker = integer_kernel(at);
    if (ker.size() == 1) {
      IntVec w = primitivize(ker[0]);
      for (int sign = 0; sign < 2; ++sign) {
        bool inside = true;
        for (int i = 0; i < m && inside; ++i) inside = dot(a[i], w) >= 0;
        bool nonzero = std::any_of(w.begin(), w.end(), [](const Int& x) { return x != 0; });
        if (inside && nonzero) rays.insert(w);
        for (Int& x : w) x = -x;
      }
    }
    if (!advance()) break;
  }
  return rays;
}

bool pair_is_common_face_oracle(const Fan& fan, int i, int j) {
  IntMat a = dual_rows_oracle(fan, fan.max_cones[i]);
  IntMat b = dual_rows_oracle(fan, fan.max_cones[j]);
  a.insert(a.end(), b.begin(), b.end());
  std::set<IntVec> ext = extreme_rays_oracle(a, fan.dim);
  std::set<IntVec> common;
  for (int k : fan.max_cones[i])
    if (std::binary_search(fan.max_cones[j].begin(), fan.max_cones[j].end(), k))
      common.insert(fan.rays[k]);
  return ext == common;
}

// oracle: minimal non-faces by full subset enumeration (no size cap), face test by
// direct inclusion into some maximal cone
std::vector<std::vector<int>> minimal_non_faces_oracle(const Fan& fan) {
  const int n = fan.nrays();
  auto is_face = [&](const std::vector<int>& s) {
    for (const auto& cone : fan.max_cones)
      if (std::includes(cone.begin(), cone.end(), s.begin(), s.end())) return true;
    return false;
  };
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (is_face(s)) continue;
    bool minimal = true;
    for (size_t k = 0; k < s.size() && minimal; ++k) {
      std::vector<int> sub = s;
      sub.erase(sub.begin() + k);
      if (!is_face(sub)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> collection_indices(const Fan& fan) {
  std::vector<std::vector<int>> out;
  for (const auto& pc : primitive_collections(fan)) out.push_back(pc.indices);
  return out;
}

}  // namespace

TEST_CASE("make_fan rejects malformed input with specific errors") {
  std::vector<LatticeVector> p2 = {{1, 0}, {0, 1}, {-1, -1}};
  std::vector<std::vector<int>> p2c = {{0, 1}, {1, 2}, {0, 2}};

  CHECK(thrown_code([&] { make_fan(0, p2, p2c); }) == errc::invalid_argument);
  CHECK(thrown_code([&] { make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}}); }) == errc::not_complete);
  CHECK(thrown_code([&] { make_fan(2, {{1, 0, 0}, {0, 1}, {-1, -1}}, p2c); }) ==
        errc::invalid_argument);
  CHECK(thrown_code([&] { make_fan(2, {{2, 0}, {0, 1}, {-1, -1}}, p2c); }) ==
        errc::non_primitive_ray);
  CHECK(thrown_code([&] { make_fan(2, {{1, 0}, {1, 0}, {-1, -1}}, p2c); }) == errc::not_a_fan);
  CHECK(thrown_code([&] { make_fan(2, p2, {{0, 1, 2}}); }) == errc::invalid_argument);
  CHECK(thrown_code([&] { make_fan(2, p2, {{1, 1}, {1, 2}, {0, 2}}); }) ==
        errc::invalid_argument);
  CHECK(thrown_code([&] { make_fan(2, p2, {{0, 3}, {1, 2}, {0, 2}}); }) ==
        errc::invalid_argument);
  CHECK(thrown_code([&] {
          make_fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
        }) == errc::non_regular_cone);
  CHECK(thrown_code([&] { make_fan(2, p2, {{0, 1}, {1, 0}, {1, 2}, {0, 2}}); }) ==
        errc::not_a_fan);
  CHECK(thrown_code([&] {
          make_fan(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, p2c);
        }) == errc::not_a_fan);  // unused ray
  // two maximal cones overlapping with no shared ray
  CHECK(thrown_code([&] {
          make_fan(2, {{1, 0}, {0, 1}, {1, 1}, {0, -1}}, {{0, 1}, {2, 3}});
        }) == errc::not_a_fan);
  // overlap along a shared ray: the quadrant contains cone{(0,1),(1,1)}
  CHECK(thrown_code([&] {
          make_fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {1, 2}});
        }) == errc::not_a_fan);
  // missing cone: a facet lies in only one maximal cone
  CHECK(thrown_code([&] { make_fan(2, p2, {{0, 1}, {1, 2}}); }) == errc::not_complete);
  CHECK(thrown_code([&] {
          make_fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                   {{0, 1}, {1, 2}, {2, 3}});
        }) == errc::not_complete);
}

TEST_CASE("fixture fans construct and carry the expected shape") {
  Fan p1 = projective_space(1);
  CHECK(p1.nrays() == 2);
  CHECK(p1.ncones() == 2);
  Fan p3 = projective_space(3);
  CHECK(p3.nrays() == 4);
  CHECK(p3.ncones() == 4);
  Fan pp = product_of_lines(2);
  CHECK(pp.ncones() == 4);
  Fan f1 = hirzebruch(1);
  CHECK(f1.ncones() == 4);
  Fan s1 = flop_fan_1();
  Fan s2 = flop_fan_2();
  CHECK(s1.ncones() == 8);
  CHECK(s2.ncones() == 8);
  CHECK(s1.rays == s2.rays);
  CHECK(product_of_lines(4).ncones() == 16);
}

TEST_CASE("pairwise intersections match the brute-force extreme-ray oracle") {
  for (const Fan& fan : {projective_space(2), projective_space(3), hirzebruch(1),
                         hirzebruch(3), product_of_lines(2), product_of_lines(3),
                         flop_fan_1(), flop_fan_2()}) {
    for (int i = 0; i < fan.ncones(); ++i)
      for (int j = i + 1; j < fan.ncones(); ++j) CHECK(pair_is_common_face_oracle(fan, i, j));
  }
  // and the oracle agrees that the rejected overlap is not a common face
  Fan bad;
  bad.dim = 2;
  bad.rays = {{1, 0}, {0, 1}, {1, 1}, {0, -1}};
  bad.max_cones = {{0, 1}, {2, 3}};
  CHECK(!pair_is_common_face_oracle(bad, 0, 1));
  Fan bad2;
  bad2.dim = 2;
  bad2.rays = {{1, 0}, {0, 1}, {1, 1}};
  bad2.max_cones = {{0, 1}, {1, 2}};
  CHECK(!pair_is_common_face_oracle(bad2, 0, 1));
}

TEST_CASE("primitive collections equal the minimal non-faces of the oracle") {
  for (const Fan& fan : {projective_space(2), projective_space(3), projective_space(4),
                         hirzebruch(1), hirzebruch(3), product_of_lines(2),
                         product_of_lines(3), flop_fan_1(), flop_fan_2()}) {
    CHECK(collection_indices(fan) == minimal_non_faces_oracle(fan));
  }
}

TEST_CASE("known primitive collections") {
  CHECK(collection_indices(projective_space(2)) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(collection_indices(hirzebruch(1)) == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(collection_indices(product_of_lines(2)) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(collection_indices(flop_fan_1()) ==
        std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(collection_indices(flop_fan_2()) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 4}, {2, 3, 5}, {2, 4, 5}});
}

TEST_CASE("collection decompositions are certified minimal-cone expressions") {
  for (const Fan& fan : {projective_space(2), projective_space(4), hirzebruch(1),
                         hirzebruch(3), product_of_lines(3), flop_fan_1(), flop_fan_2()}) {
    for (const auto& pc : primitive_collections(fan)) {
      REQUIRE(pc.sigma_indices.size() == pc.coeffs.size());
      // positive coefficients
      for (const Int& c : pc.coeffs) CHECK(c > 0);
      // sigma is a face of the fan
      bool face = false;
      for (const auto& cone : fan.max_cones)
        face = face || std::includes(cone.begin(), cone.end(), pc.sigma_indices.begin(),
                                     pc.sigma_indices.end());
      CHECK(face);
      // the expression reproduces the ray sum
      LatticeVector sum(fan.dim, 0);
      for (size_t k = 0; k < pc.sigma_indices.size(); ++k)
        for (int r = 0; r < fan.dim; ++r)
          sum[r] += pc.coeffs[k] * fan.rays[pc.sigma_indices[k]][r];
      CHECK(sum == pc.v_p(fan));
      // a collection never decomposes through itself
      std::vector<int> inter;
      std::set_intersection(pc.indices.begin(), pc.indices.end(), pc.sigma_indices.begin(),
                            pc.sigma_indices.end(), std::back_inserter(inter));
      CHECK(inter.empty());
    }
  }
}

TEST_CASE("specific decompositions across the flop") {
  Fan s1 = flop_fan_1(), s2 = flop_fan_2();
  auto [i1, c1] = minimal_cone_decomposition(s1, {1, 1, 0});
  CHECK(i1 == std::vector<int>{0, 1});
  CHECK(c1 == std::vector<Int>{1, 1});
  auto [i2, c2] = minimal_cone_decomposition(s2, {1, 1, 0});
  CHECK(i2 == std::vector<int>{2, 5});
  CHECK(c2 == std::vector<Int>{1, 1});
  // the triple collections of the second fan decompose through single rays
  auto [i3, c3] = minimal_cone_decomposition(s2, {0, 1, 0});
  CHECK(i3 == std::vector<int>{1});
  CHECK(c3 == std::vector<Int>{1});
}

TEST_CASE("minimal_cone_decomposition basics and random points") {
  Fan p2 = projective_space(2);
  auto [iz, cz] = minimal_cone_decomposition(p2, {0, 0});
  CHECK(iz.empty());
  CHECK(cz.empty());
  auto [ir, cr] = minimal_cone_decomposition(p2, {-3, -3});
  CHECK(ir == std::vector<int>{2});
  CHECK(cr == std::vector<Int>{3});
  auto [ii, ci] = minimal_cone_decomposition(p2, {2, 1});
  CHECK(ii == std::vector<int>{0, 1});
  CHECK(ci == std::vector<Int>{2, 1});

  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dv(-4, 4);
  for (const Fan& fan : {projective_space(3), flop_fan_1(), flop_fan_2(), hirzebruch(3)}) {
    for (int rep = 0; rep < 30; ++rep) {
      LatticeVector v(fan.dim);
      for (auto& x : v) x = dv(rng);
      auto [idx, coeff] = minimal_cone_decomposition(fan, v);
      REQUIRE(idx.size() == coeff.size());
      LatticeVector sum(fan.dim, 0);
      for (size_t k = 0; k < idx.size(); ++k) {
        CHECK(coeff[k] > 0);
        for (int r = 0; r < fan.dim; ++r) sum[r] += coeff[k] * fan.rays[idx[k]][r];
      }
      CHECK(sum == v);
      CHECK(std::is_sorted(idx.begin(), idx.end()));
      // the index set is a face
      bool face = false;
      for (const auto& cone : fan.max_cones)
        face = face ||
               std::includes(cone.begin(), cone.end(), idx.begin(), idx.end());
      CHECK(face);
    }
  }
}

TEST_CASE("locate_cone and cone_coordinates") {
  Fan p2 = projective_space(2);
  int quadrant = -1;
  for (int ci = 0; ci < p2.ncones(); ++ci)
    if (p2.max_cones[ci] == std::vector<int>{0, 1}) quadrant = ci;
  REQUIRE(quadrant >= 0);
  auto c = cone_coordinates(p2, quadrant, {2, 3});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK(!cone_coordinates(p2, quadrant, {-1, 0}).has_value());

  for (const Fan& fan : {projective_space(3), flop_fan_1(), product_of_lines(3)}) {
    // the generator sum of each maximal cone lies in that cone and only that one
    for (int ci = 0; ci < fan.ncones(); ++ci) {
      LatticeVector v(fan.dim, 0);
      for (int k : fan.max_cones[ci])
        for (int r = 0; r < fan.dim; ++r) v[r] += fan.rays[k][r];
      CHECK(locate_cone(fan, v) == ci);
    }
  }
  CHECK(thrown_code([&] { locate_cone(p2, {1, 2, 3}); }) == errc::invalid_argument);
}

TEST_CASE("relation lattice is the full integer kernel of the ray matrix") {
  for (const Fan& fan : {projective_space(2), projective_space(4), hirzebruch(1),
                         product_of_lines(3), flop_fan_1(), flop_fan_2()}) {
    RelationLattice rel = relation_lattice(fan);
    CHECK(static_cast<int>(rel.basis.size()) == fan.nrays() - fan.dim);
    for (const auto& lam : rel.basis) {
      LatticeVector sum(fan.dim, 0);
      for (int i = 0; i < fan.nrays(); ++i)
        for (int r = 0; r < fan.dim; ++r) sum[r] += lam[i] * fan.rays[i][r];
      CHECK(sum == LatticeVector(fan.dim, 0));
    }
  }
  RelationLattice p2rel = relation_lattice(projective_space(2));
  CHECK(lattice_equal(p2rel.basis, {{1, 1, 1}}, 3));
  RelationLattice s1rel = relation_lattice(flop_fan_1());
  CHECK(in_row_lattice({1, 0, 0, 1, 0, 0}, s1rel.basis));
  CHECK(in_row_lattice({0, 1, 0, 0, 1, 0}, s1rel.basis));
  CHECK(in_row_lattice({-1, -1, 1, 0, 0, 1}, s1rel.basis));
  CHECK(!in_row_lattice({1, 0, 0, 0, 0, 0}, s1rel.basis));
}

TEST_CASE("virtual_dimension") {
  Fan p2 = projective_space(2);
  CHECK(virtual_dimension(p2, {1, 1, 1}) == 5);
  CHECK(virtual_dimension(p2, {2, 2, 2}) == 8);
  CHECK(virtual_dimension(p2, {0, 0, 0}) == 2);
  Fan s1 = flop_fan_1();
  CHECK(virtual_dimension(s1, {1, 0, 0, 1, 0, 0}) == 5);
  CHECK(thrown_code([&] { virtual_dimension(p2, {-1, -1, -1}); }) == errc::negative_component);
  CHECK(thrown_code([&] { virtual_dimension(p2, {1, 1, 0}); }) == errc::not_a_relation);
  CHECK(thrown_code([&] { virtual_dimension(p2, {1, 1}); }) == errc::invalid_argument);
}
