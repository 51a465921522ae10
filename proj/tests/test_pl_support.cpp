#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "qtoric/polytope.hpp"

using namespace qt_test;

namespace {

PLFunction pl_rat(const std::vector<Rat>& v) {
  PLFunction phi;
  phi.values = v;
  return phi;
}

// oracle: phi is (strictly) convex iff for every maximal cone the linear extension of
// its ray values stays (strictly) below phi at every ray outside the cone
bool convex_oracle(const Fan& fan, const PLFunction& phi, bool strict) {
  for (const auto& cone : fan.max_cones) {
    RatMat m(fan.dim, RatVec(fan.dim));
    for (int c = 0; c < fan.dim; ++c)
      for (int r = 0; r < fan.dim; ++r) m[r][c] = Rat(fan.rays[cone[c]][r]);
    for (int v = 0; v < fan.nrays(); ++v) {
      if (std::binary_search(cone.begin(), cone.end(), v)) continue;
      RatVec b(fan.dim);
      for (int r = 0; r < fan.dim; ++r) b[r] = Rat(fan.rays[v][r]);
      auto x = solve_square(m, b);
      REQUIRE(x.has_value());
      Rat ext = 0;
      for (int k = 0; k < fan.dim; ++k) ext += (*x)[k] * phi.values[cone[k]];
      if (strict ? !(phi.values[v] > ext) : !(phi.values[v] >= ext)) return false;
    }
  }
  return true;
}

// oracle: all lattice points by scanning an enclosing box
std::set<IntVec> points_box_oracle(const RationalPolytopeH& p, int lo, int hi) {
  std::set<IntVec> out;
  IntVec pt(p.dim, lo);
  while (true) {
    bool inside = true;
    for (size_t i = 0; i < p.normals.size() && inside; ++i) {
      Rat s = p.offsets[i];
      for (int j = 0; j < p.dim; ++j) s += Rat(p.normals[i][j]) * Rat(pt[j]);
      inside = s >= 0;
    }
    if (inside) out.insert(pt);
    int pos = 0;
    while (pos < p.dim && pt[pos] == hi) pt[pos++] = lo;
    if (pos == p.dim) break;
    pt[pos] += 1;
  }
  return out;
}

}  // namespace

TEST_CASE("evaluate is the linear extension on every cone") {
  std::mt19937 rng(314);
  std::uniform_int_distribution<int> da(0, 4);
  for (const Fan& fan : {projective_space(2), projective_space(3), hirzebruch(1),
                         hirzebruch(3), flop_fan_1(), flop_fan_2()}) {
    PLFunction phi;
    std::uniform_int_distribution<int> dphi(-3, 5);
    for (int i = 0; i < fan.nrays(); ++i) phi.values.push_back(Rat(dphi(rng)));
    // value at each ray is the assigned value
    for (int i = 0; i < fan.nrays(); ++i) CHECK(evaluate(fan, phi, fan.rays[i]) == phi.values[i]);
    // random non-negative combinations inside each cone (zeros hit shared faces)
    for (const auto& cone : fan.max_cones) {
      for (int rep = 0; rep < 5; ++rep) {
        LatticeVector v(fan.dim, 0);
        Rat expect = 0;
        for (int k : cone) {
          int a = da(rng);
          for (int r = 0; r < fan.dim; ++r) v[r] += a * fan.rays[k][r];
          expect += Rat(a) * phi.values[k];
        }
        CHECK(evaluate(fan, phi, v) == expect);
      }
    }
  }
  Fan p2 = projective_space(2);
  CHECK_THROWS_AS(evaluate(p2, pl_of({1, 1}), {0, 0}), error);
  CHECK_THROWS_AS(evaluate(p2, pl_ones(3), {0, 0, 0}), error);
}

TEST_CASE("degree is the weighted value sum") {
  Fan f1 = hirzebruch(1);
  PLFunction phi = pl_of({3, -1, 2, 5});
  CHECK(degree(f1, phi, {1, -1, 1, 0}) == Rat(3 + 1 + 2));
  CHECK(degree(f1, phi, {0, 1, 0, 1}) == Rat(4));
  CHECK(degree(f1, phi, {0, 0, 0, 0}) == 0);
  CHECK_THROWS_AS(degree(f1, phi, {1, 2}), error);
}

TEST_CASE("convexity agrees with the linear-extension oracle") {
  struct Case {
    Fan fan;
    PLFunction phi;
    bool strict, convex;
  };
  std::vector<Case> cases;
  cases.push_back({projective_space(2), pl_ones(3), true, true});
  cases.push_back({projective_space(2), pl_of({1, 2, 3}), true, true});
  cases.push_back({projective_space(2), pl_of({-1, -1, -1}), false, false});
  cases.push_back({projective_space(2), pl_of({0, 0, 0}), false, true});
  cases.push_back({hirzebruch(1), pl_ones(4), true, true});
  cases.push_back({hirzebruch(1), pl_of({1, 1, 1, 0}), true, true});
  cases.push_back({hirzebruch(1), pl_of({0, 1, 0, 2}), false, false});
  // all-ones sits on the wall of both flop Kaehler cones
  cases.push_back({flop_fan_1(), pl_ones(6), false, true});
  cases.push_back({flop_fan_2(), pl_ones(6), false, true});
  cases.push_back({flop_fan_1(), flop_phi_1(), true, true});
  cases.push_back({flop_fan_2(), flop_phi_2(), true, true});
  cases.push_back({flop_fan_1(), flop_phi_2(), false, false});
  cases.push_back({flop_fan_2(), flop_phi_1(), false, false});
  // the anticanonical class of F_3 is not even convex (not Fano)
  cases.push_back({hirzebruch(3), pl_ones(4), false, false});
  cases.push_back({hirzebruch(2), pl_ones(4), false, true});

  for (const auto& c : cases) {
    CAPTURE(c.phi.values.size());
    CHECK(is_strictly_convex(c.fan, c.phi) == c.strict);
    CHECK(is_convex(c.fan, c.phi) == c.convex);
    CHECK(convex_oracle(c.fan, c.phi, true) == c.strict);
    CHECK(convex_oracle(c.fan, c.phi, false) == c.convex);
    // precomputed-collection overloads agree
    auto pcs = primitive_collections(c.fan);
    CHECK(is_strictly_convex(c.fan, pcs, c.phi) == c.strict);
    CHECK(is_convex(c.fan, pcs, c.phi) == c.convex);
  }

  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> dv(-2, 3);
  for (const Fan& fan : {projective_space(2), hirzebruch(1), hirzebruch(3),
                         product_of_lines(2), flop_fan_1(), flop_fan_2()}) {
    for (int rep = 0; rep < 30; ++rep) {
      PLFunction phi;
      for (int i = 0; i < fan.nrays(); ++i) phi.values.push_back(Rat(dv(rng)));
      CHECK(is_strictly_convex(fan, phi) == convex_oracle(fan, phi, true));
      CHECK(is_convex(fan, phi) == convex_oracle(fan, phi, false));
    }
  }
}

TEST_CASE("convexity and relation degrees are invariant under linear shifts") {
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> da(-3, 3);
  for (const Fan& fan : {projective_space(2), hirzebruch(1), flop_fan_1()}) {
    RelationLattice rel = relation_lattice(fan);
    for (int rep = 0; rep < 10; ++rep) {
      PLFunction phi;
      for (int i = 0; i < fan.nrays(); ++i) phi.values.push_back(Rat(da(rng)));
      LatticeVector a(fan.dim);
      for (auto& x : a) x = da(rng);
      PLFunction shifted = phi;
      for (int i = 0; i < fan.nrays(); ++i) shifted.values[i] += Rat(dot(a, fan.rays[i]));
      CHECK(is_strictly_convex(fan, phi) == is_strictly_convex(fan, shifted));
      CHECK(is_convex(fan, phi) == is_convex(fan, shifted));
      for (const auto& lam : rel.basis)
        CHECK(degree(fan, phi, lam) == degree(fan, shifted, lam));
    }
  }
}

TEST_CASE("anticanonical support function and chern divisibility") {
  for (int d = 1; d <= 4; ++d) {
    Fan p = projective_space(d);
    PLFunction k = anticanonical_pl(p);
    CHECK(static_cast<int>(k.values.size()) == d + 1);
    for (const Rat& q : k.values) CHECK(q == 1);
    CHECK(chern_divisibility(p) == d + 1);
  }
  CHECK(chern_divisibility(hirzebruch(1)) == 1);
  CHECK(chern_divisibility(hirzebruch(2)) == 2);
  CHECK(chern_divisibility(hirzebruch(3)) == 1);
  CHECK(chern_divisibility(product_of_lines(2)) == 2);
  CHECK(chern_divisibility(product_of_lines(3)) == 2);
  CHECK(chern_divisibility(flop_fan_1()) == 2);
  CHECK(chern_divisibility(flop_fan_2()) == 2);
}

TEST_CASE("polytope_delta lattice points match the box-scan oracle") {
  struct Case {
    Fan fan;
    PLFunction phi;
    size_t count;
  };
  std::vector<Case> cases;
  cases.push_back({projective_space(2), pl_ones(3), 10});
  cases.push_back({projective_space(2), pl_of({1, 2, 3}), 28});
  cases.push_back({projective_space(2), pl_rat({Rat(1, 2), Rat(1, 2), Rat(1, 2)}), 1});
  cases.push_back({product_of_lines(2), pl_ones(4), 9});
  cases.push_back({hirzebruch(1), pl_ones(4), 9});
  cases.push_back({projective_space(3), pl_ones(4), 35});
  for (const auto& c : cases) {
    RationalPolytopeH p = polytope_delta(c.fan, c.phi);
    auto pts = lattice_points(p);
    CHECK(pts.size() == c.count);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    std::set<IntVec> got(pts.begin(), pts.end());
    CHECK(got.size() == pts.size());
    CHECK(got == points_box_oracle(p, -8, 8));
  }
  // an infeasible support function gives the empty polytope
  RationalPolytopeH empty = polytope_delta(projective_space(2), pl_of({-1, -1, -1}));
  CHECK(lattice_points(empty).empty());
}

TEST_CASE("lattice_points requires a bounded feasible region") {
  RationalPolytopeH half;
  half.dim = 2;
  half.normals = {{1, 0}};
  half.offsets = {Rat(0)};
  CHECK_THROWS_AS(lattice_points(half), error);
  try {
    lattice_points(half);
  } catch (const error& e) {
    CHECK(e.code() == errc::unbounded);
  }
}

TEST_CASE("fm_project computes exact coordinate intervals") {
  // x >= 0, y >= 0, x + y <= 3
  std::vector<LinIneq> tri = {{{Rat(1), Rat(0)}, Rat(0)},
                              {{Rat(0), Rat(1)}, Rat(0)},
                              {{Rat(-1), Rat(-1)}, Rat(3)}};
  auto ix = fm_project(tri, 2, 0);
  REQUIRE(ix.has_value());
  CHECK(ix->has_lo);
  CHECK(ix->has_hi);
  CHECK(ix->lo == 0);
  CHECK(ix->hi == 3);
  // rational bound: 2x <= 5
  std::vector<LinIneq> rat_hi = {{{Rat(1)}, Rat(0)}, {{Rat(-2)}, Rat(5)}};
  auto ir = fm_project(rat_hi, 1, 0);
  REQUIRE(ir.has_value());
  CHECK(ir->hi == Rat(5, 2));
  // unbounded above
  std::vector<LinIneq> ray = {{{Rat(1)}, Rat(0)}};
  auto iu = fm_project(ray, 1, 0);
  REQUIRE(iu.has_value());
  CHECK(iu->has_lo);
  CHECK(!iu->has_hi);
  // infeasible: x >= 1 and x <= 0
  std::vector<LinIneq> bad = {{{Rat(1)}, Rat(-1)}, {{Rat(-1)}, Rat(0)}};
  CHECK(!fm_project(bad, 1, 0).has_value());
}

TEST_CASE("fm_feasible_point satisfies the system it came from") {
  std::mt19937 rng(808);
  std::uniform_int_distribution<int> dc(-3, 3);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int rep = 0; rep < 60; ++rep) {
    int nvars = 1 + rep % 3;
    std::vector<LinIneq> sys;
    for (int k = 0; k < nvars + 2; ++k) {
      LinIneq q;
      for (int j = 0; j < nvars; ++j) q.coeffs.push_back(Rat(dc(rng)));
      q.constant = Rat(dc(rng));
      sys.push_back(q);
    }
    auto pt = fm_feasible_point(sys, nvars);
    auto proj = fm_project(sys, nvars, 0);
    CHECK(pt.has_value() == proj.has_value());
    if (pt) {
      ++feasible_seen;
      for (const auto& q : sys) {
        Rat s = q.constant;
        for (int j = 0; j < nvars; ++j) s += q.coeffs[j] * (*pt)[j];
        CHECK(s >= 0);
      }
    } else {
      ++infeasible_seen;
    }
  }
  CHECK(feasible_seen > 0);
  CHECK(infeasible_seen > 0);
  // the polytope inequalities of a delta polytope feed straight in
  RationalPolytopeH p = polytope_delta(projective_space(2), pl_of({1, 2, 3}));
  auto pt = fm_feasible_point(polytope_inequalities(p), 2);
  REQUIRE(pt.has_value());
}

TEST_CASE("dual polytope is the ray hull data") {
  Fan p2 = projective_space(2);
  DualPolytopeV d = dual_polytope(p2);
  CHECK(d.dim == 2);
  CHECK(d.vertices == p2.rays);
}
