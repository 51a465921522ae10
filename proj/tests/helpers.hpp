// Shared builders for the test suite: standard fans, support functions, fixture file
// paths, and seeded random polynomials.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "qtoric/rings.hpp"

namespace qt_test {

using namespace qtoric;

inline std::string fixture(const std::string& name) {
  return std::string(QTORIC_FIXTURE_DIR) + "/" + name;
}

inline PLFunction pl_of(const std::vector<int>& v) {
  PLFunction phi;
  for (int x : v) phi.values.push_back(Rat(x));
  return phi;
}

inline PLFunction pl_ones(int n) { return pl_of(std::vector<int>(n, 1)); }

// rays e_1..e_d and -(e_1+...+e_d); maximal cones = all d-subsets
inline Fan projective_space(int d) {
  std::vector<LatticeVector> rays;
  for (int i = 0; i < d; ++i) {
    LatticeVector e(d, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(LatticeVector(d, -1));
  std::vector<std::vector<int>> cones;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> c;
    for (int i = 0; i <= d; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return make_fan(d, rays, cones);
}

// (P^1)^k: rays +-e_i (ray 2i is +e_i, ray 2i+1 is -e_i), one cone per sign pattern
inline Fan product_of_lines(int k) {
  std::vector<LatticeVector> rays;
  for (int i = 0; i < k; ++i) {
    LatticeVector p(k, 0), m(k, 0);
    p[i] = 1;
    m[i] = -1;
    rays.push_back(p);
    rays.push_back(m);
  }
  std::vector<std::vector<int>> cones;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> c;
    for (int i = 0; i < k; ++i) c.push_back(2 * i + ((mask >> i) & 1));
    cones.push_back(c);
  }
  return make_fan(k, rays, cones);
}

// Hirzebruch surface F_a; a = 1 is the plane blown up at a point, a >= 2 is not Fano
inline Fan hirzebruch(int a) {
  std::vector<LatticeVector> rays = {{1, 0}, {0, 1}, {-1, Int(a)}, {0, -1}};
  return make_fan(2, std::move(rays), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline std::vector<LatticeVector> flop_rays() {
  return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {1, 1, -1}};
}

// the two fans of the three-dimensional flop pair, on the shared six-ray set
inline Fan flop_fan_1() {
  return make_fan(3, flop_rays(),
                  {{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5},
                   {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}});
}

inline Fan flop_fan_2() {
  return make_fan(3, flop_rays(),
                  {{0, 2, 4}, {0, 2, 5}, {0, 4, 5}, {1, 2, 3},
                   {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
}

// interior points of the two Kaehler cones (the all-ones function sits on the boundary
// of both: the {3,6} / {1,2} inequality degenerates to equality)
inline PLFunction flop_phi_1() { return pl_of({1, 1, 2, 1, 1, 2}); }
inline PLFunction flop_phi_2() { return pl_of({2, 2, 1, 1, 1, 1}); }

inline std::vector<std::string> gb_strings(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  auto names = default_names(gb.nvars);
  for (const auto& g : gb.gens) out.push_back(g.str(names, gb.order));
  return out;
}

inline Polynomial random_poly(std::mt19937& rng, int nvars, int nterms, int max_exp) {
  std::uniform_int_distribution<int> de(0, max_exp), dc(-4, 4), du(0, 3);
  Polynomial p(nvars);
  for (int t = 0; t < nterms; ++t) {
    Monomial m = Monomial::one(nvars);
    for (int i = 0; i < nvars; ++i) m.e[i] = de(rng);
    int c = dc(rng);
    if (c == 0) c = 1;
    p.add_term(m, FieldElement::from_novikov({Rat(c), Int(du(rng))}));
  }
  return p;
}

}  // namespace qt_test
