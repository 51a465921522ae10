// Serial vs parallel timings for the three kernels that fan out across threads:
// pairwise cone checks in make_fan, box scans in lattice_points, and S-polynomial
// batches in buchberger. Parallel results are asserted identical to serial ones.
#include <chrono>
#include <iostream>
#include <random>
#include <string>

#ifdef QTORIC_HAVE_OPENMP
#include <omp.h>
#endif

#include "qtoric/groebner.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/rings.hpp"

using namespace qtoric;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Row {
  std::string name;
  double serial_ms = 0, parallel_ms = 0;
  bool match = false;
};

void print_row(const Row& r) {
  double speedup = r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0;
  std::printf("%-34s %10.2f %10.2f %8.2fx   %s\n", r.name.c_str(), r.serial_ms, r.parallel_ms,
              speedup, r.match ? "identical" : "MISMATCH");
}

// (P^1)^k: 2k rays, 2^k maximal cones; the pairwise-intersection validation dominates.
std::pair<std::vector<LatticeVector>, std::vector<std::vector<int>>> product_of_lines(int k) {
  std::vector<LatticeVector> rays;
  for (int i = 0; i < k; ++i) {
    LatticeVector plus(k, 0), minus(k, 0);
    plus[i] = 1;
    minus[i] = -1;
    rays.push_back(plus);
    rays.push_back(minus);
  }
  std::vector<std::vector<int>> cones;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> cone;
    for (int i = 0; i < k; ++i) cone.push_back(2 * i + ((mask >> i) & 1));
    cones.push_back(cone);
  }
  return {rays, cones};
}

Row bench_make_fan(int k) {
  auto [rays, cones] = product_of_lines(k);
  Row row{"make_fan (P^1)^" + std::to_string(k) + ", " + std::to_string(cones.size()) +
          " cones"};
  auto t0 = Clock::now();
  Fan fs = make_fan(k, rays, cones, Exec{Exec::Mode::serial});
  row.serial_ms = ms_since(t0);
  t0 = Clock::now();
  Fan fp = make_fan(k, rays, cones, Exec{Exec::Mode::parallel});
  row.parallel_ms = ms_since(t0);
  row.match = fs.rays == fp.rays && fs.max_cones == fp.max_cones;
  return row;
}

Row bench_lattice_points(int m) {
  // dilated anticanonical simplex of P^3
  Fan p3 = make_fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  PLFunction phi{std::vector<Rat>(4, Rat(m))};
  auto poly = polytope_delta(p3, phi);
  Row row{"lattice_points " + std::to_string(m) + "*simplex(P^3)"};
  auto t0 = Clock::now();
  auto serial = lattice_points(poly, Exec{Exec::Mode::serial});
  row.serial_ms = ms_since(t0);
  t0 = Clock::now();
  auto parallel = lattice_points(poly, Exec{Exec::Mode::parallel});
  row.parallel_ms = ms_since(t0);
  row.match = serial == parallel;
  row.name += ", " + std::to_string(serial.size()) + " pts";
  return row;
}

std::vector<Polynomial> random_binomials(int nvars, int count, int max_exp, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  std::uniform_int_distribution<int> u_dist(0, 3);
  std::uniform_int_distribution<int> c_dist(1, 4);
  std::vector<Polynomial> gens;
  for (int g = 0; g < count; ++g) {
    Monomial a = Monomial::one(nvars), b = Monomial::one(nvars);
    for (int i = 0; i < nvars; ++i) {
      a.e[i] = exp_dist(rng);
      b.e[i] = exp_dist(rng);
    }
    if (a == b) b.e[g % nvars] += 1;
    FieldElement c =
        FieldElement(Rat(c_dist(rng))) * FieldElement::u_power(u_dist(rng));
    gens.push_back(Polynomial::term(a, FieldElement::one()) - Polynomial::term(b, c));
  }
  return gens;
}

Row bench_groebner(int nvars, int count, int max_exp, int rounds, unsigned seed0) {
  Row row{"buchberger " + std::to_string(rounds) + " random binomial ideals (n=" +
          std::to_string(nvars) + ")"};
  row.match = true;
  for (int r = 0; r < rounds; ++r) {
    auto gens = random_binomials(nvars, count, max_exp, seed0 + r);
    GBOptions serial{Exec{Exec::Mode::serial}}, parallel{Exec{Exec::Mode::parallel}};
    auto t0 = Clock::now();
    auto gs = buchberger(gens, MonomialOrder::grevlex(), serial);
    row.serial_ms += ms_since(t0);
    t0 = Clock::now();
    auto gp = buchberger(gens, MonomialOrder::grevlex(), parallel);
    row.parallel_ms += ms_since(t0);
    row.match = row.match && gs.gens == gp.gens;
  }
  return row;
}

Row bench_quantum(int k) {
  auto [rays, cones] = product_of_lines(k);
  Fan fan = make_fan(k, rays, cones);
  auto ctx = make_quantum_context(fan, anticanonical_pl(fan));
  auto gens = linear_ideal(fan);
  auto q = quantum_generators(ctx);
  gens.insert(gens.end(), q.begin(), q.end());
  Row row{"quantum GB (P^1)^" + std::to_string(k)};
  GBOptions serial{Exec{Exec::Mode::serial}}, parallel{Exec{Exec::Mode::parallel}};
  auto order = MonomialOrder::weight(ctx.order_weights);
  auto t0 = Clock::now();
  auto gs = buchberger(gens, order, serial);
  row.serial_ms = ms_since(t0);
  t0 = Clock::now();
  auto gp = buchberger(gens, order, parallel);
  row.parallel_ms = ms_since(t0);
  row.match = gs.gens == gp.gens;
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--quick") quick = true;

#ifdef QTORIC_HAVE_OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP; parallel mode falls back to serial)\n");
#endif
  std::printf("%-34s %10s %10s %9s\n", "workload", "serial/ms", "par/ms", "speedup");

  bool ok = true;
  auto run = [&](Row r) {
    print_row(r);
    ok = ok && r.match;
  };

  run(bench_make_fan(quick ? 6 : 9));
  run(bench_lattice_points(quick ? 8 : 28));
  run(bench_groebner(5, 6, 2, quick ? 4 : 16, 20240501));
  run(bench_quantum(quick ? 5 : 7));

  if (!ok) {
    std::printf("parallel results deviated from serial results\n");
    return 1;
  }
  return 0;
}
