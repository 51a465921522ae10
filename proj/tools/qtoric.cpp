// qtoric command line: validate fan files, print ring presentations, run the
// theorem checks, classify support functions against the Kaehler cone.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtoric/fan_io.hpp"
#include "qtoric/mirror.hpp"

using nlohmann::json;
using namespace qtoric;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

const PLFunction& pick_pl(const FanDocument& doc, const std::string& name) {
  if (name.empty()) {
    if (doc.pl_functions.empty())
      throw error(errc::invalid_argument, "fan file declares no pl functions");
    return doc.pl_functions.front().second;
  }
  const PLFunction* phi = doc.find_pl(name);
  if (!phi) throw error(errc::invalid_argument, "no pl function named '" + name + "'");
  return *phi;
}

json presentation_json(const RingPresentation& p) {
  json j;
  j["variables"] = p.variables;
  j["order"] = p.gb.order.str();
  json ideal = json::array();
  for (const auto& g : p.ideal_gens) ideal.push_back(g.str(p.variables, p.gb.order));
  j["ideal"] = ideal;
  json gb = json::array();
  for (const auto& g : p.gb.gens) gb.push_back(g.str(p.variables, p.gb.order));
  j["groebner_basis"] = gb;
  j["finite"] = p.quotient.finite;
  if (p.quotient.finite) {
    j["dimension"] = p.quotient.dimension.get_str();
    json mons = json::array();
    for (const auto& m : p.quotient.std_monomials)
      mons.push_back(Polynomial::term(m, FieldElement::one()).str(p.variables, p.gb.order));
    j["standard_monomials"] = mons;
    json dims = json::array();
    for (const auto& d : p.quotient.graded_dims) dims.push_back(d.get_str());
    j["graded_dims"] = dims;
  }
  return j;
}

void print_presentation(const RingPresentation& p, const std::string& coeff_ring) {
  std::cout << "ring: " << coeff_ring << "[";
  for (size_t i = 0; i < p.variables.size(); ++i)
    std::cout << (i ? ", " : "") << p.variables[i];
  std::cout << "]\n";
  std::cout << "order: " << p.gb.order.str() << "\n";
  std::cout << "ideal:\n";
  for (const auto& g : p.ideal_gens)
    std::cout << "  " << g.str(p.variables, p.gb.order) << "\n";
  std::cout << "groebner basis (reduced):\n";
  for (const auto& g : p.gb.gens)
    std::cout << "  " << g.str(p.variables, p.gb.order) << "\n";
  if (p.quotient.finite) {
    std::cout << "dimension: " << p.quotient.dimension.get_str() << "\n";
    std::cout << "standard monomials:";
    for (const auto& m : p.quotient.std_monomials)
      std::cout << " " << Polynomial::term(m, FieldElement::one()).str(p.variables, p.gb.order);
    std::cout << "\n";
    std::cout << "graded dims:";
    for (const auto& d : p.quotient.graded_dims) std::cout << " " << d.get_str();
    std::cout << "\n";
  } else {
    std::cout << "dimension: infinite\n";
  }
}

int cmd_validate(const std::string& file, bool machine) {
  FanDocument doc = load_fan_file(file);
  auto pcs = primitive_collections(doc.fan);
  if (machine) {
    json j;
    j["valid"] = true;
    j["n"] = doc.fan.nrays();
    j["dim"] = doc.fan.dim;
    j["max_cones"] = doc.fan.ncones();
    json cols = json::array();
    for (const auto& pc : pcs) {
      json c = json::array();
      for (int i : pc.indices) c.push_back(i + 1);
      cols.push_back(c);
    }
    j["primitive_collections"] = cols;
    json pls = json::array();
    for (const auto& [name, phi] : doc.pl_functions) pls.push_back(name);
    j["pl_functions"] = pls;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "valid; n=" << doc.fan.nrays() << " d=" << doc.fan.dim << "; "
            << doc.fan.ncones() << " maximal cones; " << pcs.size()
            << " primitive collection" << (pcs.size() == 1 ? "" : "s");
  for (const auto& pc : pcs) {
    std::cout << " {";
    for (size_t k = 0; k < pc.indices.size(); ++k)
      std::cout << (k ? "," : "") << pc.indices[k] + 1;
    std::cout << "}";
  }
  std::cout << "\n";
  for (const auto& [name, phi] : doc.pl_functions) {
    std::cout << "pl " << name << ":";
    for (const auto& q : phi.values) std::cout << " " << rat_to_string(q);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_cohomology(const std::string& file, bool ordinary, const std::string& quantum_name,
                   const std::string& z0, bool machine) {
  FanDocument doc = load_fan_file(file);
  RingPresentation pres;
  std::string coeff = "C";
  if (ordinary) {
    if (z0 != "none")
      throw error(errc::invalid_argument, "--z0 applies only to quantum presentations");
    pres = ordinary_ring(doc.fan);
  } else {
    auto ctx = make_quantum_context(doc.fan, pick_pl(doc, quantum_name));
    coeff = "C(u)";
    if (z0 == "none") {
      pres = quantum_ring(ctx);
    } else if (z0 == "laurent") {
      pres = quantum_ring_z0_laurent(ctx);
    } else if (z0 == "poly") {
      pres = quantum_ring_z0_polynomial(ctx);
    } else {
      throw error(errc::invalid_argument, "--z0 must be none, laurent, or poly");
    }
  }
  if (machine) {
    json j = presentation_json(pres);
    j["coefficients"] = coeff;
    std::cout << j.dump(2) << "\n";
  } else {
    print_presentation(pres, coeff);
  }
  return kExitOk;
}

struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

int report_checks(const std::vector<CheckLine>& checks, const std::vector<std::string>& notes,
                  bool machine) {
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (machine) {
    json j;
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = arr;
    j["notes"] = notes;
    j["pass"] = all;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    for (const auto& s : notes) std::cout << "NOTE: " << s << "\n";
  }
  return all ? kExitOk : kExitCheckFailed;
}

void run_limit(const QuantumContext& ctx, std::vector<CheckLine>& out) {
  try {
    auto rep = limit_check(ctx);
    out.push_back({"limit/initial", rep.initial_matches_sr,
                   "weight-initial ideal of the quantum ideal equals the Stanley-Reisner ideal"});
    out.push_back({"limit/u->0", rep.limit_matches_ordinary,
                   "u->0 limit of the quantum basis generates the ordinary ideal"});
  } catch (const error& e) {
    if (e.code() != errc::not_in_kahler_cone) throw;
    out.push_back({"limit", false, e.what()});
  }
}

void run_grading(const QuantumContext& ctx, std::vector<CheckLine>& out) {
  auto rep = zr_grading_check(ctx);
  out.push_back({"grading", rep.homogeneous,
                 "quantum ideal is Z_" + rep.r.get_str() + "-homogeneous (r = " +
                     rep.r.get_str() + ")"});
}

void run_mirror(const QuantumContext& ctx, std::vector<CheckLine>& out) {
  auto rep = mirror_map_check(ctx);
  out.push_back({"mirror/relations", rep.relations_vanish,
                 "quantum binomials vanish under the monomial map"});
  out.push_back({"mirror/divisors", rep.divisor_equations_match,
                 "linear forms map to the logarithmic derivatives"});
  out.push_back({"mirror/dimension", rep.dimensions_match,
                 "quantum ring and Jacobian ring have equal dimension"});
  out.push_back({"mirror/anticanonical", rep.anticanonical_matches,
                 "z1 + ... + zn maps to f + 1"});
  out.push_back({"mirror/limit", mirror_limit_check(ctx),
                 "u->0 limit of the deformed anticanonical quotient is the restriction image"});
}

void run_relations(const QuantumContext& ctx, int bound, std::vector<CheckLine>& out) {
  const int n = ctx.fan.nrays();
  const int d = ctx.fan.dim;
  long long total = 0, good = 0;
  IntVec lambda(n, 0);
  bool all = true;
  while (true) {
    IntVec image(d, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) image[j] += lambda[i] * ctx.fan.rays[i][j];
    bool rel = true;
    for (const auto& x : image) rel = rel && x == 0;
    bool zero = true;
    for (const auto& x : lambda) zero = zero && x == 0;
    if (rel && !zero) {
      ++total;
      if (quantum_relation_check(ctx, lambda))
        ++good;
      else
        all = false;
    }
    int pos = 0;
    while (pos < n && lambda[pos] == bound) lambda[pos++] = 0;
    if (pos == n) break;
    lambda[pos] += 1;
  }
  out.push_back({"relations", all,
                 std::to_string(good) + "/" + std::to_string(total) +
                     " relation binomials with entries <= " + std::to_string(bound) +
                     " lie in the quantum ideal"});
  out.push_back({"relations/generation", a_ring_equality_check(ctx, bound),
                 "these binomials generate the quantum ideal"});
}

int cmd_verify(const std::string& file, const std::string& pl_name, bool all, bool limit,
               const std::string& flop_file, bool mirror, bool grading, int relations_bound,
               bool machine) {
  FanDocument doc = load_fan_file(file);
  std::vector<CheckLine> checks;
  std::vector<std::string> notes;

  if (!flop_file.empty()) {
    FanDocument other = load_fan_file(flop_file);
    const PLFunction& phi = pick_pl(doc, pl_name);
    // phi is given in the first fan's ray order; flop_compare wants it against the
    // lexicographically sorted common ray set
    auto sorted = doc.fan.rays;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Rat> phi_sorted(doc.fan.nrays());
    for (int i = 0; i < doc.fan.nrays(); ++i) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), doc.fan.rays[i]);
      phi_sorted[it - sorted.begin()] = phi.values[i];
    }
    checks.push_back({"flop", flop_compare(doc.fan, other.fan, phi_sorted),
                      "quantum ideals agree through the sorted-ray identification"});
    if (!flop_compare_ordinary(doc.fan, other.fan))
      notes.push_back("ordinary Groebner bases differ");
    else
      notes.push_back("ordinary Groebner bases agree");
    return report_checks(checks, notes, machine);
  }

  if (!(all || limit || grading || mirror || relations_bound >= 0))
    throw error(errc::invalid_argument,
                "choose --all, --limit, --flop, --mirror, --grading, or --relations");

  const PLFunction& phi = pick_pl(doc, pl_name);
  bool strict = is_strictly_convex(doc.fan, phi);
  bool want_limit = all || limit;
  if (want_limit && !strict)
    checks.push_back({"limit", false, "NotInKahlerCone: support function is not strictly convex"});

  std::optional<QuantumContext> ctx;
  try {
    ctx = make_quantum_context(doc.fan, phi);
  } catch (const error& e) {
    if (e.code() != errc::non_global_weight_order) throw;
    notes.push_back(std::string("remaining checks skipped: ") + e.what());
  }
  if (ctx) {
    if (want_limit && strict) run_limit(*ctx, checks);
    if (all || grading) run_grading(*ctx, checks);
    if (all || mirror) run_mirror(*ctx, checks);
    if (all || relations_bound >= 0)
      run_relations(*ctx, relations_bound >= 0 ? relations_bound : 2, checks);
  }
  return report_checks(checks, notes, machine);
}

int cmd_kahler(const std::string& file, const std::string& pl_name, bool machine) {
  FanDocument doc = load_fan_file(file);
  const PLFunction& phi = pick_pl(doc, pl_name);
  auto pcs = primitive_collections(doc.fan);
  bool all_strict = true, any_outside = false;
  json arr = json::array();
  for (const auto& pc : pcs) {
    Rat lhs = 0;
    for (int i : pc.indices) lhs += phi.values[i];
    Rat rhs = evaluate(doc.fan, phi, pc.v_p(doc.fan));
    std::string verdict = lhs > rhs ? "strict" : (lhs == rhs ? "boundary" : "outside");
    if (lhs <= rhs) all_strict = false;
    if (lhs < rhs) any_outside = true;
    if (machine) {
      json c;
      json idx = json::array();
      for (int i : pc.indices) idx.push_back(i + 1);
      c["collection"] = idx;
      c["sum"] = rat_to_string(lhs);
      c["value_at_sum"] = rat_to_string(rhs);
      c["verdict"] = verdict;
      arr.push_back(c);
    } else {
      std::cout << "{";
      for (size_t k = 0; k < pc.indices.size(); ++k)
        std::cout << (k ? "," : "") << pc.indices[k] + 1;
      std::cout << "}: " << rat_to_string(lhs) << (lhs > rhs ? " > " : (lhs == rhs ? " = " : " < "))
                << rat_to_string(rhs) << " -> " << verdict << "\n";
    }
  }
  std::string overall = any_outside ? "outside K(fan)"
                                    : (all_strict ? "interior of K(fan)" : "boundary of K(fan)");
  if (machine) {
    json j;
    j["collections"] = arr;
    j["verdict"] = overall;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << overall << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomology of smooth projective toric manifolds from complete regular fans"};
  app.require_subcommand(1);

  std::string file, quantum_name, z0 = "none", pl_name, flop_file;
  bool machine = false, ordinary = false, all = false, limit = false, mirror = false,
       grading = false;
  int relations_bound = -1;

  auto* v = app.add_subcommand("validate", "parse a fan file and print its combinatorics");
  v->add_option("file", file, "fan file")->required();
  v->add_flag("--machine", machine, "JSON output");

  auto* c = app.add_subcommand("cohomology", "print a ring presentation");
  c->add_option("file", file, "fan file")->required();
  c->add_flag("--ordinary", ordinary, "ordinary cohomology ring");
  c->add_option("--quantum", quantum_name, "quantum ring for the named pl function");
  c->add_option("--z0", z0, "z0 variant: none, laurent, poly")->capture_default_str();
  c->add_flag("--machine", machine, "JSON output");

  auto* vf = app.add_subcommand("verify", "run theorem checks");
  vf->add_option("file", file, "fan file")->required();
  vf->add_option("--pl", pl_name, "pl function to use (default: first in file)");
  vf->add_flag("--all", all, "limit + grading + mirror + relations");
  vf->add_flag("--limit", limit, "Kaehler limit check");
  vf->add_option("--flop", flop_file, "compare quantum ideals with this fan");
  vf->add_flag("--mirror", mirror, "mirror map and Jacobian ring checks");
  vf->add_flag("--grading", grading, "Z_r-grading check");
  vf->add_option("--relations", relations_bound, "relation binomials up to this bound");
  vf->add_flag("--machine", machine, "JSON output");

  auto* k = app.add_subcommand("kahler", "classify a pl function against the Kaehler cone");
  k->add_option("file", file, "fan file")->required();
  k->add_option("--pl", pl_name, "pl function to use (default: first in file)");
  k->add_flag("--machine", machine, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) return cmd_validate(file, machine);
    if (c->parsed()) {
      if (ordinary == !quantum_name.empty())
        throw error(errc::invalid_argument, "choose exactly one of --ordinary, --quantum NAME");
      return cmd_cohomology(file, ordinary, quantum_name, z0, machine);
    }
    if (vf->parsed())
      return cmd_verify(file, pl_name, all, limit, flop_file, mirror, grading, relations_bound,
                        machine);
    if (k->parsed()) return cmd_kahler(file, pl_name, machine);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
