#include "qtoric/fan_io.hpp"

#include <fstream>
#include <sstream>

namespace qtoric {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw error(errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

const PLFunction* FanDocument::find_pl(const std::string& name) const {
  for (const auto& [n, phi] : pl_functions)
    if (n == name) return &phi;
  return nullptr;
}

FanDocument parse_fan_document(const std::string& text, const Exec& exec) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  int dim = -1;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<int>> cones;
  std::vector<std::pair<std::string, PLFunction>> pls;
  enum class Section { none, rays, cones } section = Section::none;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    if (head == "dim") {
      if (dim != -1) fail(lineno, "duplicate dim");
      if (toks.size() != 2) fail(lineno, "expected: dim <d>");
      Int d;
      try {
        d = int_from_string(toks[1]);
      } catch (const error&) {
        fail(lineno, "dimension is not an integer");
      }
      if (d < 1 || d > 64) fail(lineno, "dimension out of range");
      dim = static_cast<int>(d.get_si());
      continue;
    }
    if (head == "rays") {
      if (toks.size() != 1) fail(lineno, "unexpected tokens after 'rays'");
      section = Section::rays;
      continue;
    }
    if (head == "cones") {
      if (toks.size() != 1) fail(lineno, "unexpected tokens after 'cones'");
      section = Section::cones;
      continue;
    }
    if (head == "pl") {
      if (toks.size() < 2) fail(lineno, "expected: pl <name> <values...>");
      PLFunction phi;
      for (size_t i = 2; i < toks.size(); ++i) {
        try {
          phi.values.push_back(rat_from_string(toks[i]));
        } catch (const error&) {
          fail(lineno, "bad rational '" + toks[i] + "'");
        }
      }
      if (phi.values.size() != rays.size())
        fail(lineno, "pl '" + toks[1] + "' needs one value per ray");
      for (const auto& [n, p] : pls)
        if (n == toks[1]) fail(lineno, "duplicate pl name '" + toks[1] + "'");
      pls.emplace_back(toks[1], std::move(phi));
      section = Section::none;
      continue;
    }

    if (section == Section::rays) {
      if (dim == -1) fail(lineno, "rays before dim");
      if (static_cast<int>(toks.size()) != dim) fail(lineno, "ray needs dim coordinates");
      LatticeVector v;
      for (const auto& t : toks) {
        try {
          v.push_back(int_from_string(t));
        } catch (const error&) {
          fail(lineno, "bad integer '" + t + "'");
        }
      }
      rays.push_back(std::move(v));
      continue;
    }
    if (section == Section::cones) {
      if (dim == -1) fail(lineno, "cones before dim");
      std::vector<int> cone;
      for (const auto& t : toks) {
        Int k;
        try {
          k = int_from_string(t);
        } catch (const error&) {
          fail(lineno, "bad ray index '" + t + "'");
        }
        if (k < 1 || k > Int(rays.size())) fail(lineno, "ray index out of range");
        cone.push_back(static_cast<int>(k.get_si()) - 1);
      }
      cones.push_back(std::move(cone));
      continue;
    }
    fail(lineno, "unexpected line");
  }

  if (dim == -1) fail(lineno, "missing dim");
  FanDocument doc;
  doc.fan = make_fan(dim, std::move(rays), std::move(cones), exec);
  doc.pl_functions = std::move(pls);
  return doc;
}

FanDocument load_fan_file(const std::string& path, const Exec& exec) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fan_document(buf.str(), exec);
}

std::string write_fan_document(const FanDocument& doc) {
  std::ostringstream os;
  os << "dim " << doc.fan.dim << "\n";
  os << "rays\n";
  for (const auto& v : doc.fan.rays) {
    for (size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << v[j].get_str();
    os << "\n";
  }
  os << "cones\n";
  for (const auto& c : doc.fan.max_cones) {
    for (size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << (c[j] + 1);
    os << "\n";
  }
  for (const auto& [name, phi] : doc.pl_functions) {
    os << "pl " << name;
    for (const auto& q : phi.values) os << " " << rat_to_string(q);
    os << "\n";
  }
  return os.str();
}

}  // namespace qtoric
