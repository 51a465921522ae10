#include "qtoric/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qtoric {

MonomialOrder MonomialOrder::weight(std::vector<Rat> w) {
  for (const Rat& x : w)
    if (x < 0)
      throw error(errc::non_global_weight_order,
                  "weight vectors must be non-negative for a global order");
  MonomialOrder o(Kind::weight);
  o.weights_ = std::move(w);
  return o;
}

MonomialOrder MonomialOrder::elimination(int nvars, std::vector<int> eliminated) {
  MonomialOrder o(Kind::block);
  o.block_.assign(nvars, 1);
  for (int i : eliminated) {
    if (i < 0 || i >= nvars) throw error(errc::invalid_argument, "bad variable index");
    o.block_[i] = 0;
  }
  return o;
}

int grevlex_cmp_masked(const Monomial& a, const Monomial& b, const std::vector<int>& mask,
                       int block) {
  long long da = 0, db = 0;
  const int n = a.nvars();
  for (int i = 0; i < n; ++i) {
    if (!mask.empty() && mask[i] != block) continue;
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = n - 1; i >= 0; --i) {
    if (!mask.empty() && mask[i] != block) continue;
    int d = a.e[i] - b.e[i];
    if (d) return d > 0 ? -1 : 1;  // larger exponent in the last position = smaller
  }
  return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  assert(a.nvars() == b.nvars());
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_cmp_masked(a, b, {}, 0);
    case Kind::lex: {
      for (int i = 0; i < a.nvars(); ++i) {
        int d = a.e[i] - b.e[i];
        if (d) return d > 0 ? 1 : -1;
      }
      return 0;
    }
    case Kind::weight: {
      assert(static_cast<int>(weights_.size()) == a.nvars());
      Rat wa = 0, wb = 0;
      for (int i = 0; i < a.nvars(); ++i) {
        wa += weights_[i] * a.e[i];
        wb += weights_[i] * b.e[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return grevlex_cmp_masked(a, b, {}, 0);
    }
    case Kind::block: {
      int c = grevlex_cmp_masked(a, b, block_, 0);
      if (c) return c;
      return grevlex_cmp_masked(a, b, block_, 1);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::weight: {
      std::ostringstream os;
      os << "weight(";
      for (size_t i = 0; i < weights_.size(); ++i)
        os << (i ? "," : "") << rat_to_string(weights_[i]);
      os << ");grevlex";
      return os.str();
    }
    case Kind::block: {
      std::ostringstream os;
      os << "eliminate(";
      bool first = true;
      for (size_t i = 0; i < block_.size(); ++i)
        if (block_[i] == 0) {
          os << (first ? "" : ",") << i + 1;
          first = false;
        }
      os << ");grevlex";
      return os.str();
    }
  }
  return "?";
}

Polynomial Polynomial::constant(int nvars, FieldElement c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.t_.emplace(Monomial::one(nvars), std::move(c));
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Monomial m = Monomial::one(nvars);
  m.e[i] = 1;
  p.t_.emplace(std::move(m), FieldElement::one());
  return p;
}

Polynomial Polynomial::term(Monomial m, FieldElement c) {
  Polynomial p(m.nvars());
  if (!c.is_zero()) p.t_.emplace(std::move(m), std::move(c));
  return p;
}

FieldElement Polynomial::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? FieldElement() : it->second;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  assert(nvars_ == o.nvars_);
  Polynomial r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  assert(nvars_ == o.nvars_);
  Polynomial r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  assert(nvars_ == o.nvars_);
  Polynomial r(nvars_);
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m1, c1] : t_) r.t_.emplace(m1 * m, c1 * c);
  return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  return mul_term(Monomial::one(nvars_), c);
}

Monomial Polynomial::lead_monomial(const MonomialOrder& ord) const {
  assert(!t_.empty());
  auto best = t_.begin();
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return best->first;
}

const FieldElement& Polynomial::lead_coeff(const MonomialOrder& ord) const {
  return t_.at(lead_monomial(ord));
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scaled(lead_coeff(ord).inv());
}

Int Polynomial::valuation() const {
  assert(!t_.empty());
  bool first = true;
  Int v = 0;
  for (const auto& [m, c] : t_) {
    Int cv = c.valuation();
    if (first || cv < v) v = cv;
    first = false;
  }
  return v;
}

Polynomial Polynomial::u_limit() const {
  if (is_zero()) return *this;
  Int v = valuation();
  FieldElement shift = FieldElement::u_power(-v);
  Polynomial r(nvars_);
  for (const auto& [m, c] : t_) {
    FieldElement c2 = c * shift;
    if (c2.valuation() > 0) continue;
    Rat c0 = c2.eval0();
    if (c0 != 0) r.t_.emplace(m, FieldElement(c0));
  }
  return r;
}

Polynomial Polynomial::map_variables(const std::vector<int>& perm, int new_nvars) const {
  assert(static_cast<int>(perm.size()) == nvars_);
  Polynomial r(new_nvars);
  for (const auto& [m, c] : t_) {
    Monomial m2 = Monomial::one(new_nvars);
    for (int i = 0; i < nvars_; ++i) {
      if (perm[i] < 0) {
        assert(m.e[i] == 0 && "dropping a variable with nonzero exponent");
        continue;
      }
      m2.e[perm[i]] += m.e[i];
    }
    r.add_term(m2, c);
  }
  return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& sub) const {
  assert(sub.nvars() == nvars_);
  Polynomial r(nvars_);
  for (const auto& [m, c] : t_) {
    Monomial base = m;
    int k = base.e[var];
    base.e[var] = 0;
    Polynomial contrib = Polynomial::term(base, c);
    for (int i = 0; i < k; ++i) contrib = contrib * sub;
    r = r + contrib;
  }
  return r;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  if (a.nterms() != b.nterms()) return a.nterms() < b.nterms() ? -1 : 1;
  auto ia = a.t_.begin(), ib = b.t_.begin();
  for (; ia != a.t_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = FieldElement::compare(ia->second, ib->second);
    if (c) return c;
  }
  return 0;
}

std::vector<std::string> default_names(int n, const std::string& stem, int start_index) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(stem + std::to_string(start_index + i));
  return names;
}

std::string Polynomial::str(const std::vector<std::string>& names,
                            const MonomialOrder& ord) const {
  if (t_.empty()) return "0";
  std::vector<const std::pair<const Monomial, FieldElement>*> sorted;
  for (const auto& tc : t_) sorted.push_back(&tc);
  std::sort(sorted.begin(), sorted.end(), [&](auto* x, auto* y) {
    int c = ord.cmp(x->first, y->first);
    if (c) return c > 0;  // descending in the active order
    return x->first < y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* tc : sorted) {
    const Monomial& m = tc->first;
    FieldElement c = tc->second;
    bool neg = false;
    if (c.is_single_term()) {
      Rat r = c.num().coeff(c.num().min_exp());
      if (r < 0) {
        neg = true;
        c = -c;
      }
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string cs = c.str();
    bool coeff_is_one = c.is_one();
    bool mono_one = m.is_one();
    if (mono_one) {
      os << cs;
      continue;
    }
    if (!coeff_is_one) os << cs << "*";
    bool firstv = true;
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << names[i];
      if (m.e[i] > 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

}  // namespace qtoric
