#include "qtoric/upoly.hpp"

#include <cassert>
#include <sstream>

namespace qtoric {

Int UPoly::min_exp() const {
  assert(!t_.empty());
  return t_.begin()->first;
}

Int UPoly::max_exp() const {
  assert(!t_.empty());
  return t_.rbegin()->first;
}

Rat UPoly::coeff(const Int& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rat(0) : it->second;
}

UPoly UPoly::operator-() const {
  UPoly r;
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r = *this;
  for (const auto& [e, c] : o.t_) {
    auto [it, fresh] = r.t_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) r.t_.erase(it);
    }
  }
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  UPoly r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      Int e = e1 + e2;
      auto [it, fresh] = r.t_.emplace(e, c1 * c2);
      if (!fresh) {
        it->second += c1 * c2;
        if (it->second == 0) r.t_.erase(it);
      }
    }
  return r;
}

UPoly UPoly::shifted(const Int& e) const {
  UPoly r;
  for (const auto& [e1, c] : t_) r.t_[e1 + e] = c;
  return r;
}

UPoly UPoly::scaled(const Rat& c) const {
  UPoly r;
  if (c == 0) return r;
  for (const auto& [e, c1] : t_) r.t_[e] = c1 * c;
  return r;
}

std::string UPoly::str() const {
  if (t_.empty()) return "(0/1)*u^0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_num().get_str() << "/" << c.get_den().get_str() << ")*u^" << e.get_str();
  }
  return os.str();
}

void upoly_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  assert(!b.is_zero());
  assert(b.min_exp() >= 0 && (a.is_zero() || a.min_exp() >= 0));
  q = UPoly();
  r = a;
  const Int db = b.max_exp();
  const Rat lb = b.coeff(db);
  while (!r.is_zero() && r.max_exp() >= db) {
    Rat c = r.coeff(r.max_exp()) / lb;
    Int e = r.max_exp() - db;
    UPoly t = UPoly::term(c, e);
    q = q + t;
    r = r - t * b;
  }
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    upoly_divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.coeff(a.max_exp()));  // monic
}

}  // namespace qtoric
