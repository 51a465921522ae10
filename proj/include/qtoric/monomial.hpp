// Monomials and monomial orders. Orders: grevlex, lex, rational weight vectors with
// grevlex tiebreak (weights must be >= 0 so the order is global), and block orders for
// elimination (grevlex on the eliminated block, then grevlex on the rest).
#pragma once

#include <string>
#include <vector>

#include "qtoric/numeric.hpp"

namespace qtoric {

struct Monomial {
  std::vector<int> e;

  int nvars() const { return static_cast<int>(e.size()); }
  long long deg() const {
    long long d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (int x : e)
      if (x) return false;
    return true;
  }
  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  // *this / o, pre: o divides *this
  Monomial quotient(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }
  static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }
  auto operator<=>(const Monomial&) const = default;  // data order for map keys only
};

class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, weight, block };

  MonomialOrder() : kind_(Kind::grevlex) {}

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  // weights must be non-negative rationals (otherwise the order would not be global);
  // throws NonGlobalWeightOrder.
  static MonomialOrder weight(std::vector<Rat> w);
  // block order: eliminated variables dominate (grevlex within each block)
  static MonomialOrder elimination(int nvars, std::vector<int> eliminated);

  Kind kind() const { return kind_; }
  const std::vector<Rat>& weights() const { return weights_; }

  // -1 if a < b, 0 if equal, +1 if a > b
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  std::string str() const;
  bool operator==(const MonomialOrder&) const = default;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<Rat> weights_;
  std::vector<int> block_;  // for block orders: 0 = eliminated, 1 = kept
};

// grevlex comparison restricted to positions where mask[i] != exclude_flag; helper for
// the block order. mask empty = all positions.
int grevlex_cmp_masked(const Monomial& a, const Monomial& b, const std::vector<int>& mask,
                       int block);

}  // namespace qtoric
