// Exact integer/rational scalars and small helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric {

using Int = mpz_class;
using Rat = mpq_class;

enum class errc {
  non_primitive_ray,
  non_regular_cone,
  not_a_fan,
  not_complete,
  not_a_relation,
  negative_component,
  unbounded,
  not_in_kahler_cone,
  negative_homogenization_exponent,
  not_convex_anticanonical,
  ray_set_mismatch,
  non_global_weight_order,
  parse_error,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_primitive_ray: return "NonPrimitiveRay";
    case errc::non_regular_cone: return "NonRegularCone";
    case errc::not_a_fan: return "NotAFan";
    case errc::not_complete: return "NotComplete";
    case errc::not_a_relation: return "NotARelation";
    case errc::negative_component: return "NegativeComponent";
    case errc::unbounded: return "Unbounded";
    case errc::not_in_kahler_cone: return "NotInKahlerCone";
    case errc::negative_homogenization_exponent: return "NegativeHomogenizationExponent";
    case errc::not_convex_anticanonical: return "NotConvexAnticanonical";
    case errc::ray_set_mismatch: return "RaySetMismatch";
    case errc::non_global_weight_order: return "NonGlobalWeightOrder";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division (gmp's fdiv), defined for b != 0.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& q) { return fdiv(q.get_num(), q.get_den()); }

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

/// Strict rational syntax: [+-]digits[/digits], nonzero denominator. No floats.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

Int int_from_string(const std::string& s);

}  // namespace qtoric
