#include "qtoric/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace qtoric {

Rat rat_from_string(const std::string& s) {
  auto bad = [&] { throw error(errc::parse_error, "not an exact rational: '" + s + "'"); };
  if (s.empty()) bad();
  size_t i = 0;
  auto scan_int = [&](bool sign_ok) {
    size_t start = i;
    if (sign_ok && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) bad();
    return s.substr(start, i - start);
  };
  std::string num = scan_int(true);
  std::string den = "1";
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = scan_int(false);
  }
  if (i != s.size()) bad();  // rejects '.', 'e', trailing junk
  Int n(num), d(den);
  if (d == 0) bad();
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int int_from_string(const std::string& s) {
  if (s.empty()) throw error(errc::parse_error, "not an integer: ''");
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw error(errc::parse_error, "not an integer: '" + s + "'");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw error(errc::parse_error, "not an integer: '" + s + "'");
  return Int(s);
}

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Int det(IntMat a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  assert(a[0].size() == n);
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact (Bareiss)
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

HnfResult hnf(const IntMat& a) {
  const int n = static_cast<int>(a.size());
  const int m = n == 0 ? 0 : static_cast<int>(a[0].size());
  HnfResult res;
  res.h = a;
  res.u.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) res.u[i][i] = 1;
  int r = 0;
  auto row_sub = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m; ++j) res.h[dst][j] -= q * res.h[src][j];
    for (int j = 0; j < n; ++j) res.u[dst][j] -= q * res.u[src][j];
  };
  for (int col = 0; col < m && r < n; ++col) {
    while (true) {
      int best = -1;
      for (int i = r; i < n; ++i) {
        if (res.h[i][col] == 0) continue;
        if (best < 0 ||
            mpz_cmpabs(res.h[i][col].get_mpz_t(), res.h[best][col].get_mpz_t()) < 0)
          best = i;
      }
      if (best < 0) break;
      if (best != r) {
        std::swap(res.h[best], res.h[r]);
        std::swap(res.u[best], res.u[r]);
      }
      bool done = true;
      for (int i = r + 1; i < n; ++i) {
        if (res.h[i][col] == 0) continue;
        row_sub(i, r, fdiv(res.h[i][col], res.h[r][col]));
        if (res.h[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (res.h[r][col] == 0) continue;  // no pivot in this column
    if (res.h[r][col] < 0) {
      for (int j = 0; j < m; ++j) res.h[r][j] = -res.h[r][j];
      for (int j = 0; j < n; ++j) res.u[r][j] = -res.u[r][j];
    }
    for (int i = 0; i < r; ++i) row_sub(i, r, fdiv(res.h[i][col], res.h[r][col]));
    ++r;
  }
  res.rank = r;
  return res;
}

IntMat integer_kernel(const IntMat& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  HnfResult res = hnf(a);
  IntMat basis;
  for (int i = res.rank; i < n; ++i) basis.push_back(res.u[i]);
  return basis;
}

static IntMat hnf_nonzero_rows(const IntMat& a) {
  HnfResult r = hnf(a);
  IntMat out(r.h.begin(), r.h.begin() + r.rank);
  return out;
}

bool lattice_equal(const IntMat& a, const IntMat& b, int m) {
  IntMat a2 = a, b2 = b;
  if (a2.empty() && b2.empty()) return true;
  if (a2.empty() || b2.empty()) return a2.empty() == b2.empty();
  (void)m;
  return hnf_nonzero_rows(a2) == hnf_nonzero_rows(b2);
}

bool in_row_lattice(const IntVec& v, const IntMat& basis) {
  if (basis.empty()) {
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }
  HnfResult r = hnf(basis);
  const int m = static_cast<int>(v.size());
  IntVec w = v;
  int row = 0;
  for (int col = 0; col < m && row < r.rank; ++col) {
    if (r.h[row][col] == 0) continue;  // not a pivot column for this row
    // pivot columns are strictly increasing; h[row][col] is the pivot
    if (w[col] % r.h[row][col] != 0) return false;
    Int q = w[col] / r.h[row][col];
    for (int j = 0; j < m; ++j) w[j] -= q * r.h[row][j];
    ++row;
  }
  for (const Int& x : w)
    if (x != 0) return false;
  return true;
}

std::optional<RatVec> solve_square(const RatMat& a0, const RatVec& b0) {
  RatMat a = a0;
  RatVec b = b0;
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

IntVec primitivize(IntVec v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

}  // namespace qtoric
