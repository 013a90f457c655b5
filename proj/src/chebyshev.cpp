#include "localh/chebyshev.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "localh/errors.hpp"
#include "localh/sturm.hpp"

namespace localh {

Poly u_poly(int n) {
  if (n < 0) throw NegativeOrder("u_poly requires n >= 0");
  Poly prev = Poly::constant(Rational(1));
  if (n == 0) return prev;
  Poly two_y = Poly::monomial(Rational(2), 1);
  Poly cur = two_y;
  for (int k = 1; k < n; ++k) {
    Poly next = two_y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly u_poly_closed(int n) {
  if (n < 0) throw NegativeOrder("u_poly_closed requires n >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n / 2; ++k) {
    Integer v = binomial(n - k, k) << static_cast<unsigned long>(n - 2 * k);
    if (k % 2 != 0) v = -v;
    c[static_cast<std::size_t>(n - 2 * k)] = Rational(std::move(v));
  }
  return Poly(std::move(c));
}

Poly h_poly(int n) {
  if (n < 0) throw NegativeOrder("h_poly requires n >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(n / 2) + 1);
  for (int j = 0; j <= n / 2; ++j)
    c[static_cast<std::size_t>(j)] = Rational(binomial(n - j, j));
  return Poly(std::move(c));
}

bool reciprocal_substitution_check(int n) {
  if (n < 0) throw NegativeOrder("reciprocal_substitution_check requires n >= 0");
  const Poly u = u_poly(n);
  // y^n U_n(1/(2y)) has coefficient u_{n-m} / 2^(n-m) at y^m.
  std::vector<Rational> lhs(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int m = 0; m <= n; ++m) {
    const Rational& c = u.coeff(static_cast<std::size_t>(n - m));
    if (sign(c) == 0) continue;
    lhs[static_cast<std::size_t>(m)] =
        c / Rational(Integer(1) << static_cast<unsigned long>(n - m));
  }
  std::vector<Rational> rhs(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n / 2; ++k) {
    Integer v = binomial(n - k, k);
    if (k % 2 != 0) v = -v;
    rhs[static_cast<std::size_t>(2 * k)] = Rational(std::move(v));
  }
  return Poly(std::move(lhs)) == Poly(std::move(rhs));
}

HighPrecisionValue h_root_oracle(int n, int k, long precision_bits) {
  if (n < 2 || k < 1 || k > n / 2)
    throw IndexOutOfRange("h_root_oracle: need n >= 2 and 1 <= k <= floor(n/2)");
  if (precision_bits < 64)
    throw std::invalid_argument("h_root_oracle: precision_bits must be >= 64");
  const BigFloat pi = BigFloat::pi(precision_bits);
  const BigFloat angle =
      pi.mul_ui(static_cast<unsigned long>(k)).div_ui(static_cast<unsigned long>(n + 1));
  const BigFloat c = angle.cos();
  const BigFloat value =
      -(BigFloat::from_long(1, precision_bits) / c.sqr().mul_ui(4));
  HighPrecisionValue out{value, precision_bits, BigFloat(precision_bits)};
  // Error model: a handful of <=2-ulp elementary steps plus the blowup of
  // the final division by cos^2, whose relative error grows like n because
  // the extreme angles approach pi/2 where cos(t) >= 1/(n+1). A factor of
  // (n+1)*2^6 relative dominates all of that comfortably at desk scale.
  out.abs_error =
      value.abs().mul_ui(static_cast<unsigned long>(n + 1)).mul_2exp(6 - precision_bits);
  return out;
}

bool h_root_oracle_agreement(int n, long start_precision_bits) {
  if (n < 0) throw NegativeOrder("h_root_oracle_agreement requires n >= 0");
  const int root_count = n / 2;
  if (n < 2 || root_count == 0) return true;  // H_0 = H_1 = 1, nothing to match
  const Rational width = rational(Integer(1), Integer(1) << 53);
  const std::vector<RootInterval> intervals = isolate_real_roots(h_poly(n), width);
  if (static_cast<int>(intervals.size()) != root_count) return false;
  for (int k = 1; k <= root_count; ++k) {
    // Roots get more negative as k grows, so oracle k matches interval
    // root_count - k in ascending order.
    const std::size_t expect = static_cast<std::size_t>(root_count - k);
    bool settled = false;
    for (long prec = start_precision_bits; prec <= 1024; prec *= 2) {
      const HighPrecisionValue v = h_root_oracle(n, k, prec);
      const BigFloat lo = v.lower(), hi = v.upper();
      std::size_t hits = 0, hit_index = 0;
      for (std::size_t i = 0; i < intervals.size(); ++i) {
        const bool misses =
            hi.compare(intervals[i].lo) < 0 || lo.compare(intervals[i].hi) > 0;
        if (!misses) {
          ++hits;
          hit_index = i;
        }
      }
      if (hits == 1) {
        if (hit_index != expect) return false;
        settled = true;
        break;
      }
      // Boundary ambiguity: escalate precision and retry.
    }
    if (!settled) return false;
  }
  return true;
}

}  // namespace localh
