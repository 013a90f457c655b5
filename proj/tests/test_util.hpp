#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "localh/poly.hpp"
#include "localh/rational.hpp"

namespace testutil {

using localh::Poly;
using localh::Rational;

inline Rational rand_rational(std::mt19937_64& g, long num_mag, long den_max) {
  std::uniform_int_distribution<long> num(-num_mag, num_mag);
  std::uniform_int_distribution<long> den(1, den_max);
  return localh::rational(num(g), den(g));
}

/// Random integer-coefficient polynomial of degree exactly deg.
inline Poly rand_poly(std::mt19937_64& g, int deg, long coeff_mag) {
  std::uniform_int_distribution<long> c(-coeff_mag, coeff_mag);
  std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
  for (auto& x : v) x = Rational(c(g));
  while (localh::sign(v.back()) == 0) v.back() = Rational(c(g));
  return Poly(std::move(v));
}

struct RootedPoly {
  Poly p;
  std::map<Rational, int> roots;  // root -> multiplicity
  int factor_count = 0;
};

/// Product of `factors` linear terms (x - r) with small rational roots
/// (repeats allowed), times a random nonzero constant.
inline RootedPoly rand_real_rooted(std::mt19937_64& g, int factors) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<long> lead(1, 3);
  std::uniform_int_distribution<int> flip(0, 1);
  RootedPoly out;
  long lc = lead(g) * (flip(g) ? 1 : -1);
  out.p = Poly::constant(Rational(lc));
  out.factor_count = factors;
  for (int i = 0; i < factors; ++i) {
    Rational r = localh::rational(num(g), den(g));
    out.p = out.p * Poly(std::vector<Rational>{-r, Rational(1)});
    out.roots[r] += 1;
  }
  return out;
}

/// Monic quadratic with negative discriminant.
inline Poly rand_complex_quadratic(std::mt19937_64& g) {
  std::uniform_int_distribution<long> b(-4, 4);
  while (true) {
    Rational bb(b(g));
    std::uniform_int_distribution<long> c(1, 20);
    Rational cc(c(g));
    if (localh::sign(bb * bb - Rational(4) * cc) < 0)
      return Poly(std::vector<Rational>{cc, bb, Rational(1)});
  }
}

/// Textbook rational-arithmetic Euclid, monic result; the oracle the
/// subresultant gcd is checked against.
inline Poly naive_gcd_monic(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = localh::divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return a * (Rational(1) / a.leading());
}

/// Textbook signed remainder sequence over the rationals.
inline std::vector<Poly> naive_sturm_chain(const Poly& p) {
  std::vector<Poly> ch{p, localh::derivative(p)};
  while (!ch.back().is_zero()) {
    const Poly& a = ch[ch.size() - 2];
    const Poly& b = ch.back();
    if (a.degree() < b.degree()) break;
    Poly r = localh::divmod(a, b).rem;
    if (r.is_zero()) break;
    ch.push_back(-r);
  }
  return ch;
}

inline int naive_variations(const std::vector<Poly>& ch, const Rational& t) {
  int prev = 0, var = 0;
  for (const Poly& s : ch) {
    const int sg = localh::sign(localh::eval(s, t));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

}  // namespace testutil
