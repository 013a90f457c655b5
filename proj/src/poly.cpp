#include "localh/poly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "localh/errors.hpp"
#include "localh/zpoly.hpp"

namespace localh {

namespace {
const Rational kZero(0);

void strip_trailing_zeros(std::vector<Rational>& c) {
  while (!c.empty() && sign(c.back()) == 0) c.pop_back();
}
}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  strip_trailing_zeros(coeffs_);
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, kZero);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(Rational(1), 1); }

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

std::size_t Poly::degree() const {
  if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

const Rational& Poly::coeff(std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Poly::leading() const {
  if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly operator+(const Poly& p, const Poly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Rational> c(std::max(a.size(), b.size()), kZero);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& p) {
  std::vector<Rational> c = p.coeffs();
  for (Rational& v : c) v = -v;
  return Poly(std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Rational> c(a.size() + b.size() - 1, kZero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sign(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rational& c, const Poly& p) {
  if (sign(c) == 0) return Poly();
  std::vector<Rational> v = p.coeffs();
  for (Rational& x : v) x *= c;
  return Poly(std::move(v));
}

Poly operator*(const Poly& p, const Rational& c) { return c * p; }

Poly derivative(const Poly& p) {
  if (p.is_zero() || p.degree() == 0) return Poly();
  std::vector<Rational> c(p.degree(), kZero);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    c[i - 1] = p.coeffs()[i] * Rational(static_cast<unsigned long>(i));
  return Poly(std::move(c));
}

Rational eval(const Poly& p, const Rational& t) {
  if (p.is_zero()) return kZero;
  Rational acc = p.coeffs().back();
  for (std::size_t i = p.coeffs().size() - 1; i-- > 0;) {
    acc *= t;
    acc += p.coeffs()[i];
  }
  return acc;
}

int sign_at(const Poly& p, const Rational& t) {
  if (p.is_zero()) return 0;
  bool all_int = true;
  for (const Rational& c : p.coeffs())
    if (c.get_den() != 1) {
      all_int = false;
      break;
    }
  if (!all_int) return sign(eval(p, t));
  detail::ZPoly z;
  z.c.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) z.c.push_back(c.get_num());
  return detail::sign_at(z, t);
}

Poly pow(const Poly& p, unsigned long e) {
  Poly result = Poly::constant(Rational(1));
  Poly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

DivMod divmod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw ZeroPolynomial("divmod: division by the zero polynomial");
  if (p.is_zero() || p.degree() < d.degree()) return {Poly(), p};
  std::vector<Rational> rem = p.coeffs();
  const std::size_t dd = d.degree();
  std::vector<Rational> quot(p.degree() - dd + 1, kZero);
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (sign(rem[k + dd]) == 0) continue;
    Rational q = rem[k + dd] / d.leading();
    quot[k] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * d.coeffs()[j];
  }
  strip_trailing_zeros(rem);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly divexact(const Poly& p, const Poly& d) {
  DivMod dm = divmod(p, d);
  if (!dm.rem.is_zero())
    throw std::domain_error("divexact: division left a nonzero remainder");
  return dm.quot;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return Poly();
  detail::ZPoly z = detail::zpoly_from_poly(p);
  if (sgn(z.lc()) < 0)
    for (Integer& v : z.c) v = -v;
  return detail::poly_from_zpoly(z);
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero())
    throw BothZero("gcd: both inputs are the zero polynomial");
  if (p.is_zero()) return primitive_part(q);
  if (q.is_zero()) return primitive_part(p);
  detail::ZPoly a = detail::zpoly_from_poly(p);
  detail::ZPoly b = detail::zpoly_from_poly(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  std::vector<detail::ZPoly> chain = detail::signed_prs(a, b);
  detail::ZPoly g = chain.back();
  if (g.degree() == 0) return Poly::constant(Rational(1));
  detail::divide_content(g);
  if (sgn(g.lc()) < 0)
    for (Integer& v : g.c) v = -v;
  return detail::poly_from_zpoly(g);
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree_part of the zero polynomial");
  if (p.degree() == 0) return Poly::constant(Rational(1));
  Poly g = gcd(p, derivative(p));
  if (g.degree() == 0) return primitive_part(p);
  return primitive_part(divexact(p, g));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool firstTerm = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (sign(c) == 0) continue;
    const bool neg = sign(c) < 0;
    Rational a = abs(c);
    if (!firstTerm)
      os << (neg ? " - " : " + ");
    else if (neg)
      os << "-";
    firstTerm = false;
    const bool unit = (a == 1) && i > 0;
    if (!unit) {
      if (is_integer(a))
        os << a;
      else
        os << "(" << to_string(a) << ")";
    }
    if (i == 1)
      os << "x";
    else if (i > 1)
      os << "x^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << to_string(p);
}

}  // namespace localh
