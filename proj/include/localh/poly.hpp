#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "localh/rational.hpp"

namespace localh {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Invariant: the coefficient vector is either empty (the zero polynomial)
/// or ends with a nonzero entry, so degree() is the index of the last
/// coefficient. The degree of the zero polynomial is deliberately left
/// undefined; asking for it throws rather than returning a sentinel.
/// Values are immutable after construction.
class Poly {
 public:
  Poly() = default;  // zero polynomial
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t k);
  static Poly x();
  static Poly from_ints(std::initializer_list<long> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t degree() const;  // throws ZeroPolynomial on the zero polynomial
  const Rational& coeff(std::size_t i) const noexcept;  // zero above degree
  const Rational& leading() const;                      // throws ZeroPolynomial
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

Poly operator+(const Poly& p, const Poly& q);
Poly operator-(const Poly& p, const Poly& q);
Poly operator-(const Poly& p);
Poly operator*(const Poly& p, const Poly& q);
Poly operator*(const Rational& c, const Poly& p);
Poly operator*(const Poly& p, const Rational& c);

Poly derivative(const Poly& p);
Rational eval(const Poly& p, const Rational& t);

/// Sign of p(t) without materializing the value (integer-homogenized
/// evaluation when all coefficients are integers).
int sign_at(const Poly& p, const Rational& t);

Poly pow(const Poly& p, unsigned long e);

struct DivMod {
  Poly quot;
  Poly rem;
};
DivMod divmod(const Poly& p, const Poly& d);  // throws ZeroPolynomial if d == 0
Poly divexact(const Poly& p, const Poly& d);  // throws std::domain_error if inexact

/// Greatest common divisor, computed by the subresultant polynomial
/// remainder sequence over the integers after clearing denominators.
/// Normalization: the integer-primitive representative with positive
/// leading coefficient; constant gcds come back as 1.
/// Throws BothZero when p == q == 0.
Poly gcd(const Poly& p, const Poly& q);

/// p / gcd(p, p'), normalized like gcd(); same distinct roots as p, all
/// simple. Throws ZeroPolynomial.
Poly squarefree_part(const Poly& p);

/// Integer-primitive representative with positive leading coefficient
/// (zero maps to zero).
Poly primitive_part(const Poly& p);

std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace localh
