#pragma once

#include <vector>

#include "localh/poly.hpp"
#include "localh/rational.hpp"

namespace localh::detail {

/// Integer-coefficient polynomial used by the PRS/Sturm kernel. Same
/// normalization rule as Poly: empty == zero, last entry nonzero.
struct ZPoly {
  std::vector<Integer> c;

  bool is_zero() const noexcept { return c.empty(); }
  std::size_t degree() const noexcept { return c.size() - 1; }  // nonzero only
  const Integer& lc() const noexcept { return c.back(); }
  void normalize();
};

ZPoly zpoly_from_poly(const Poly& p);  // clears denominators, divides content
Poly poly_from_zpoly(const ZPoly& z);
ZPoly z_derivative(const ZPoly& p);
Integer content(const ZPoly& p);               // nonnegative; 0 for zero poly
void divide_content(ZPoly& p);                 // keeps the sign of lc

/// Pseudo-remainder: rem(lc(g)^(deg f - deg g + 1) * f, g), exact over Z.
/// Requires g nonzero and deg f >= deg g.
ZPoly prem(const ZPoly& f, const ZPoly& g);

int sign_at(const ZPoly& p, const Rational& t);
int sign_at_neg_inf(const ZPoly& p);
int sign_at_pos_inf(const ZPoly& p);

/// Subresultant polynomial remainder sequence of (f, g) with Sturm sign
/// correction. Entry k is proportional, with a positive rational factor,
/// to the k-th member of the textbook signed remainder sequence
/// S_0 = f, S_1 = g, S_{k+1} = -rem(S_{k-1}, S_k); each stored entry is
/// content-free. The growth control is Collins' reduced divisor g*h^delta
/// (exact integer divisions); the extra sign bookkeeping tracks the sign
/// of the accumulated scale so the variation-count semantics of the
/// signed sequence survive the rescaling.
///
/// The last entry is (up to sign) the primitive gcd of f and g. Requires
/// f, g nonzero with deg f >= deg g.
std::vector<ZPoly> signed_prs(const ZPoly& f, const ZPoly& g);

}  // namespace localh::detail
