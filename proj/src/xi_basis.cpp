#include "localh/xi_basis.hpp"

#include <stdexcept>
#include <utility>

#include "localh/errors.hpp"

namespace localh {

XiVector make_xi_vector(int n, std::vector<Rational> xi) {
  if (n < 0) throw std::invalid_argument("XiVector: negative rank");
  const std::size_t want = static_cast<std::size_t>(n / 2) + 1;
  if (xi.size() != want)
    throw std::invalid_argument("XiVector: expected " + std::to_string(want) +
                                " entries for n = " + std::to_string(n));
  return XiVector{n, std::move(xi)};
}

Poly xi_to_poly(const XiVector& v) {
  const int n = v.n;
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::size_t i = 0; i < v.xi.size(); ++i) {
    if (sign(v.xi[i]) == 0) continue;
    const long rest = n - 2 * static_cast<long>(i);
    for (long j = 0; j <= rest; ++j)
      out[i + static_cast<std::size_t>(j)] += v.xi[i] * Rational(binomial(rest, j));
  }
  return Poly(std::move(out));
}

XiVector poly_to_xi(const Poly& p, int n) {
  if (n < 0) throw std::invalid_argument("poly_to_xi: negative rank");
  if (!p.is_zero() && p.degree() > static_cast<std::size_t>(n))
    throw DegreeTooLarge("poly_to_xi: deg p = " + std::to_string(p.degree()) +
                         " exceeds n = " + std::to_string(n));
  const std::size_t m = static_cast<std::size_t>(n / 2);
  std::vector<Rational> xi(m + 1, Rational(0));
  for (std::size_t i = 0; i <= m; ++i) {
    Rational s = p.coeff(i);
    for (std::size_t j = 0; j < i; ++j)
      s -= xi[j] * Rational(binomial(n - 2 * static_cast<long>(j),
                                     static_cast<long>(i - j)));
    xi[i] = std::move(s);
  }
  XiVector v{n, std::move(xi)};
  if (!(xi_to_poly(v) == p))
    throw NotInBasisSpan(
        "poly_to_xi: polynomial is not palindromic with center n/2");
  return v;
}

TransferReport realrootedness_transfer_check(const XiVector& v) {
  if (v.xi.empty() || sign(v.xi[0]) != 0)
    throw UnsupportedXiZero("transfer check requires xi_0 = 0");
  bool allZero = true;
  for (const Rational& c : v.xi)
    if (sign(c) != 0) {
      allZero = false;
      break;
    }
  if (allZero) throw ZeroInput("transfer check requires a nonzero xi vector");

  std::vector<Rational> xc = v.xi;
  Poly xi_poly{std::move(xc)};
  Poly ell = xi_to_poly(v);

  TransferReport rep;
  rep.xi_certificate = certify_real_rooted(xi_poly);
  rep.local_h_certificate = certify_real_rooted(ell);
  rep.certificates_agree =
      rep.xi_certificate.is_real_rooted == rep.local_h_certificate.is_real_rooted;

  // Side counts apply when xi(x)/x has full degree floor(n/2)-1 with only
  // negative simple roots; then each of those roots contributes one root of
  // the expansion on each side of -1, 0 is always a root, and -1 is a root
  // exactly when n is odd.
  const int side = v.n / 2 - 1;  // n >= 2 whenever the preconditions hold
  auto [q, zeros_of_xi] = deflate(xi_poly, Rational(0));
  if (zeros_of_xi == 1 && q.degree() == static_cast<std::size_t>(side)) {
    const RealRootCertificate qc = certify_real_rooted(q);
    const bool all_simple = qc.is_real_rooted &&
                            qc.distinct_real_roots == qc.total_with_multiplicity;
    const bool all_negative =
        q.degree() == 0 ||
        count_roots_in(q, ExtendedBound::neg_infinity(),
                       ExtendedBound::finite(Rational(0))) ==
            static_cast<int>(q.degree());
    if (all_simple && all_negative) {
      RootLocationCounts loc;
      loc.expected_side_count = side;
      auto [e1, m0] = deflate(ell, Rational(0));
      auto [e2, m1] = deflate(e1, Rational(-1));
      loc.multiplicity_at_zero = m0;
      loc.multiplicity_at_minus_one = m1;
      if (e2.is_zero() || e2.degree() == 0) {
        loc.in_neg_inf_to_minus_one = 0;
        loc.in_minus_one_to_zero = 0;
      } else {
        loc.in_neg_inf_to_minus_one =
            count_roots_in(e2, ExtendedBound::neg_infinity(),
                           ExtendedBound::finite(Rational(-1)));
        loc.in_minus_one_to_zero =
            count_roots_in(e2, ExtendedBound::finite(Rational(-1)),
                           ExtendedBound::finite(Rational(0)));
      }
      loc.matches_claim = loc.in_neg_inf_to_minus_one == side &&
                          loc.in_minus_one_to_zero == side &&
                          loc.multiplicity_at_zero >= 1 &&
                          ((loc.multiplicity_at_minus_one >= 1) == (v.n % 2 == 1));
      rep.locations = loc;
    }
  }
  return rep;
}

}  // namespace localh
