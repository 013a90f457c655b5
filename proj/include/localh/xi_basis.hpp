#pragma once

#include <optional>
#include <vector>

#include "localh/poly.hpp"
#include "localh/sturm.hpp"

namespace localh {

/// Coefficients of the symmetric-basis expansion
///   p(x) = sum_i xi_i x^i (1+x)^(n-2i),   i = 0 .. floor(n/2).
struct XiVector {
  int n = 0;
  std::vector<Rational> xi;  // size floor(n/2) + 1
};

/// Validating constructor. Throws std::invalid_argument on a size mismatch
/// or negative n.
XiVector make_xi_vector(int n, std::vector<Rational> xi);

/// Expansion in the basis x^i (1+x)^(n-2i); the result is palindromic with
/// center n/2 (coefficient i equals coefficient n-i).
Poly xi_to_poly(const XiVector& v);

/// Inverse of xi_to_poly via the triangular solve
///   xi_i = p_i - sum_{j<i} xi_j * C(n-2j, i-j),
/// then a full residual check that the expansion reproduces p.
/// Throws DegreeTooLarge (deg p > n) and NotInBasisSpan (p not palindromic
/// with center n/2).
XiVector poly_to_xi(const Poly& p, int n);

/// Where the distinct roots of the expanded polynomial sit relative to the
/// two special points 0 and -1, against the expected floor(n/2)-1 on each
/// side of -1.
struct RootLocationCounts {
  int in_neg_inf_to_minus_one = 0;
  int in_minus_one_to_zero = 0;
  int multiplicity_at_zero = 0;
  int multiplicity_at_minus_one = 0;
  int expected_side_count = 0;
  bool matches_claim = false;
};

struct TransferReport {
  RealRootCertificate xi_certificate;       // for xi(x) = sum xi_i x^i
  RealRootCertificate local_h_certificate;  // for the expanded polynomial
  bool certificates_agree = false;
  /// Present when xi(x)/x has floor(n/2)-1 negative simple roots, the
  /// premise under which the side counts and the root at -1 (iff n odd)
  /// are pinned down.
  std::optional<RootLocationCounts> locations;
};

/// Certifies both sides of the real-rootedness equivalence between the
/// expanded polynomial and its xi-coefficient polynomial, plus the root
/// location counts when applicable. Requires xi_0 = 0 and xi not
/// identically zero; throws UnsupportedXiZero / ZeroInput otherwise.
TransferReport realrootedness_transfer_check(const XiVector& v);

}  // namespace localh
