#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "localh/poly.hpp"
#include "localh/zpoly.hpp"

namespace localh {

/// Interval endpoint: -inf, +inf, or a finite rational.
/// Ordering: NegInfinity < Finite(t) < PosInfinity.
class ExtendedBound {
 public:
  static ExtendedBound neg_infinity() { return ExtendedBound(-1); }
  static ExtendedBound pos_infinity() { return ExtendedBound(+1); }
  static ExtendedBound finite(Rational v) {
    ExtendedBound b(0);
    b.value_ = std::move(v);
    return b;
  }

  bool is_finite() const noexcept { return kind_ == 0; }
  bool is_neg_infinity() const noexcept { return kind_ < 0; }
  bool is_pos_infinity() const noexcept { return kind_ > 0; }
  const Rational& value() const;  // throws std::logic_error if infinite

  friend bool operator<(const ExtendedBound& a, const ExtendedBound& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.kind_ == 0 && a.value_ < b.value_;
  }

 private:
  explicit ExtendedBound(int kind) : kind_(kind) {}
  int kind_;
  Rational value_;
};

/// Signed remainder chain of a squarefree polynomial: p, p', then each
/// subsequent entry the negated remainder of the previous two, computed by
/// the subresultant PRS (entries agree with the textbook chain up to
/// positive rational factors, which leaves all sign queries intact).
class SturmChain {
 public:
  const std::vector<Poly>& polys() const noexcept { return polys_; }

  /// Number of sign changes in the chain at the given point (zeros skipped).
  int variations_at(const ExtendedBound& at) const;

 private:
  friend SturmChain sturm_chain(const Poly& p);
  std::vector<Poly> polys_;
  std::vector<detail::ZPoly> eval_;  // primitive integer mirrors
};

/// Throws ZeroPolynomial; throws NotSquarefree when gcd(p, p') is not
/// constant (the chain would not terminate in a constant).
SturmChain sturm_chain(const Poly& p);

/// Distinct real roots of p strictly inside (lo, hi). The chain must be the
/// Sturm chain of (the squarefree part of) p and the finite endpoints must
/// not be roots.
int count_roots_in(const SturmChain& chain, const ExtendedBound& lo,
                   const ExtendedBound& hi);

/// Counts via the Sturm chain of squarefree_part(p).
/// Throws ZeroPolynomial, EndpointIsRoot; std::invalid_argument if lo >= hi.
int count_roots_in(const Poly& p, const ExtendedBound& lo,
                   const ExtendedBound& hi);

/// Isolating interval for one distinct real root. lo == hi marks an exact
/// rational root; otherwise the squarefree part changes sign across
/// [lo, hi] and the open interval holds exactly one root.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
};

/// Machine-checkable witness for "has only real zeros".
struct RealRootCertificate {
  std::optional<std::size_t> degree;  // nullopt for the zero polynomial
  int distinct_real_roots = 0;
  int total_with_multiplicity = 0;
  bool is_real_rooted = false;
  std::vector<RootInterval> isolating_intervals;  // only when isolation ran
};

struct CertifyOptions {
  bool isolate = false;
  /// Refinement width for isolating intervals; <= 0 keeps whatever width
  /// the count-driven bisection produced.
  Rational max_width = Rational(0);
};

/// Certificate for p. The zero polynomial is certified real-rooted by
/// convention (degree left undefined); nonzero constants are real-rooted
/// with zero roots. Multiplicities come from the gcd-derivative tower
/// p, gcd(p,p'), gcd(gcd(p,p'), ...), whose levels carry each root of
/// multiplicity m through the first m-1 stages.
RealRootCertificate certify_real_rooted(const Poly& p);
RealRootCertificate certify_real_rooted(const Poly& p, const CertifyOptions& opts);

/// One interval of width <= max_width per distinct real root, by
/// Sturm-count bisection from an initial Cauchy root bound.
/// Throws ZeroPolynomial; std::invalid_argument if max_width <= 0.
std::vector<RootInterval> isolate_real_roots(const Poly& p,
                                             const Rational& max_width);

/// Multiplicity of r as a root of p (0 when p(r) != 0). Throws ZeroPolynomial.
int multiplicity_of_root(const Poly& p, const Rational& r);

/// Divides out (x - r) as often as it divides p exactly.
/// Returns the reduced polynomial and the multiplicity removed.
std::pair<Poly, int> deflate(const Poly& p, const Rational& r);

}  // namespace localh
