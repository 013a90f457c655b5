#pragma once

#include <memory>
#include <string>
#include <vector>

#include "localh/poly.hpp"
#include "localh/sturm.hpp"

namespace localh {

/// Generator of exact rational gamma_k for any k >= 0. Immutable; the
/// named constructors cover the sequences used by the certification
/// pipelines, Explicit holds a finite list (zero-extended), and hadamard()
/// composes two sequences termwise.
class MultiplierSeq {
 public:
  static MultiplierSeq reciprocal_factorial();                // 1/k!
  static MultiplierSeq reciprocal_shifted_factorial(int n);   // 1/(n-k)!, 0 past n
  static MultiplierSeq binomial_reciprocal(int n);            // 1/(k!(n-k)!), 0 past n
  static MultiplierSeq explicit_seq(std::vector<Rational> gammas);

  Rational at(unsigned long k) const;
  std::string describe() const;

  struct Node;  // opaque

  friend MultiplierSeq hadamard(const MultiplierSeq& a, const MultiplierSeq& b);

 private:
  explicit MultiplierSeq(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Termwise product of two sequences.
MultiplierSeq hadamard(const MultiplierSeq& a, const MultiplierSeq& b);

/// Coefficient k of the result is gamma_k times coefficient k of p.
Poly apply_sequence(const MultiplierSeq& s, const Poly& p);

struct PolyaSchurVerdict {
  int n = 0;
  bool identically_zero = false;
  bool real_rooted = false;
  int negative_roots = 0;  // distinct, after dividing out roots at 0
  int positive_roots = 0;
  bool same_sign = false;
  bool pass = false;
  RealRootCertificate certificate;
};

/// Finite-depth run of the binomial test polynomials
/// J_n(x) = sum_k C(n,k) gamma_k x^k for 1 <= n <= max_n. Passing every
/// level is a necessary condition for being a multiplier sequence, not a
/// proof: the full criterion quantifies over all n.
struct PolyaSchurReport {
  int max_n = 0;
  std::vector<PolyaSchurVerdict> verdicts;
  bool pass = false;  // conjunction of all verdicts
};

/// J_n for one level; exposed for the pipeline equalities and tests.
Poly polya_schur_test_poly(const MultiplierSeq& s, int n);

/// Runs levels 1..max_n. A level passes when J_n is identically zero, or is
/// certified real-rooted with no two roots of strictly opposite sign
/// (roots at 0 are neutral). Throws InvalidDepth when max_n < 1.
PolyaSchurReport polya_schur_report(const MultiplierSeq& s, int max_n);

}  // namespace localh
