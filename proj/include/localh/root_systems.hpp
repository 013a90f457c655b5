#pragma once

#include <string>

#include "localh/poly.hpp"
#include "localh/xi_basis.hpp"

namespace localh {

enum class Family { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

/// Irreducible Cartan-Killing type with its rank or, for the dihedral
/// family, the parameter m. The factories validate the parameter bounds:
/// A(n >= 1), B(n >= 2), D(n >= 2), I2(m >= 3); violations throw InvalidRank.
class RootSystem {
 public:
  static RootSystem A(int n);
  static RootSystem B(int n);
  static RootSystem D(int n);
  static RootSystem I2(int m);
  static RootSystem H3();
  static RootSystem H4();
  static RootSystem F4();
  static RootSystem E6();
  static RootSystem E7();
  static RootSystem E8();

  Family family() const noexcept { return family_; }
  int rank() const noexcept;       // I2 has rank 2 regardless of m
  int parameter() const noexcept { return param_; }
  std::string name() const;        // "A4", "I2(5)", "E8", ...

 private:
  RootSystem(Family f, int p) : family_(f), param_(p) {}
  Family family_;
  int param_;
};

std::string family_name(Family f);

/// The xi coefficients of the cluster subdivision's expanded polynomial:
/// xi_0 = 0 and, for 1 <= i <= floor(n/2),
///   A_n: C(n,i) C(n-i-1,i-1) / (n-i+1)
///   B_n: C(n,i) C(n-i-1,i-1)
///   D_n: ((n-2)/i) C(2i-2,i-1) C(n-2,2i-2)
/// with the exceptional types tabulated. Every entry is asserted to be a
/// nonnegative integer after exact evaluation.
XiVector xi_vector(const RootSystem& rs);

/// The local h-polynomial itself: xi_to_poly(xi_vector(rs)). Palindromic
/// with zero constant term; identically zero for A(1) and D(2).
Poly local_h(const RootSystem& rs);

/// sum_{i=0}^{n} C(n+1,i) C(n+1,i+1) x^i / (n+1). Throws NegativeOrder.
Poly narayana_poly(int n);

/// Checks both exact identities behind the type-D reduction:
///   sum_i C(2i,i) C(n,2i)/(i+1) x^i (1+x)^(n-2i) = narayana_poly(n)
///   sum_i ((n-2)/i) C(2i-2,i-1) C(n-2,2i-2) x^i (1+x)^(n-2i)
///       = (n-2) x narayana_poly(n-2).
/// Requires n >= 2 (InvalidRank).
bool verify_d_identity(int n);

}  // namespace localh
