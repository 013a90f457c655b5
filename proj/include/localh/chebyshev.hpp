#pragma once

#include "localh/bigfloat.hpp"
#include "localh/poly.hpp"

namespace localh {

/// Chebyshev polynomial of the second kind, by the recurrence
/// U_0 = 1, U_1 = 2y, U_{k+1} = 2y U_k - U_{k-1}. Throws NegativeOrder.
Poly u_poly(int n);

/// Same polynomial from the alternating binomial sum
/// sum_k (-1)^k C(n-k,k) (2y)^(n-2k).
Poly u_poly_closed(int n);

/// H_n(x) = sum_{j=0}^{floor(n/2)} C(n-j,j) x^j.
Poly h_poly(int n);

/// Verifies y^n U_n(1/(2y)) = sum_k C(n-k,k) (-y^2)^k exactly, with the
/// left side obtained by reversing and rescaling the coefficient sequence
/// of u_poly(n) (no polynomial division involved).
bool reciprocal_substitution_check(int n);

/// -sec^2(k pi / (n+1)) / 4, the k-th zero of H_n (k = 1 .. floor(n/2)),
/// as a high-precision value with a conservative error bound. Requires
/// n >= 2, 1 <= k <= floor(n/2) (IndexOutOfRange) and precision >= 64
/// (std::invalid_argument).
HighPrecisionValue h_root_oracle(int n, int k, long precision_bits = 128);

/// Checks that every h_root_oracle(n, k) lands in exactly the matching
/// Sturm isolating interval of H_n refined to width 2^-53, doubling the
/// oracle precision on boundary ambiguity up to 1024 bits before giving up.
bool h_root_oracle_agreement(int n, long start_precision_bits = 128);

}  // namespace localh
