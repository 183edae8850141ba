#ifndef GAMMAMORPHIC_SPECIAL_BASE_HPP
#define GAMMAMORPHIC_SPECIAL_BASE_HPP

// Classical one-period special functions everything else is built from:
// log Gamma, digamma/polygamma, Riemann and Hurwitz zeta, Bernoulli
// numbers and polynomials, Euler's constant.

#include "gammamorphic/exact.hpp"
#include "gammamorphic/types.hpp"

namespace gammamorphic {

// Principal branch of ln Gamma: continuous off the cut (-inf, 0], real on
// the positive real axis.  Stirling with a Bernoulli tail for large Re z,
// upward recursion below.  Throws pole_error at non-positive integers.
value_with_error log_gamma(cplx z);

// psi(z) = d/dz ln Gamma(z).  Asymptotic series plus recursion, valid for
// all z off the poles.
cplx digamma(cplx z);

// k-th derivative of psi, k >= 0.  k >= 1 routes through the Hurwitz zeta:
// psi^(k)(z) = (-1)^(k+1) k! zeta(k+1, z).
cplx polygamma(int k, cplx z);

// Hurwitz zeta(s, a) by Euler-Maclaurin summation, Re s > 0, s != 1,
// Re a > 0.  riemann_zeta(s) is the a = 1 case of the same code path.
cplx hurwitz_zeta(cplx s, cplx a);
cplx riemann_zeta(cplx s);

// Exact Bernoulli numbers, B1 = -1/2 convention.  Cached; thread-safe.
exact_rat bernoulli_number(int n);

// B_n as binary64 (nearest double to the exact rational).
double bernoulli_number_d(int n);

// Bernoulli polynomial B_p(x) from the exact coefficient table.
cplx bernoulli_poly(int p, cplx x);

// Euler's constant, computed once as -psi(1).
double euler_gamma();

} // namespace gammamorphic

#endif
