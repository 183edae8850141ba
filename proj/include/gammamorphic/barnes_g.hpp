#ifndef GAMMAMORPHIC_BARNES_G_HPP
#define GAMMAMORPHIC_BARNES_G_HPP

// The double gamma function G(x): G(x+1) = Gamma(x) G(x), G(1) = 1,
// normalized so ln G is real on the positive real axis.  Four independent
// computational routes plus phi = (ln G)', three closed-form integrals of
// log-gamma type, and the duplication/multiplication right-hand sides.

#include "gammamorphic/identity_report.hpp"
#include "gammamorphic/types.hpp"

namespace gammamorphic {

enum class g_route {
    series,       // Taylor series of ln G(x+a) about an integer center a
    weierstrass,  // canonical product over n with zeta-accelerated tail
    asymptotic,   // Stirling-type expansion, Re x large
    integral,     // Malmsten-type integral, Re x > 0
    euler_limit,  // Euler-product prefix; slow, used as an oracle
    auto_route,
};

// ln G(x).  Auto dispatch: recursion shifts plus the series about the
// nearest center a in {1,2,3} for moderate x, the asymptotic expansion for
// Re x >= 9 (shifting up first when Im x puts the series out of reach).
// Throws zero_error at non-positive integers, route_domain_error when a
// requested route cannot handle x.
value_with_error log_g(cplx x, g_route route = g_route::auto_route);

// ln G(x+a) as a power series in x with coefficients
// C_j = zeta(j-1, a) + (1-a) zeta(j, a).  Requires |x| < |a|, Re a > 0;
// throws divergent_series otherwise.
value_with_error log_g_series(cplx x, cplx a);

// ln G(1+x) from the Weierstrass product: n_terms explicit factors, the
// rest summed exactly in k via Hurwitz zeta tails.  Throws zero_error at
// x = -1, -2, ...
value_with_error log_g_weierstrass(cplx x, long n_terms);

// ln G(x+1) by the asymptotic expansion, optimally truncated; requires
// Re x >= 8 (route_domain_error below).  abs_error is the first dropped
// term.  The additive constant is bootstrapped once from the series value
// of ln G(1/2), never from this route.
value_with_error log_g_asymptotic(cplx x);

// ln of the n-th prefix of the Euler-style limit product for G(x).
// Slow (O(n) log-gamma calls); abs_error estimated from level n vs n/2.
value_with_error log_g_euler_limit(cplx x, long n);

// phi(x) = d/dx ln G(x) = (x-1)(psi(x)-1) + phi(1),
// phi(1) = -1/2 + (1/2) ln 2pi.  Throws pole_error at non-positive
// integers.  phi_prime is its derivative, used by series remainders.
value_with_error phi(cplx x);
cplx phi_prime(cplx x);

// Series representations of phi checked against the closed form:
// phi(1+x) = phi(1) - x(1+gamma) + sum_k x^2/(k(x+k))          (x > -1)
// phi(a+x) = phi(a) + x psi(a)
//          + sum_j (-1)^(j-1) [x]_(j+1) / (j(j+1)(a)_j)        (|x| < 1)
// where [x]_(j+1) = x(x-1)...(x-j) and (a)_j is the rising factorial.
identity_report phi_series_check(double x);
identity_report phi_shift_series_check(double a, double x);

// int_0^a ln Gamma(t) dt in closed form:
//   -ln G(a) + (a-1) ln Gamma(a) - a(a-1)/2 + (a/2) ln 2pi,  Re a > 0.
value_with_error integral_log_gamma(cplx a);

// int_0^x ln sin(pi t) dt and int_0^x pi t cot(pi t) dt in closed form
// via ln G(1+x) - ln G(1-x); both require 0 < x < 1.
value_with_error integral_log_sin(double x);
value_with_error integral_x_cot(double x);

// ln of the right-hand sides of the duplication formula (compare against
// log_g(2x)) and the order-n multiplication formula (against log_g(nx)).
value_with_error duplication_rhs(cplx x);
value_with_error multiplication_rhs(int n, cplx x);

// Product over n-th roots of unity:
//   prod_k G(a - w^k x)/G(a) = prod_m (1 - x^n/(a+m)^n)^(m+1).
// Head product to m_max plus an exact Hurwitz-zeta tail.  The right side
// only converges for n >= 3; for n in {1,2} the report carries divergence
// evidence instead of a verdict.  Requires Re a > 0, |x| < |a|.
identity_report roots_of_unity_product_check(cplx a, cplx x, int n, int m_max);

} // namespace gammamorphic

#endif
