#ifndef GAMMAMORPHIC_KINKELIN_HPP
#define GAMMAMORPHIC_KINKELIN_HPP

// Kinkelin's K(x): K(x+1) = x^x K(x), K(1) = 1, so K(n+1) = prod j^j.
// Built on the closed form ln K(x) = int_0^x ln Gamma + x(x-1)/2
// - (x/2) ln 2pi, which is equivalent to G(x) K(x) = Gamma(x)^{x-1}.
// Also the constant omega-tilde by three routes and the Glaisher-Kinkelin
// constant A = omega-tilde^{1/2} e^{1/12}.

#include "gammamorphic/identity_report.hpp"
#include "gammamorphic/types.hpp"

namespace gammamorphic {

enum class omega_route {
    prelimit,          // exact finite-n identity in ln K(j/n), n >= 2
    integral_of_ln_k,  // ln omega-tilde = 2 int_0^1 ln K
    zeta_series,       // odd-zeta series; production route
};

// ln K(x), Re x > 0.
value_with_error log_k(cplx x);

// ln omega-tilde by the chosen route; prelimit_n only matters for the
// prelimit route.
value_with_error omega_tilde(omega_route route, int prelimit_n = 2);

// A = exp((1/2) ln omega-tilde + 1/12) from the zeta-series route.
value_with_error glaisher_constant();

// Residual of the order-n multiplication formula
//   ln K(nx) = [nx(nx-1)/2 + 1/12] ln n - ((n^2-1)/2) ln omega-tilde
//            + n sum_{j=0}^{n-1} ln K(x + j/n),   n >= 2, x > 0.
identity_report kinkelin_multiplication_check(int n, double x);

// Raabe-type integral: int_x^{x+1} ln K(t) dt
//   = (1/2) ln omega-tilde + (1/4) x^2 (2 ln x - 1),  x > 0.
// The source formula is ambiguous about whether the integrand is K or
// ln K; the check runs both quadratures and records which one matches.
identity_report raabe_analog_check(double x);

} // namespace gammamorphic

#endif
