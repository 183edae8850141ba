#ifndef GAMMAMORPHIC_DOUBLE_SINE_HPP
#define GAMMAMORPHIC_DOUBLE_SINE_HPP

// The double sine S_2(x; w1, w2), built from a ratio of two-period gamma
// values (authoritative, complex arguments and periods) and from a
// symmetric integral over (0, inf) (cross-check, real data only).  The two
// routes guard each other: neither formula is trusted until they agree.

#include "gammamorphic/identity_report.hpp"
#include "gammamorphic/types.hpp"

namespace gammamorphic {

// ln S_2 via
//   S_2(x) = (2 pi)^{(w1+w2-2x)/(2 w1)}
//            G(x/w1; alpha) / G(1 + alpha - x/w1; alpha),  alpha = w2/w1.
// Zeros sit on x = -(m w1 + n w2), m, n >= 0; poles on the reflected
// lattice x = m w1 + n w2, m, n >= 1 (zero_error / pole_error).
value_with_error log_s2_gratio(cplx x, period_pair w);

// ln S_2 as
//   int_0^inf [ sinh(s t) / (2 sinh(w1 t / 2) sinh(w2 t / 2))
//               - 2 s / (w1 w2 t) ] dt / t,   s = x - (w1 + w2)/2,
// the unique symmetric, convergent reading whose value matches the
// G-ratio route.  Real periods, 0 < x < w1 + w2 (the convergence strip).
value_with_error log_s2_integral(double x, period_pair w);

// |log_s2_gratio - log_s2_integral| at one real point.
identity_report s2_crossroute_check(double x, period_pair w);

// The integral route with w1 and w2 swapped; the integrand is symmetric,
// so this measures pure quadrature scatter.
identity_report s2_symmetry_check(double x, period_pair w);

// ln S_2(x) + ln S_2(w1 + w2 - x) = 0, observed numerically.
identity_report s2_inversion_check(cplx x, period_pair w);

// S_2(x + w1)/S_2(x) against 1/(2 sin(pi x / w2)), observed numerically.
identity_report s2_shift_check(cplx x, period_pair w);

} // namespace gammamorphic

#endif
