#ifndef GAMMAMORPHIC_TWO_PERIOD_HPP
#define GAMMAMORPHIC_TWO_PERIOD_HPP

// The double gamma function with period ratio alpha, Re alpha > 0:
//   G(x+1; alpha) = Gamma(x/alpha) G(x; alpha),  G(1; alpha) = 1,
// evaluated through its Malmsten-type integral, plus the surrounding
// identity set: the second functional equation, inversion alpha -> 1/alpha,
// the three-term relation, rational period reduction, two Euler-style
// limits, the quadrant Weierstrass product with its two constants, the
// q-product of the reflection formula, and the reflection experiment
// itself.

#include <string>
#include <vector>

#include "gammamorphic/identity_report.hpp"
#include "gammamorphic/types.hpp"

namespace gammamorphic {

// Constants a, b of the quadrant product
//   G(x; alpha) = e^{a x + b x^2} (x/alpha)
//                 prod_{m,n >= 0, (m,n) != (0,0)}
//                   (1 + x/(m+n alpha)) e^{-x/(m+n alpha) + x^2/(2 (m+n alpha)^2)}
// for one fixed alpha.  Immutable once computed; share freely.
struct lattice_constants_t {
    cplx a{};
    cplx b{};
    period_ratio alpha{};
};

// The two candidate readings of "q" in the reflection formula
// G(1+x; alpha) G(-x; -alpha) = C O(x), O(x) = prod_{k>=1} (1 - q^{2k} e^{2 pi i x}):
// the literal q = pi i alpha, and q = e^{pi i alpha}.
enum class q_reading { as_printed, exponential };

// Outcome of one reflection experiment.  Nothing here is assumed true in
// advance: the record holds least-squares fits of the unknown constant and
// the residual scatter around them, under three models of increasing
// freedom.  fitted_c is ln C from the winning fit.
struct reflection_record {
    q_reading reading{};
    cplx q{};
    cplx fitted_c{};
    double residual_rms = 0.0;    // constant-only fit
    double detrended_rms = 0.0;   // constant + c1 x + c2 x^2 fit
    double augmented_rms = 0.0;   // same fit with the k = 0 factor family
                                  // (1 - e^{2 pi i x}) joined to O(x)
    double split_drift = 0.0;     // |ln C| gap between disjoint half-samples
    std::string notes;
};

// ln G(x; alpha).  Direct quadrature for Re x > 1/2, first functional
// equation shifts below that.  Throws zero_error on the lattice zeros
// x = -(m + n alpha), m, n >= 0.
value_with_error log_g2(cplx x, period_ratio alpha);

// ln G(alpha; alpha) = -(1/2) ln alpha + ((alpha-1)/2) ln 2 pi.
value_with_error g_alpha_alpha(period_ratio alpha);

// Residual of G(x+1; alpha) = Gamma(x/alpha) G(x; alpha) in ln-space.
identity_report functional_eq1_check(cplx x, period_ratio alpha);

// Residual of
// G(x+alpha; alpha) = (2 pi)^{(alpha-1)/2} alpha^{-(2x-1)/2} Gamma(x) G(x; alpha).
identity_report functional_eq2_check(cplx x, period_ratio alpha);

// Residual of G(x; 1/alpha) = G(alpha x; alpha) G(alpha;alpha)^{-x}
//                             alpha^{(x-1)(alpha x - 2)/2}.
identity_report inversion_check(cplx x, period_ratio alpha);

// Residual of the three-term relation linking alpha with the derived
// periods 1/(alpha+1) and alpha/(alpha+1).
identity_report three_term_check(cplx x, period_ratio alpha);

// Residual of the double-product formula expressing G(x; (m/n) alpha)
// through G(.; alpha), m, n >= 1.
identity_report rational_period_check(double x, period_ratio alpha, int m,
                                      int n);

// n-th prefix of the selected limit representation (variant 1 or 2);
// abs_error is the observed gap to the n/2 prefix.  Exact at x = 1.
value_with_error euler_limit_g2(cplx x, period_ratio alpha, long n,
                                int variant);

// a and b for the quadrant product, by differentiating the integral
// representation under the integral sign at x = 1 (central differences on
// the real axis as fallback if the quadrature gives up).
lattice_constants_t lattice_constants(period_ratio alpha);

// ln of the quadrant product truncated to 0 <= m, n <= n_max, with the
// exterior recovered from power sums of the lattice (Hurwitz zeta rows):
// each log-factor is O(|x/w|^3), so the exterior collapses to
// sum_p (-1)^{p+1} x^p/p Z_p over a handful of p.  abs_error covers the
// power-sum cutoff and accumulated rounding.
value_with_error lattice_product(cplx x, period_ratio alpha,
                                 const lattice_constants_t& constants,
                                 long n_max);

// ln prod_{k=1}^{k_max} (1 - q^{2k} e^{2 pi i x}), |q| < 1, with the
// geometric tail folded into abs_error.
value_with_error q_theta_product(cplx x, cplx q, long k_max);

// The reflection experiment: evaluates ln G(1+x; alpha) plus the bare
// lattice factors of G(-x; -alpha) minus ln O(x) over sample_xs and fits
// the constant.  The q used follows the requested reading; throws
// domain_error when that reading gives |q| >= 1.
reflection_record reflection_diagnostic(period_ratio alpha, q_reading reading,
                                        const std::vector<cplx>& sample_xs);

} // namespace gammamorphic

#endif
