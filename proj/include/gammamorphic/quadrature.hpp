#ifndef GAMMAMORPHIC_QUADRATURE_HPP
#define GAMMAMORPHIC_QUADRATURE_HPP

// Double-exponential quadrature for the Malmsten-type integrands, plus
// Richardson-extrapolated central differences.  Integrands are expected to
// be analytic on the open interval, with at worst removable endpoint
// behavior after the caller's rearrangement; node placement never touches
// the endpoints, so u = 0 is never evaluated.

#include <functional>

#include "gammamorphic/types.hpp"

namespace gammamorphic {

struct quadrature_result {
    cplx value{};
    double abs_error = 0.0;
    long evaluations = 0;
};

struct derivative_result {
    double value = 0.0;
    double abs_error = 0.0;
};

// Dyadic refinement depth limit.  Default 12, overridable through the
// GAMMAMORPHIC_MAX_QUAD_DEPTH environment variable (read once).
int max_quad_depth();

// Integral of f over (0, infinity) via the exp-sinh transform.  Refines
// until two successive levels agree within tol (relative to max(1, |I|));
// throws non_convergence if the depth limit is reached first.
quadrature_result integrate_semi_infinite(const std::function<cplx(double)>& f,
                                          double tol);

// Integral of f over (a, b) via tanh-sinh; integrable endpoint
// singularities are fine.
quadrature_result integrate_finite(const std::function<cplx(double)>& f,
                                   double a, double b, double tol);

// Same transform, but f also receives the exact distance to the nearer
// endpoint.  Near an endpoint the abscissa itself rounds to a or b long
// before the transform weight underflows; algebraic singularities need the
// unrounded distance to keep their tail contributions.
quadrature_result integrate_finite(
    const std::function<cplx(double, double)>& f, double a, double b,
    double tol);

// order-th derivative (order = 1 or 2) of f at x0: central differences at
// steps {h, h/2, h/4} with Richardson extrapolation.  Throws noisy_function
// when the extrapolation table diverges instead of contracting.
derivative_result derivative_at(const std::function<double(double)>& f,
                                double x0, int order, double h);

} // namespace gammamorphic

#endif
