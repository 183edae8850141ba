#include "gammamorphic/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace gammamorphic {

namespace {

constexpr double half_pi = 1.570796326853589793238462643383279503;

// |t| beyond this underflows the transform weight; keeping it finite also
// guarantees mapped nodes stay strictly inside the interval.
constexpr double t_cap = 6.0;

struct node {
    double x;      // mapped abscissa
    double d;      // exact distance to the nearer endpoint
    double w;      // transform weight
};

// Compensated accumulator; the node counts grow into the tens of thousands
// at deep refinement levels and naive summation noise would sit right at
// the tolerances callers ask for.
struct kahan_sum {
    cplx s{0.0}, c{0.0};
    void add(cplx v) {
        const cplx y = v - c;
        const cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
    cplx value() const { return s; }
};

// exp-sinh node for (0, inf): x = exp(half_pi * sinh t), w = x * half_pi * cosh t.
bool exp_sinh_node(double t, node* out) {
    const double s = half_pi * std::sinh(t);
    if (s < -700.0 || s > 700.0) return false;
    const double x = std::exp(s);
    out->x = x;
    out->d = x;
    out->w = x * half_pi * std::cosh(t);
    return out->x > 0.0 && std::isfinite(out->w);
}

struct finite_map {
    double a, b, half_width;

    // The distance to the nearer endpoint is kept separately: close to an
    // endpoint the absolute abscissa rounds onto it while the distance is
    // still far from underflow, and integrable singularities live there.
    bool operator()(double t, node* out) const {
        const double y = half_pi * std::sinh(t);
        const double ay = std::abs(y);
        if (ay > 700.0) return false;
        const double u = 2.0 / (std::exp(2.0 * ay) + 1.0); // 1 - tanh|y|
        const double dist = half_width * u;
        if (dist <= 0.0) return false;
        double x = (t >= 0.0) ? b - dist : a + dist;
        if (x >= b) x = std::nextafter(b, a);
        if (x <= a) x = std::nextafter(a, b);
        out->x = x;
        out->d = dist;
        const double e = std::exp(-ay);
        const double sech = 2.0 * e / (1.0 + e * e);
        out->w = half_width * half_pi * std::cosh(t) * sech * sech;
        return std::isfinite(out->w) && out->w > 0.0;
    }
};

template <class NodeFn>
quadrature_result de_integrate(const NodeFn& make_node,
                               const std::function<cplx(double, double)>& f,
                               double tol) {
    const int depth_limit = max_quad_depth();
    long evals = 0;

    auto term_at = [&](double t) -> cplx {
        node n;
        if (!make_node(t, &n)) return cplx(0.0);
        ++evals;
        return f(n.x, n.d) * n.w;
    };

    // Level 0: step 1, all integer nodes.  Sweep outward from 0 until
    // contributions die; remember the reach for later levels.
    kahan_sum sum;
    double abs_sum = 0.0;
    sum.add(term_at(0.0));
    double reach_pos = 0.0, reach_neg = 0.0;
    auto sweep = [&](double h, double t0, double dir, double* reach) {
        int quiet = 0;
        for (double t = t0; std::abs(t) <= t_cap; t += dir * h) {
            const cplx c = term_at(t);
            sum.add(c);
            abs_sum += std::abs(c);
            *reach = std::abs(t);
            if (std::abs(c) <= 1e-18 * (std::abs(sum.value()) + 1e-300)) {
                if (++quiet >= 4) break;
            } else {
                quiet = 0;
            }
        }
    };
    sweep(1.0, 1.0, +1.0, &reach_pos);
    sweep(1.0, -1.0, -1.0, &reach_neg);

    double h = 1.0;
    cplx integral = sum.value() * h;
    double err = std::abs(integral);

    for (int level = 1; level <= depth_limit; ++level) {
        h *= 0.5;
        // new nodes: odd multiples of h, covering slightly past old reach
        double rp = reach_pos, rn = reach_neg;
        sweep(2.0 * h, h, +1.0, &rp);
        sweep(2.0 * h, -h, -1.0, &rn);
        reach_pos = std::max(reach_pos, rp);
        reach_neg = std::max(reach_neg, rn);
        const cplx next = sum.value() * h;
        err = std::abs(next - integral);
        integral = next;
        // Condition floor: cancellation inside the node sum caps achievable
        // accuracy no matter how deep refinement goes.
        const double floor = 4.0 * 2.220446049250313e-16 * abs_sum * h;
        const double scale = std::max(1.0, std::abs(integral));
        if (level >= 3 && err <= std::max(tol * scale, floor))
            return {integral, std::max(err, floor), evals};
    }
    throw non_convergence("quadrature: refinement did not settle within depth limit");
}

} // namespace

int max_quad_depth() {
    static const int depth = [] {
        if (const char* s = std::getenv("GAMMAMORPHIC_MAX_QUAD_DEPTH")) {
            const int v = std::atoi(s);
            if (v >= 3 && v <= 18) return v;
        }
        return 12;
    }();
    return depth;
}

quadrature_result integrate_semi_infinite(const std::function<cplx(double)>& f,
                                          double tol) {
    return de_integrate(
        [](double t, node* out) { return exp_sinh_node(t, out); },
        [&f](double x, double) { return f(x); }, tol);
}

quadrature_result integrate_finite(const std::function<cplx(double)>& f,
                                   double a, double b, double tol) {
    return integrate_finite(
        std::function<cplx(double, double)>(
            [&f](double x, double) { return f(x); }),
        a, b, tol);
}

quadrature_result integrate_finite(const std::function<cplx(double, double)>& f,
                                   double a, double b, double tol) {
    if (!(b > a)) throw domain_error("integrate_finite: requires b > a");
    finite_map m{a, b, 0.5 * (b - a)};
    return de_integrate(m, f, tol);
}

derivative_result derivative_at(const std::function<double(double)>& f,
                                double x0, int order, double h) {
    if (order != 1 && order != 2)
        throw domain_error("derivative_at: order must be 1 or 2");
    if (!(h > 0.0)) throw domain_error("derivative_at: step must be positive");
    if (x0 + 0.25 * h == x0 || 0.0625 * h * h == 0.0)
        throw noisy_function("derivative_at: step vanishes in binary64");

    auto stencil = [&](double step) {
        if (order == 1)
            return (f(x0 + step) - f(x0 - step)) / (2.0 * step);
        return (f(x0 + step) - 2.0 * f(x0) + f(x0 - step)) / (step * step);
    };
    // Both stencils have even error expansions, so one Richardson step
    // removes h^2, the next h^4.
    const double d0 = stencil(h), d1 = stencil(h * 0.5), d2 = stencil(h * 0.25);
    const double r0 = (4.0 * d1 - d0) / 3.0;
    const double r1 = (4.0 * d2 - d1) / 3.0;
    const double v = (16.0 * r1 - r0) / 15.0;

    const double c0 = std::abs(d1 - d0);
    const double c1 = std::abs(r1 - r0);
    const double noise_floor = 1e-12 * (std::abs(v) + 1.0);
    if (!std::isfinite(v) || (c1 > c0 && c1 > noise_floor))
        throw noisy_function("derivative_at: extrapolation table diverging");
    return {v, c1 + noise_floor};
}

} // namespace gammamorphic
