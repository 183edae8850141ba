#include "gammamorphic/double_sine.hpp"

#include <cmath>
#include <string>

#include "gammamorphic/power_series.hpp"
#include "gammamorphic/quadrature.hpp"
#include "gammamorphic/two_period.hpp"

namespace gammamorphic {

namespace {

constexpr std::size_t sinh_order = 64;

void require_periods(const period_pair& w) {
    if (!(w.omega1.real() > 0.0) || !(w.omega2.real() > 0.0) ||
        !((w.omega2 / w.omega1).real() > 0.0))
        throw domain_error("double sine needs Re w1 > 0, Re w2 > 0 and "
                           "Re(w2/w1) > 0");
}

void require_real_periods(const period_pair& w) {
    require_periods(w);
    if (w.omega1.imag() != 0.0 || w.omega2.imag() != 0.0)
        throw domain_error("the integral route is limited to real periods");
}

// sinh(c t)/(c t) as a series in t: regular, constant term 1.
pseries shc_series(double c, std::size_t order) {
    pseries p(order);
    double term = 1.0;
    p[0] = term;
    for (std::size_t k = 2; k <= order; k += 2) {
        term *= c * c / (double(k) * double(k + 1));
        p[k] = term;
    }
    return p;
}

// sinh(s t)/(sinh(a t) sinh(b t)) for t bounded away from 0, through
// scaled exponentials so nothing overflows when the periods are large.
double sinh_ratio(double s, double a, double b, double t) {
    const double m = std::abs(s);
    const double sign = s < 0.0 ? -1.0 : 1.0;
    const double top = 1.0 - std::exp(-2.0 * m * t);
    const double bot =
        (1.0 - std::exp(-2.0 * a * t)) * (1.0 - std::exp(-2.0 * b * t));
    return sign * 2.0 * std::exp((m - a - b) * t) * top / bot;
}

identity_report s2_report(identity_id id, cplx x, const period_pair& w,
                          double tol) {
    identity_report r;
    r.id = id;
    r.tolerance = tol;
    r.params["x_re"] = x.real();
    r.params["x_im"] = x.imag();
    r.params["omega1_re"] = w.omega1.real();
    r.params["omega1_im"] = w.omega1.imag();
    r.params["omega2_re"] = w.omega2.real();
    r.params["omega2_im"] = w.omega2.imag();
    return r;
}

} // namespace

value_with_error log_s2_gratio(cplx x, period_pair w) {
    require_periods(w);
    const cplx al = w.omega2 / w.omega1;
    const cplx z = x / w.omega1;
    const auto num = log_g2(z, period_ratio{al});
    value_with_error den;
    try {
        den = log_g2(1.0 + al - z, period_ratio{al});
    } catch (const zero_error&) {
        throw pole_error("double sine pole at x on the m w1 + n w2 lattice, "
                         "m, n >= 1");
    }
    const cplx pre = 0.5 * (1.0 + al - 2.0 * z) * std::log(2.0 * M_PI);
    return {pre + num.value - den.value, num.abs_error + den.abs_error + 1e-15,
            route_tag::g_ratio};
}

value_with_error log_s2_integral(double x, period_pair w) {
    require_real_periods(w);
    const double w1 = w.omega1.real(), w2 = w.omega2.real();
    if (!(x > 0.0) || !(x < w1 + w2))
        throw domain_error("integral route needs 0 < x < w1 + w2, got x = " +
                           std::to_string(x));
    const double s = x - 0.5 * (w1 + w2);
    if (s == 0.0) return {cplx(0.0), 0.0, route_tag::integral};
    const double a = 0.5 * w1, b = 0.5 * w2;

    // Series of [sinh(st)/(2 sinh(at) sinh(bt)) - 2s/(w1 w2 t)] / t around
    // 0: with shc(y) = sinh(y)/y this is
    //   (2s/(w1 w2)) (shc(st) - shc(at) shc(bt)) / (t^2 shc(at) shc(bt)),
    // and the numerator's t^0 and t^1 coefficients vanish identically.
    const pseries den = shc_series(a, sinh_order) * shc_series(b, sinh_order);
    pseries num = shc_series(s, sinh_order);
    num -= den;
    num.shift_down(2);
    const pseries q = num / den;
    const double scale = 2.0 * s / (w1 * w2);

    const double seam =
        std::min(1.0, 2.5 / std::max({std::abs(s), a, b, 1e-30}));
    const auto f = [&](double t) -> cplx {
        if (t < seam) return scale * q.eval(t);
        return (0.5 * sinh_ratio(s, a, b, t) - 2.0 * s / (w1 * w2 * t)) / t;
    };
    const auto r = integrate_semi_infinite(f, 1e-12);
    return {r.value, r.abs_error, route_tag::integral};
}

identity_report s2_crossroute_check(double x, period_pair w) {
    identity_report r = s2_report(identity_id::s2_crossroute, cplx(x), w, 1e-6);
    r.lhs = log_s2_gratio(cplx(x), w).value;
    r.rhs = log_s2_integral(x, w).value;
    finish_report(r);
    return r;
}

identity_report s2_symmetry_check(double x, period_pair w) {
    identity_report r = s2_report(identity_id::s2_symmetry, cplx(x), w, 1e-10);
    r.status = identity_status::derived_observation;
    r.lhs = log_s2_integral(x, w).value;
    r.rhs = log_s2_integral(x, period_pair{w.omega2, w.omega1}).value;
    finish_report(r);
    return r;
}

identity_report s2_inversion_check(cplx x, period_pair w) {
    identity_report r = s2_report(identity_id::s2_inversion, x, w, 1e-6);
    r.status = identity_status::derived_observation;
    r.lhs = log_s2_gratio(x, w).value;
    r.rhs = -log_s2_gratio(w.omega1 + w.omega2 - x, w).value;
    finish_report(r);
    return r;
}

identity_report s2_shift_check(cplx x, period_pair w) {
    identity_report r = s2_report(identity_id::s2_shift, x, w, 1e-5);
    r.status = identity_status::derived_observation;
    r.lhs = log_s2_gratio(x + w.omega1, w).value - log_s2_gratio(x, w).value;
    r.rhs = -std::log(2.0 * std::sin(M_PI * x / w.omega2));
    finish_report(r);
    return r;
}

} // namespace gammamorphic
