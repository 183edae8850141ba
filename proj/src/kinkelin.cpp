// K(x), omega-tilde, Glaisher-Kinkelin, and Kinkelin's identities.

#include "gammamorphic/kinkelin.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gammamorphic/barnes_g.hpp"
#include "gammamorphic/quadrature.hpp"
#include "gammamorphic/special_base.hpp"

namespace gammamorphic {
namespace {

const double log_2pi = std::log(2.0 * std::numbers::pi);

double omega_zeta_series() {
    // (1/2) ln omega-tilde = -1/24 + gamma/3
    //   + sum_{l>=1} (zeta(2l+1) - 1)/((2l+1)(2l+3)).
    // Terms fall like 4^{-l}; forty of them land far below 1e-16.
    static const double half_ln_omega = [] {
        double s = -1.0 / 24.0 + euler_gamma() / 3.0;
        for (int l = 1; l <= 40; ++l) {
            const double z =
                riemann_zeta(cplx(double(2 * l + 1))).real() - 1.0;
            s += z / (double(2 * l + 1) * double(2 * l + 3));
        }
        return s;
    }();
    return 2.0 * half_ln_omega;
}

} // namespace

value_with_error log_k(cplx x) {
    if (x.real() <= 0.0)
        throw domain_error("log_k: needs Re x > 0");
    const value_with_error ig = integral_log_gamma(x);
    const cplx v = ig.value + 0.5 * x * (x - 1.0) - 0.5 * x * log_2pi;
    return {v, ig.abs_error + 1e-16 * std::abs(v), route_tag::closed_form};
}

value_with_error omega_tilde(omega_route route, int prelimit_n) {
    switch (route) {
    case omega_route::zeta_series:
        return {omega_zeta_series(), 1e-15, route_tag::zeta_series};
    case omega_route::prelimit: {
        const int n = prelimit_n;
        if (n < 2) throw domain_error("omega_tilde: prelimit needs n >= 2");
        // Exact for every n: send x -> 0 in the multiplication formula;
        // the K(x)^n factor and ln K(nx) both vanish, leaving
        // ln omega = ln n/(6(n^2-1)) + (2n/(n^2-1)) sum_j ln K(j/n).
        double s = 0.0;
        double err = 0.0;
        for (int j = 1; j <= n - 1; ++j) {
            const value_with_error k = log_k(cplx(double(j) / double(n)));
            s += k.value.real();
            err += k.abs_error;
        }
        const double nn = double(n) * double(n);
        const double v = std::log(double(n)) / (6.0 * (nn - 1.0)) +
                         2.0 * double(n) / (nn - 1.0) * s;
        return {v, 2.0 * double(n) / (nn - 1.0) * err + 1e-15,
                route_tag::prelimit};
    }
    case omega_route::integral_of_ln_k: {
        const quadrature_result q = integrate_finite(
            [](double t) { return cplx(log_k(cplx(t)).value.real()); }, 0.0,
            1.0, 1e-11);
        return {2.0 * q.value.real(), 2.0 * q.abs_error + 1e-13,
                route_tag::integral_of_ln_k};
    }
    }
    throw domain_error("omega_tilde: unknown route");
}

value_with_error glaisher_constant() {
    const value_with_error w = omega_tilde(omega_route::zeta_series);
    const double v = std::exp(0.5 * w.value.real() + 1.0 / 12.0);
    return {v, (0.5 * w.abs_error + 1e-16) * v, route_tag::zeta_series};
}

identity_report kinkelin_multiplication_check(int n, double x) {
    if (n < 2)
        throw domain_error("kinkelin_multiplication_check: needs n >= 2");
    if (x <= 0.0)
        throw domain_error("kinkelin_multiplication_check: needs x > 0");
    identity_report rep;
    rep.id = identity_id::kinkelin_mult;
    rep.params["n"] = double(n);
    rep.params["x"] = x;
    rep.tolerance = 1e-9;
    rep.status = identity_status::verified;

    const double dn = double(n);
    const double nx = dn * x;
    double rhs = (nx * (nx - 1.0) / 2.0 + 1.0 / 12.0) * std::log(dn) -
                 0.5 * (dn * dn - 1.0) *
                     omega_tilde(omega_route::zeta_series).value.real();
    for (int j = 0; j <= n - 1; ++j)
        rhs += dn * log_k(cplx(x + double(j) / dn)).value.real();
    rep.lhs = log_k(cplx(nx)).value;
    rep.rhs = cplx(rhs);
    finish_report(rep);
    return rep;
}

identity_report raabe_analog_check(double x) {
    if (x <= 0.0) throw domain_error("raabe_analog_check: needs x > 0");
    identity_report rep;
    rep.id = identity_id::raabe_analog;
    rep.params["x"] = x;
    rep.tolerance = 1e-8;
    rep.status = identity_status::ambiguous_resolved;

    const double closed =
        0.5 * omega_tilde(omega_route::zeta_series).value.real() +
        0.25 * x * x * (2.0 * std::log(x) - 1.0);
    const quadrature_result q_ln = integrate_finite(
        [](double t) { return cplx(log_k(cplx(t)).value.real()); }, x,
        x + 1.0, 1e-11);
    const quadrature_result q_plain = integrate_finite(
        [](double t) { return cplx(std::exp(log_k(cplx(t)).value.real())); },
        x, x + 1.0, 1e-11);

    rep.lhs = q_ln.value;
    rep.rhs = cplx(closed);
    finish_report(rep);
    std::ostringstream os;
    os << "integrand ln K matches the closed form to "
       << std::abs(q_ln.value.real() - closed)
       << "; the literal K reading misses by "
       << std::abs(q_plain.value.real() - closed)
       << "; ln K reading adopted";
    rep.notes = os.str();
    return rep;
}

} // namespace gammamorphic
