#include "gammamorphic/multi_gamma.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "gammamorphic/barnes_g.hpp"
#include "gammamorphic/power_series.hpp"
#include "gammamorphic/quadrature.hpp"
#include "gammamorphic/special_base.hpp"

namespace gammamorphic {

namespace {

// Below the seam the kernel runs on series; above it the direct formula is
// already cancellation-free.  Well inside the series' radius 2 pi.
constexpr double kernel_seam = 0.75;
constexpr std::size_t kernel_order = 64;

// u / (1 - e^{-u}): regular at the origin, constant term 1.
const pseries& u_over_s1() {
    static const pseries b = [] {
        pseries s1 = pseries::constant(1.0, kernel_order);
        s1 -= pseries::exponential(-1.0, kernel_order);
        s1.shift_down(1);
        return pseries::constant(1.0, kernel_order) / s1;
    }();
    return b;
}

cplx falling(cplx x, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= x - double(i);
    return r;
}

double factorial(int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= double(i);
    return r;
}

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// P_n(y+1) for u >= seam, straight off the defining sum.
cplx pn_direct(int n, cplx y, double u) {
    const double g = 1.0 / (1.0 - std::exp(-u));
    cplx acc = 0.0;
    double gp = 1.0;
    for (int i = 0; i <= n; ++i) {
        const cplx ci = falling(y, n - i) / factorial(n - i);
        acc += (i % 2 ? -ci : ci) * gp;
        gp *= g;
    }
    // gp now holds g^{n+1}; step back one power for the exponential term.
    const double gn = gp / g;
    const cplx tail = std::exp(-y * u) * gn;
    acc += (n % 2 ? tail : -tail);
    return acc;
}

// Series for P_n(y+1)/u: the assembled u^n P_n has its first n+1
// coefficients cancel analytically, so the quotient keeps only the
// genuine O(u) content.
pseries pn_series(int n, cplx y) {
    pseries s(kernel_order);
    pseries bpow = pseries::constant(1.0, kernel_order);
    for (int i = 0; i <= n; ++i) {
        const cplx ci = falling(y, n - i) / factorial(n - i);
        const cplx signed_ci = i % 2 ? -ci : ci;
        const std::size_t up = std::size_t(n - i);
        for (std::size_t k = 0; k + up <= kernel_order; ++k)
            s[k + up] += signed_ci * bpow[k];
        if (i < n) bpow = bpow * u_over_s1();
    }
    // bpow has advanced to B^n, exactly the power the exponential term needs.
    pseries tail = pseries::exponential(-y, kernel_order) * bpow;
    tail *= n % 2 ? cplx(1.0) : cplx(-1.0);
    s += tail;
    s.shift_down(std::size_t(n) + 1);
    return s;
}

// e^{-u}/u P_n(x) for u >= seam.  The exponential kernel term carries
// e^{-(x-1)u}, which overflows alone when Re x < 1; folding the e^{-u}
// weight into it leaves e^{-xu}, decaying everywhere on Re x > 0.
cplx pn_weighted(int n, cplx x, double u) {
    const cplx y = x - 1.0;
    const double g = 1.0 / (1.0 - std::exp(-u));
    cplx acc = 0.0;
    double gp = 1.0;
    for (int i = 0; i <= n; ++i) {
        const cplx ci = falling(y, n - i) / factorial(n - i);
        acc += (i % 2 ? -ci : ci) * gp;
        gp *= g;
    }
    const double gn = gp / g;
    acc *= std::exp(-u);
    const cplx tail = std::exp(-x * u) * gn;
    acc += n % 2 ? tail : -tail;
    return acc / u;
}

void require_order(const char* who, int n) {
    if (n < 1)
        throw domain_error(std::string(who) + " needs order n >= 1, got n = " +
                           std::to_string(n));
}

void require_right_half(const char* who, cplx x) {
    if (!(x.real() > 0.0))
        throw domain_error(std::string(who) +
                           " needs Re x > 0 for the direct integral, got x = (" +
                           std::to_string(x.real()) + ", " +
                           std::to_string(x.imag()) + ")");
}

} // namespace

pn_kernel::pn_kernel(int n) : n_(n) { require_order("pn_kernel", n); }

cplx pn_kernel::at(cplx x, double u) const {
    const cplx y = x - 1.0;
    if (u < kernel_seam) return u * pn_series(n_, y).eval(u);
    return pn_direct(n_, y, u);
}

std::vector<std::int64_t> delta_power_coeffs(int j, int n) {
    if (j < 0 || n < 0)
        throw domain_error("delta_power_coeffs needs j, n >= 0");
    std::vector<std::int64_t> full(std::size_t(n) + 1, 0);
    for (int i = 0; i <= j; ++i) {
        const std::int64_t c = ((j - i) % 2 ? -1 : 1) * binom(j, i);
        // c * (x+i)^n, expanded over integer binomials.
        std::int64_t ipow = 1;
        for (int k = n; k >= 0; --k) {
            full[std::size_t(k)] += c * binom(n, k) * ipow;
            ipow *= i;
        }
    }
    if (j > n) return {0};
    // Degree drops by exactly one per difference; the head cancels exactly.
    full.resize(std::size_t(n - j) + 1);
    return full;
}

value_with_error log_gn(int n, cplx x) {
    require_order("log_gn", n);
    if (n == 1) return log_gamma(x);
    if (n == 2) return log_g(x);
    require_right_half("log_gn", x);
    const pseries ps = pn_series(n, x - 1.0);
    const auto f = [&ps, x, n](double u) -> cplx {
        if (u < kernel_seam) return std::exp(-u) * ps.eval(u);
        return pn_weighted(n, x, u);
    };
    const auto q = integrate_semi_infinite(f, 1e-12);
    return {q.value, q.abs_error, route_tag::integral};
}

value_with_error kn_conversion(int n, cplx x) {
    require_order("kn_conversion", n);
    require_right_half("kn_conversion", x);
    cplx acc = 0.0;
    double err = 0.0;
    for (int j = 0; j <= n; ++j) {
        const auto coeffs = delta_power_coeffs(j, n);
        cplx d = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;)
            d = d * x + double(coeffs[k]);
        const auto g = log_gn(j + 1, x + double(j));
        const cplx term = d * g.value;
        acc += j % 2 ? -term : term;
        err += std::abs(d) * g.abs_error;
    }
    return {acc, err + 1e-15 * std::abs(acc), route_tag::conversion};
}

value_with_error log_kn(int n, cplx x) { return kn_conversion(n, x); }

} // namespace gammamorphic
