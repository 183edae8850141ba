#include "gammamorphic/special_base.hpp"

#include <cmath>
#include <mutex>
#include <typeinfo>
#include <vector>

namespace gammamorphic {

const char* route_name(route_tag r) {
    switch (r) {
        case route_tag::series:           return "series";
        case route_tag::weierstrass:      return "weierstrass";
        case route_tag::asymptotic:       return "asymptotic";
        case route_tag::integral:         return "integral";
        case route_tag::euler_limit:      return "euler-limit";
        case route_tag::recursion:        return "series+recursion";
        case route_tag::closed_form:      return "closed-form";
        case route_tag::zeta_series:      return "zeta-series";
        case route_tag::prelimit:         return "prelimit";
        case route_tag::integral_of_ln_k: return "integral-of-ln-k";
        case route_tag::g_ratio:          return "g-ratio";
        case route_tag::lattice:          return "lattice";
        case route_tag::conversion:       return "conversion";
        case route_tag::q_product:        return "q-product";
        case route_tag::auto_route:       return "auto";
    }
    return "auto";
}

const char* error_kind(const error& e) {
    if (dynamic_cast<const pole_error*>(&e)) return "PoleError";
    if (dynamic_cast<const zero_error*>(&e)) return "ZeroError";
    if (dynamic_cast<const route_domain_error*>(&e)) return "RouteDomainError";
    if (dynamic_cast<const non_convergence*>(&e)) return "NonConvergence";
    if (dynamic_cast<const divergent_series*>(&e)) return "DivergentSeries";
    if (dynamic_cast<const singular_integrand*>(&e)) return "SingularIntegrand";
    if (dynamic_cast<const noisy_function*>(&e)) return "NoisyFunction";
    if (dynamic_cast<const overflow_policy_error*>(&e)) return "OverflowPolicy";
    if (dynamic_cast<const domain_error*>(&e)) return "DomainError";
    return "Error";
}

// ---------------------------------------------------------------------------
// Bernoulli numbers, exact.  B1 = -1/2; odd indices beyond 1 vanish.

namespace {

exact_int binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    exact_int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

class bernoulli_cache {
public:
    exact_rat get(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        while ((int)table_.size() <= n) grow_one();
        return table_[n];
    }

private:
    // sum_{j<=n} C(n+1, j) B_j = 0 for n >= 1 pins each new entry.
    void grow_one() {
        int n = (int)table_.size();
        if (n == 0) { table_.emplace_back(1); return; }
        exact_rat acc = 0;
        for (int j = 0; j < n; ++j)
            acc += exact_rat(binomial_exact(n + 1, j)) * table_[j];
        table_.push_back(-acc / exact_rat(n + 1));
    }

    std::mutex mu_;
    std::vector<exact_rat> table_;
};

bernoulli_cache& bern_cache() {
    static bernoulli_cache c;
    return c;
}

bool is_nonpositive_integer(cplx z) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

} // namespace

exact_rat bernoulli_number(int n) {
    if (n < 0) throw domain_error("bernoulli_number: negative index");
    return bern_cache().get(n);
}

double bernoulli_number_d(int n) {
    return bernoulli_number(n).convert_to<double>();
}

cplx bernoulli_poly(int p, cplx x) {
    if (p < 0) throw domain_error("bernoulli_poly: negative degree");
    // Horner in x: the coefficient of x^{p-k} is C(p,k) B_k.
    cplx acc = 0.0;
    for (int k = 0; k <= p; ++k) {
        exact_rat c = exact_rat(binomial_exact(p, k)) * bernoulli_number(k);
        acc = acc * x + c.convert_to<double>();
    }
    return acc;
}

// ---------------------------------------------------------------------------
// log Gamma.

namespace {

// Stirling region: |z| comfortably large, right half plane.
bool stirling_ok(cplx z) {
    if (z.real() >= 10.0) return true;
    return z.real() >= 0.0 && std::abs(z.imag()) >= 10.0;
}

// ln Gamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum B_2k / (2k(2k-1) z^(2k-1)).
// Caller guarantees stirling_ok(z).  Returns value and last-term bound.
std::pair<cplx, double> log_gamma_stirling(cplx z) {
    const cplx lz = std::log(z);
    cplx acc = (z - 0.5) * lz - z + 0.918938533204672741780329736406; // ln(2pi)/2
    const cplx z2 = 1.0 / (z * z);
    cplx zp = 1.0 / z;
    double last = 0.0;
    for (int k = 1; k <= 12; ++k) {
        const double c = bernoulli_number_d(2 * k) / ((2.0 * k) * (2.0 * k - 1.0));
        const cplx term = c * zp;
        acc += term;
        last = std::abs(term);
        zp *= z2;
    }
    return {acc, last};
}

} // namespace

value_with_error log_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw pole_error("log_gamma: pole at non-positive integer");
    int shift = 0;
    cplx zs = z;
    while (!stirling_ok(zs)) {
        zs += 1.0;
        ++shift;
        if (shift > 200) throw domain_error("log_gamma: argument too far left");
    }
    auto [val, tail] = log_gamma_stirling(zs);
    // ln Gamma(z) = ln Gamma(z + m) - sum_{j<m} ln(z + j)
    for (int j = shift - 1; j >= 0; --j) val -= std::log(z + (double)j);
    const double eps = 2.2e-16;
    return {val, tail + (shift + 2) * eps * (std::abs(val) + 1.0),
            route_tag::asymptotic};
}

// ---------------------------------------------------------------------------
// digamma / polygamma.

cplx digamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw pole_error("digamma: pole at non-positive integer");
    cplx acc = 0.0;
    while (!stirling_ok(z)) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) = ln z - 1/(2z) - sum B_2k / (2k z^2k)
    acc += std::log(z) - 0.5 / z;
    const cplx z2 = 1.0 / (z * z);
    cplx zp = z2;
    for (int k = 1; k <= 10; ++k) {
        acc -= bernoulli_number_d(2 * k) / (2.0 * k) * zp;
        zp *= z2;
    }
    return acc;
}

cplx polygamma(int k, cplx z) {
    if (k < 0) throw domain_error("polygamma: order must be >= 0");
    if (k == 0) return digamma(z);
    if (is_nonpositive_integer(z))
        throw pole_error("polygamma: pole at non-positive integer");
    // Shift into Re z > 0 where the Hurwitz-zeta form applies:
    // psi_k(z) = psi_k(z+1) - (-1)^k k! z^(-k-1).
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    const double sgn_shift = (k % 2 == 0) ? 1.0 : -1.0;
    cplx acc = 0.0;
    while (z.real() <= 0.0) {
        acc -= sgn_shift * kfact * std::pow(z, cplx(-(double)k - 1.0));
        z += 1.0;
    }
    const double sgn = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^(k+1)
    return acc + sgn * kfact * hurwitz_zeta(cplx((double)k + 1.0), z);
}

// ---------------------------------------------------------------------------
// Hurwitz zeta via Euler-Maclaurin.  J = 10 correction terms; the cutoff N
// grows until the first dropped correction is below 1e-16 of the partial sum.

namespace {

cplx hurwitz_zeta_em(cplx s, cplx a, int n_cut, double* dropped_rel) {
    const int j_corr = 10;
    cplx sum = 0.0;
    for (int k = 0; k < n_cut; ++k) sum += std::pow(a + (double)k, -s);
    const cplx an = a + (double)n_cut;
    const cplx lan = std::log(an);
    sum += std::exp((1.0 - s) * lan) / (s - 1.0);
    const cplx anms = std::exp(-s * lan);
    sum += 0.5 * anms;
    // correction_j = B_2j/(2j)! * (s)_(2j-1) * (a+N)^(-s-2j+1)
    cplx poch = s;                 // (s)_1
    cplx apow = anms / an;         // (a+N)^(-s-1)
    const cplx an2 = 1.0 / (an * an);
    double fact = 2.0;             // (2j)!
    cplx last_term = 0.0;
    for (int j = 1; j <= j_corr; ++j) {
        const double b = bernoulli_number_d(2 * j);
        last_term = (b / fact) * poch * apow;
        sum += last_term;
        // advance to j+1
        poch *= (s + (double)(2 * j - 1)) * (s + (double)(2 * j));
        apow *= an2;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    // estimate of the first dropped correction
    const double b_next = std::abs(bernoulli_number_d(2 * (j_corr + 1)));
    const double next = b_next / fact * std::abs(poch) * std::abs(apow);
    *dropped_rel = next / (std::abs(sum) + 1e-300);
    return sum;
}

} // namespace

cplx hurwitz_zeta(cplx s, cplx a) {
    if (s == cplx(1.0)) throw pole_error("hurwitz_zeta: pole at s = 1");
    if (s.real() <= 0.0)
        throw domain_error("hurwitz_zeta: requires Re s > 0");
    if (a.real() <= 0.0)
        throw domain_error("hurwitz_zeta: requires Re a > 0");
    int n_cut = 24;
    for (;;) {
        double rel = 0.0;
        const cplx v = hurwitz_zeta_em(s, a, n_cut, &rel);
        if (rel < 1e-16 || n_cut >= 4096) {
            if (rel >= 1e-12)
                throw non_convergence("hurwitz_zeta: Euler-Maclaurin stalled");
            return v;
        }
        n_cut *= 2;
    }
}

cplx riemann_zeta(cplx s) {
    return hurwitz_zeta(s, cplx(1.0));
}

double euler_gamma() {
    static const double g = -digamma(cplx(1.0)).real();
    return g;
}

} // namespace gammamorphic
