#include "gammamorphic/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

namespace gammamorphic {

namespace {

// log of a positive cpp_int: shift down to ~53 significant bits, take the
// double log of the mantissa, add back bits * ln 2.
double log_big(const exact_int& v) {
    if (v <= 0) throw domain_error("oracle: log of nonpositive exact value");
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits <= 60) return std::log(v.convert_to<double>());
    const unsigned shift = bits - 60;
    const double mant = exact_int(v >> shift).convert_to<double>();
    return std::log(mant) + static_cast<double>(shift) * 0.69314718055994530942;
}

void require_arg(int order, int n) {
    if (order < 1 || order > 8)
        throw domain_error("oracle: order outside [1, 8]");
    if (n < 1) throw domain_error("oracle: argument must be a positive integer");
    if (n > oracle_arg_cap)
        throw overflow_policy_error("oracle: argument above cap " +
                                    std::to_string(oracle_arg_cap));
}

exact_int factorial(int n) {
    exact_int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

double exact_value::log() const {
    return log_big(boost::multiprecision::numerator(v)) -
           log_big(boost::multiprecision::denominator(v));
}

exact_value g_integer(int n) {
    require_arg(1, n);
    exact_int g = 1;
    for (int k = 1; k <= n - 2; ++k) g *= factorial(k);
    return {exact_rat(g)};
}

exact_value k_integer(int n) { return kn_integer(1, n); }

exact_value gn_integer(int order, int n) {
    require_arg(order, n);
    // col[x] holds G_j(x) while sweeping j upward; G_1(x) = (x-1)!.
    std::vector<exact_int> col(static_cast<size_t>(n) + 1, 1);
    for (int x = 1; x <= n; ++x) col[static_cast<size_t>(x)] = factorial(x - 1);
    for (int j = 2; j <= order; ++j) {
        std::vector<exact_int> next(col.size(), 1);
        for (int x = 1; x < n; ++x)
            next[static_cast<size_t>(x) + 1] =
                col[static_cast<size_t>(x)] * next[static_cast<size_t>(x)];
        col = std::move(next);
    }
    return {exact_rat(col[static_cast<size_t>(n)])};
}

exact_value kn_integer(int order, int n) {
    require_arg(order, n);
    exact_int k = 1;
    for (int x = 1; x < n; ++x) {
        // exponent x^order stays comfortably in 64 bits under the caps
        unsigned long long e = 1;
        for (int i = 0; i < order; ++i) e *= static_cast<unsigned long long>(x);
        k *= boost::multiprecision::pow(exact_int(x), e);
    }
    return {exact_rat(k)};
}

cplx lattice_sum_brute(cplx x, cplx alpha, int p, int box) {
    if (p < 2) throw domain_error("lattice_sum_brute: exponent must be >= 2");
    cplx s = 0.0;
    for (int m = box; m >= 0; --m)
        for (int n = box; n >= 0; --n) {
            if (m == 0 && n == 0) continue;
            const cplx w = static_cast<double>(m) + static_cast<double>(n) * alpha;
            s += std::pow(x / w, static_cast<double>(p));
        }
    return s;
}

} // namespace gammamorphic
