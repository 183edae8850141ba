#ifndef GAMMAMORPHIC_MULTI_GAMMA_HPP
#define GAMMAMORPHIC_MULTI_GAMMA_HPP

// The gamma hierarchy G_n and its Kinkelin companions K_n:
//   G_n(x+1) = G_{n-1}(x) G_n(x),  G_n(1) = 1,  G_1 = Gamma, G_2 = G,
//   K_n(x+1) = x^{x^n} K_n(x),     K_n(1) = 1,  K_1 = K.
// G_n comes from a Malmsten-type integral over the kernel P_n; K_n is
// reached from the G_j through an exact finite-difference conversion.

#include <cstdint>
#include <vector>

#include "gammamorphic/types.hpp"

namespace gammamorphic {

// Integral kernel of ln G_n:  ln G_n(x) = int_0^inf (e^{-u}/u) P_n(x) du,
// where, with g = 1/(1 - e^{-u}) and falling factorials [x]_k,
//   P_n(x+1) = sum_{i=0}^n (-1)^i ([x]_{n-i} / (n-i)!) g^i
//              + (-1)^{n+1} e^{-x u} g^n.
// The terms blow up like u^{-n} as u -> 0+ while the sum stays O(u); below
// the seam the evaluation runs through u^n P_n as a power series with the
// vanishing head cancelled analytically.
struct pn_kernel {
    explicit pn_kernel(int n);

    int n() const { return n_; }

    // P_n(x) at u > 0.  Satisfies P_{n+1}(x+1) - P_{n+1}(x) = P_n(x).
    cplx at(cplx x, double u) const;

private:
    int n_;
};

// Coefficients of the polynomial Delta^j x^n (ascending powers of x),
// Delta f(x) := f(x+1) - f(x), computed exactly over integers.  Degree
// n - j; identically zero once j > n.
std::vector<std::int64_t> delta_power_coeffs(int j, int n);

// ln G_n(x).  n = 1 delegates to log_gamma, n = 2 to the Barnes routes;
// n >= 3 integrates the P_n kernel directly, which needs Re x > 0.
value_with_error log_gn(int n, cplx x);

// ln K_n(x) through the finite-difference conversion
//   ln K_n(x) = sum_{j=0}^n (-1)^j (Delta^j x^n) ln G_{j+1}(x+j).
// The subscript is j+1, not j: only that offset makes the right side
// telescope to x^n ln x under x -> x+1, and only it reproduces the
// big-integer recursion values.  Requires Re x > 0.
value_with_error kn_conversion(int n, cplx x);

// ln K_n(x).  One authoritative path: this is kn_conversion with the
// argument checks up front.
value_with_error log_kn(int n, cplx x);

} // namespace gammamorphic

#endif
