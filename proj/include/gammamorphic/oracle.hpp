#ifndef GAMMAMORPHIC_ORACLE_HPP
#define GAMMAMORPHIC_ORACLE_HPP

// Exact integer-point oracles.  These never touch the floating-point
// routes they are used to test: everything here is integer recursion on
// arbitrary-precision values, converted to (log-)doubles only at the
// comparison boundary.

#include "gammamorphic/exact.hpp"
#include "gammamorphic/types.hpp"

namespace gammamorphic {

// Exact function value at an integer point.
struct exact_value {
    exact_rat v;

    double to_double() const { return v.convert_to<double>(); }
    // Accurate natural log for values whose magnitude far exceeds binary64.
    double log() const;
};

// Arguments above this make the recursions grow past any sane test budget.
constexpr int oracle_arg_cap = 50;

// G(n) = prod_{k=1}^{n-2} k!  (empty product for n <= 2), n >= 1.
exact_value g_integer(int n);

// K(n) = prod_{j=1}^{n-1} j^j, n >= 1.
exact_value k_integer(int n);

// Higher multiple gamma at integers: G_order(x+1) = G_{order-1}(x) G_order(x),
// G_order(1) = 1, G_1 = Gamma.
exact_value gn_integer(int order, int n);

// Higher Kinkelin at integers: K_order(x+1) = x^(x^order) K_order(x).
exact_value kn_integer(int order, int n);

// Brute-force quarter-lattice power sum over 0 <= m, n <= box,
// (m, n) != (0, 0):  sum (x / (m + n alpha))^p.  Backs tail bounds for the
// lattice product, where each log-factor is O(|x/w|^3).
cplx lattice_sum_brute(cplx x, cplx alpha, int p, int box);

} // namespace gammamorphic

#endif
