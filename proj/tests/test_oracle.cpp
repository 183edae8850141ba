#include "doctest.h"

#include "gammamorphic/oracle.hpp"

#include <cmath>

using namespace gammamorphic;

TEST_CASE("g_integer matches the superfactorial table") {
    // G(1) = G(2) = G(3) = 1, G(4) = 2, G(5) = 12, G(6) = 288.
    CHECK(g_integer(1).v == 1);
    CHECK(g_integer(2).v == 1);
    CHECK(g_integer(3).v == 1);
    CHECK(g_integer(4).v == 2);
    CHECK(g_integer(5).v == 12);
    CHECK(g_integer(6).v == 288);
    // G(13) = prod_{k=1}^{11} k!
    exact_rat p = 1;
    exact_rat f = 1;
    for (int k = 1; k <= 11; ++k) {
        f *= k;
        p *= f;
    }
    CHECK(g_integer(13).v == p);
}

TEST_CASE("k_integer matches the hyperfactorial table") {
    // K(1) = K(2) = 1, K(3) = 4, K(4) = 108, K(5) = 27648.
    CHECK(k_integer(1).v == 1);
    CHECK(k_integer(2).v == 1);
    CHECK(k_integer(3).v == 4);
    CHECK(k_integer(4).v == 108);
    CHECK(k_integer(5).v == 27648);
}

TEST_CASE("higher-order integer recursions") {
    // Order 1 collapses to the factorial ladder.
    CHECK(gn_integer(1, 6).v == 120);
    // G_2 = G.
    CHECK(gn_integer(2, 6).v == g_integer(6).v);
    // G_3(x+1) = G(x) G_3(x): G_3(5) = G(1)G(2)G(3)G(4) = 2.
    CHECK(gn_integer(3, 5).v == 2);
    CHECK(gn_integer(3, 6).v == 2 * 12);

    // K_2(x+1) = x^{x^2} K_2(x): K_2(3) = 1^1 * 2^4 = 16.
    CHECK(kn_integer(2, 3).v == 16);
    CHECK(kn_integer(3, 3).v == 256);
    CHECK(kn_integer(2, 4).v == exact_rat(exact_int(16) * boost::multiprecision::pow(exact_int(3), 9)));
}

TEST_CASE("exact_value log handles values beyond binary64") {
    // K(50) overflows double; its log must still be finite and accurate.
    const double lk = k_integer(50).log();
    // sum_{j=1}^{49} j ln j computed in long double as a cross-check.
    long double s = 0.0L;
    for (int j = 2; j <= 49; ++j) s += static_cast<long double>(j) * std::log(static_cast<long double>(j));
    CHECK(std::isfinite(lk));
    CHECK(std::abs(lk - static_cast<double>(s)) < 1e-10 * std::abs(static_cast<double>(s)));
    CHECK(g_integer(6).log() == doctest::Approx(std::log(288.0)).epsilon(1e-14));
}

TEST_CASE("oracle refuses arguments past the overflow cap") {
    CHECK_THROWS_AS(g_integer(51), overflow_policy_error);
    CHECK_THROWS_AS(kn_integer(2, 51), overflow_policy_error);
    CHECK_THROWS_AS(g_integer(0), domain_error);
    CHECK_NOTHROW(g_integer(50));
}

TEST_CASE("lattice_sum_brute basic sanity") {
    // x = alpha = 1, p = 4, box = 1: points (0,1), (1,0), (1,1) -> 1 + 1 + 1/16.
    const cplx s = lattice_sum_brute(cplx(1.0), cplx(1.0), 4, 1);
    CHECK(std::abs(s - cplx(2.0625)) < 1e-15);
    // Larger boxes only add positive terms for real alpha > 0.
    const cplx s2 = lattice_sum_brute(cplx(1.0), cplx(1.0), 4, 40);
    CHECK(s2.real() > s.real());
    CHECK(std::abs(s2.imag()) < 1e-15);
    // x scales out as x^p.
    const cplx s3 = lattice_sum_brute(cplx(2.0), cplx(1.0), 4, 40);
    CHECK(std::abs(s3 - 16.0 * s2) < 1e-12);
}
