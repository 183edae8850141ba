#include "doctest.h"

#include "gammamorphic/special_base.hpp"

#include <cmath>
#include <complex>

using namespace gammamorphic;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("log_gamma at half-integer and integer anchors") {
    // Gamma(1/2) = sqrt(pi), Gamma(5) = 24, Gamma(1) = Gamma(2) = 1.
    CHECK(std::abs(log_gamma(cplx(0.5)).value - 0.5 * std::log(pi)) < 1e-14);
    CHECK(std::abs(log_gamma(cplx(5.0)).value - std::log(24.0)) < 1e-14);
    CHECK(std::abs(log_gamma(cplx(1.0)).value) < 1e-14);
    CHECK(std::abs(log_gamma(cplx(2.0)).value) < 1e-14);
}

TEST_CASE("log_gamma recurrence and reflection spot checks") {
    const cplx z(0.3, 0.7);
    const cplx lhs = log_gamma(z + 1.0).value;
    const cplx rhs = log_gamma(z).value + std::log(z);
    CHECK(std::abs(lhs - rhs) < 1e-14);

    // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
    const double y = 1.25;
    const cplx g = std::exp(log_gamma(cplx(0.5, y)).value);
    const double mod2 = std::norm(g);
    CHECK(std::abs(mod2 - pi / std::cosh(pi * y)) < 1e-13);
}

TEST_CASE("log_gamma pole reporting") {
    CHECK_THROWS_AS(log_gamma(cplx(0.0)), pole_error);
    CHECK_THROWS_AS(log_gamma(cplx(-3.0)), pole_error);
    CHECK_NOTHROW(log_gamma(cplx(-3.5)));
}

TEST_CASE("digamma closed forms") {
    // psi(1) = -gamma, psi(1/2) = -gamma - 2 ln 2, psi(2) = 1 - gamma.
    const double g = euler_gamma();
    CHECK(std::abs(digamma(cplx(1.0)).real() + g) < 1e-14);
    CHECK(std::abs(digamma(cplx(0.5)).real() + g + 2.0 * std::log(2.0)) < 1e-13);
    CHECK(std::abs(digamma(cplx(2.0)).real() - (1.0 - g)) < 1e-14);
}

TEST_CASE("polygamma closed forms") {
    // psi'(1) = zeta(2) = pi^2/6, psi'(1/2) = pi^2/2, psi''(1) = -2 zeta(3).
    CHECK(std::abs(polygamma(1, cplx(1.0)).real() - pi * pi / 6.0) < 1e-13);
    CHECK(std::abs(polygamma(1, cplx(0.5)).real() - pi * pi / 2.0) < 1e-12);
    CHECK(std::abs(polygamma(2, cplx(1.0)).real() + 2.0 * 1.2020569031595943) < 1e-12);
}

TEST_CASE("riemann zeta reference values") {
    CHECK(std::abs(riemann_zeta(cplx(2.0)).real() - pi * pi / 6.0) < 1e-14);
    CHECK(std::abs(riemann_zeta(cplx(3.0)).real() - 1.2020569031595943) < 1e-14);
    CHECK(std::abs(riemann_zeta(cplx(4.0)).real() - pi * pi * pi * pi / 90.0) < 1e-14);
    // zeta(1/2) from standard tables.
    CHECK(std::abs(riemann_zeta(cplx(0.5)).real() + 1.4603545088095868) < 1e-12);
}

TEST_CASE("hurwitz zeta against rational rearrangements") {
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    for (double s : {2.0, 3.0, 4.5}) {
        const cplx lhs = hurwitz_zeta(cplx(s), cplx(0.5));
        const cplx rhs = (std::pow(2.0, s) - 1.0) * riemann_zeta(cplx(s));
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
    // zeta(s, a+1) = zeta(s, a) - a^{-s}
    const cplx s(2.5), a(0.75);
    const cplx lhs = hurwitz_zeta(s, a + 1.0);
    const cplx rhs = hurwitz_zeta(s, a) - std::pow(a, -s);
    CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("hurwitz zeta rejects the pole and bad half-planes") {
    CHECK_THROWS_AS(hurwitz_zeta(cplx(1.0), cplx(1.0)), pole_error);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0), cplx(-1.0)), domain_error);
}

TEST_CASE("bernoulli numbers, exact and double") {
    CHECK(bernoulli_number(0) == exact_rat(1));
    CHECK(bernoulli_number(1) == exact_rat(-1, 2));
    CHECK(bernoulli_number(2) == exact_rat(1, 6));
    CHECK(bernoulli_number(3) == exact_rat(0));
    CHECK(bernoulli_number(12) == exact_rat(-691, 2730));
    CHECK(bernoulli_number_d(20) == doctest::Approx(-529.1242424242424).epsilon(1e-13));
}

TEST_CASE("bernoulli polynomial difference property") {
    // B_n(x+1) - B_n(x) = n x^{n-1}
    for (int n : {1, 2, 3, 6}) {
        const cplx x(0.8, 0.3);
        const cplx d = bernoulli_poly(n, x + 1.0) - bernoulli_poly(n, x);
        const cplx want = static_cast<double>(n) * std::pow(x, n - 1);
        CHECK(std::abs(d - want) < 1e-13 * (1.0 + std::abs(want)));
    }
    CHECK(std::abs(bernoulli_poly(4, cplx(0.0)) - cplx(-1.0 / 30.0)) < 1e-15);
}

TEST_CASE("euler gamma constant") {
    CHECK(euler_gamma() == doctest::Approx(0.5772156649015329).epsilon(1e-14));
}

TEST_CASE("error kinds carry stable names") {
    try {
        log_gamma(cplx(-2.0));
        CHECK(false);
    } catch (const error& e) {
        CHECK(std::string(error_kind(e)) == "PoleError");
    }
}
