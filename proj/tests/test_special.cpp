#include "doctest.h"

#include "musb/special.hpp"
#include "test_util.hpp"

#include <cmath>
#include <complex>

using musb::Complex;
using namespace musb::special;
using testutil::rel_err;

namespace {

// independent 200-term long-double summation used as the series oracle
Complex exp_mu_oracle(Complex z, double mu, bool derivative) {
    std::complex<long double> w(z.real(), z.imag());
    std::complex<long double> sum = 0.0L;
    long double gamma = 1.0L;
    std::complex<long double> pw = 1.0L;
    for (int n = 0; n <= 200; ++n) {
        if (n > 0) {
            gamma *= n + 2.0L * (long double)mu * (n & 1);
            pw *= w;
        }
        if (derivative) {
            if (n >= 1) sum += (long double)n * (pw / w) / gamma;
        } else {
            sum += pw / gamma;
        }
    }
    return Complex((double)sum.real(), (double)sum.imag());
}

// independent route: exp-sinh quadrature of the cosh integral representation
// K_nu(x) = int_0^inf exp(-x cosh u) cosh(nu u) du (adequate for moderate x)
double bessel_k_cosh_oracle(double nu, double x) {
    const double c = M_PI / 2.0;
    const double h = 1.0 / 64.0;
    // s = 0 maps to u = 1 with weight c cosh(0) u = c
    double total = std::exp(-x * std::cosh(1.0)) * std::cosh(nu) * c;
    for (int sign = 0; sign < 2; ++sign) {
        int stall = 0;
        for (int k = 1; k * h <= 6.0; ++k) {
            const double s = (sign ? -1.0 : 1.0) * k * h;
            const double u = std::exp(c * std::sinh(s));
            const double w = c * std::cosh(s) * u;
            const double a = -x * std::cosh(u);
            if (a < -745.0) break;
            const double term = 0.5 * (std::exp(a + nu * u) + std::exp(a - nu * u)) * w;
            total += term;
            if (std::fabs(term) <= 1e-17 * std::fabs(total)) {
                if (++stall >= 3) break;
            } else {
                stall = 0;
            }
        }
    }
    return total * h;
}

} // namespace

TEST_SUITE("special") {

TEST_CASE("gamma_mu recursion values") {
    CHECK(gamma_mu(0, 0.7) == 1.0);
    CHECK(gamma_mu(0, -0.3) == 1.0);
    CHECK(gamma_mu(3, 0.0) == 6.0);
    CHECK(gamma_mu(3, 1.0) == 30.0); // 1 -> 3, 2 -> 6, 3 -> (3+2)*6
    CHECK_THROWS_AS(gamma_mu(2, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(gamma_mu(2, -0.8), std::invalid_argument);
    CHECK_THROWS_AS(gamma_mu(-1, 0.0), std::invalid_argument);
}

TEST_CASE("gamma_mu positive on grid up to n = 200") {
    for (double mu : {-0.49, -0.25, 0.0, 0.5, 1.0, 5.0})
        for (int n = 0; n <= 200; ++n)
            CHECK(gamma_mu(n, mu) > 0.0);
}

TEST_CASE("gamma_0 equals factorial") {
    double fact = 1.0;
    for (int n = 0; n <= 20; ++n) {
        if (n > 0) fact *= n;
        CHECK(rel_err(gamma_mu(n, 0.0), fact) <= 1e-14);
    }
}

TEST_CASE("exp_mu basic values") {
    CHECK(exp_mu(Complex(0.0), 0.7) == Complex(1.0));
    CHECK(rel_err(exp_mu(Complex(1.0), 0.0), std::exp(1.0)) <= 1e-15);
    // frozen from a 50-digit 200-term evaluation
    CHECK(rel_err(exp_mu(Complex(1.0), 1.0), 1.5430806348152437785) <= 1e-15);
    CHECK(rel_err(exp_mu(Complex(2.3), -0.3), 26.342601290366743993) <= 1e-14);
    CHECK(rel_err(exp_mu(Complex(0.7, -0.4), 1.5),
                  Complex(1.215108116221061446, -0.18295623438751774939)) <= 1e-14);
}

TEST_CASE("exp_mu matches the long-double series oracle") {
    for (double mu : {-0.3, 0.0, 0.9, 2.5})
        for (Complex z : {Complex(1.0), Complex(-2.2, 0.0), Complex(0.3, 1.7),
                          Complex(-4.0, -3.0)})
            CHECK(rel_err(exp_mu(z, mu), exp_mu_oracle(z, mu, false)) <= 1e-14);
}

TEST_CASE("exp_0 agrees with the classical exponential") {
    for (double re : {-10.0, -4.0, -0.5, 0.0, 3.0, 10.0})
        for (double im : {-9.0, 0.0, 2.5, 8.0}) {
            const Complex z(re, im);
            if (std::abs(z) > 10.0) continue;
            CHECK(rel_err(exp_mu(z, 0.0), std::exp(z)) <= 1e-13);
        }
}

TEST_CASE("exp_mu bounded on the imaginary axis for mu >= 0") {
    for (double mu : {0.0, 0.5, 2.0})
        for (int i = 0; i <= 80; ++i) {
            const double x = -20.0 + 0.5 * i;
            CHECK(std::abs(exp_mu(Complex(0.0, x), mu)) <= 1.0 + 1e-12);
        }
}

TEST_CASE("exp_mu_prime values") {
    CHECK(exp_mu_prime(Complex(0.0), 0.0) == Complex(1.0));
    CHECK(rel_err(exp_mu_prime(Complex(0.5), 0.0), std::exp(0.5)) <= 1e-14);
    // frozen from a 50-digit 200-term evaluation
    CHECK(rel_err(exp_mu_prime(Complex(1.0), 1.0), 0.80732175247235913529) <= 1e-14);
    for (double mu : {-0.2, 0.8})
        for (Complex z : {Complex(1.3), Complex(-0.7, 2.0)})
            CHECK(rel_err(exp_mu_prime(z, mu), exp_mu_oracle(z, mu, true)) <= 1e-14);
}

TEST_CASE("gamma_euler classical values") {
    CHECK(rel_err(gamma_euler(0.5), std::sqrt(M_PI)) <= 1e-14);
    CHECK(rel_err(gamma_euler(1.0), 1.0) <= 1e-14);
    CHECK(rel_err(gamma_euler(4.0), 6.0) <= 1e-14);
    // frozen 50-digit references
    CHECK(rel_err(gamma_euler(0.3), 2.9915689876875906283) <= 1e-13);
    CHECK(rel_err(gamma_euler(7.5), 1871.2543057977883465) <= 1e-13);
    CHECK(rel_err(gamma_euler(41.7), 1.0951746477688031742e49) <= 1e-13);
    CHECK_THROWS_AS(gamma_euler(0.0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_euler(-2.0), std::invalid_argument);
}

TEST_CASE("gamma_euler vs library gamma on (0, 50]") {
    for (int i = 1; i <= 500; ++i) {
        const double x = 0.1 * i;
        CHECK(rel_err(gamma_euler(x), std::tgamma(x)) <= 1e-13);
    }
    CHECK(rel_err(gamma_euler(0.003), std::tgamma(0.003)) <= 1e-13);
}

TEST_CASE("bessel_k half-integer closed forms") {
    const double k_half_1 = std::sqrt(M_PI / 2.0) * std::exp(-1.0);
    CHECK(rel_err(bessel_k(0.5, 1.0), k_half_1) <= 1e-10);
    CHECK(rel_err(bessel_k(-0.5, 1.0), k_half_1) <= 1e-10);
    CHECK(rel_err(bessel_k(0.5, 1.0), 0.46106850444789455844) <= 1e-12);
    for (double x : {0.05, 0.4, 1.0, 3.0, 11.0, 30.0}) {
        const double k12 = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
        CHECK(rel_err(bessel_k(0.5, x), k12) <= 1e-12);
        CHECK(rel_err(bessel_k(1.5, x), k12 * (1.0 + 1.0 / x)) <= 1e-12);
        CHECK(rel_err(bessel_k(2.5, x), k12 * (1.0 + 3.0 / x + 3.0 / (x * x))) <= 1e-12);
    }
}

TEST_CASE("bessel_k frozen references across the order range") {
    // 50-digit values
    CHECK(rel_err(bessel_k(1.3, 2.0), 0.16082436361104641615) <= 1e-12);
    CHECK(rel_err(bessel_k(5.5, 0.04), 57826005243.710950559) <= 1e-12);
    CHECK(rel_err(bessel_k(0.2, 3.7), 0.015706292156694334462) <= 1e-12);
    CHECK(rel_err(bessel_k(3.0, 0.5), 62.057909529930256386) <= 1e-12);
    CHECK(rel_err(bessel_k(2.5, 0.7), 8.4863415928013835719) <= 1e-12);
}

TEST_CASE("bessel_k agrees with the cosh-integral route") {
    for (double nu : {0.0, 0.3, 1.3, 2.0, 4.5})
        for (double x : {0.3, 1.0, 2.0, 7.0})
            CHECK(rel_err(bessel_k(nu, x), bessel_k_cosh_oracle(nu, x)) <= 1e-10);
}

TEST_CASE("bessel_k even in the order and positive") {
    for (double nu : {0.1, 0.75, 1.5, 3.2, 7.0})
        for (double x : {1e-8, 0.02, 0.9, 4.0, 40.0}) {
            CHECK(bessel_k(nu, x) > 0.0);
            CHECK(rel_err(bessel_k(nu, x), bessel_k(-nu, x)) <= 1e-12);
        }
    CHECK_THROWS_AS(bessel_k(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k(0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k(51.0, 1.0), std::invalid_argument);
}

} // TEST_SUITE

