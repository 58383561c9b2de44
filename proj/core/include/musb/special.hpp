#pragma once

#include "musb/mu_param.hpp"

namespace musb::special {

/// mu-deformed factorial gamma_mu(n): gamma_mu(0) = 1,
/// gamma_mu(n) = (n + 2*mu*[n odd]) * gamma_mu(n-1).
/// Reduces to n! at mu = 0.  Overflows to +inf for n beyond ~170.
double gamma_mu(int n, double mu);

/// mu-deformed exponential, sum_{n>=0} z^n / gamma_mu(n).  Entire in z.
/// Throws std::runtime_error if the series fails to settle within the
/// hard term cap (does not happen for finite arguments in range).
Complex exp_mu(Complex z, double mu);

/// Termwise derivative of exp_mu: sum_{n>=1} n z^{n-1} / gamma_mu(n).
Complex exp_mu_prime(Complex z, double mu);

/// Euler Gamma for x > 0 via a fixed-order Lanczos rational approximation.
double gamma_euler(double x);

/// Macdonald function K_nu(x) for x > 0, even in nu, |nu| <= 50.
double bessel_k(double nu, double x);

} // namespace musb::special
