#pragma once

#include "musb/mu_param.hpp"
#include "musb/polygauss.hpp"
#include "musb/quadrature.hpp"

namespace musb::heat {

/// Normalization constant (2t)^{-(mu+1/2)} / Gamma(mu+1/2).
double front_constant(const MuParam& p);

/// mu-deformed heat kernel
///   rho_{mu,t}(z,q) = (2t)^{-(mu+1/2)} Gamma(mu+1/2)^{-1}
///                     exp(-(z^2+q^2)/(2t)) exp_mu(z q / t),
/// entire in z; the complex overload is the analytic continuation in the
/// first variable.
Complex rho(const MuParam& p, Complex z, double q);
double rho(const MuParam& p, double x, double q);

/// One-variable kernel sigma_{mu,t}(q) = rho_{mu,t}(0,q) > 0.
double sigma(const MuParam& p, double q);

/// sigma_{mu,t} represented exactly in the PolyGauss class
/// (constant times exp(-q^2/(2t))).
PolyGauss sigma_polygauss(const MuParam& p);

/// sqrt(sigma_{mu,t}), the ground state of the deformed oscillator,
/// also exact in the class (rate 1/(4t)).
PolyGauss ground_state(const MuParam& p);

/// Heat evolution psi(x,t) = integral over q of |q|^{2mu} rho(x,q) phi0(q).
Complex heat_solve(const PolyGauss& phi0, const MuParam& p, double x,
                   quad::Options opts = {});
Complex heat_solve(const PolyGauss& phi0, const MuParam& p, Complex z,
                   quad::Options opts = {});

/// Tag selecting the closed-form translate of sigma_{mu,t} as the left
/// factor of a mu-convolution.
struct SigmaKernel {
    MuParam p;
};

/// (sigma_{mu,t} *_mu psi2)(x): the translate is taken in closed form,
/// (T_q sigma)(x) = rho(q,x).
Complex mu_convolve(const SigmaKernel& k, const PolyGauss& psi2, Complex x,
                    quad::Options opts = {});

/// (psi1 *_mu psi2)(x) with the translate evaluated by the truncated
/// mu-translation series.  Throws if the last translation term stays above
/// `tail_tol` relative to the running value at a significant node.
Complex mu_convolve(const PolyGauss& psi1, const PolyGauss& psi2, double mu, double x,
                    int terms = 60, double tail_tol = 1e-6, quad::Options opts = {});

/// |d rho/dt - (1/2) D_mu^2 rho| at (x, q0): the t-derivative is a central
/// difference with step h, both Dunkl applications are analytic closed
/// forms.  O(h^2) for the exact kernel.
double pde_residual(const MuParam& p, double x, double q0, double h);

/// |integral |q|^{2mu} rho_{mu,s}(x,q) rho_{mu,t}(q,y) dq - rho_{mu,s+t}(x,y)|.
double semigroup_defect(double mu, double s, double t, double x, double y,
                        quad::Options opts = {});

} // namespace musb::heat
