#pragma once

#include "musb/mu_param.hpp"
#include "musb/polygauss.hpp"
#include "musb/quadrature.hpp"

#include <functional>
#include <vector>

namespace musb::spaces {

/// Planar measure densities on C \ {0}, radial in |z|:
///   nu_{e,mu,lambda}(z) = lambda 2^{1/2-mu} / (pi Gamma(mu+1/2))
///                         K_{mu-1/2}(|sqrt(lambda) z|^2) |sqrt(lambda) z|^{2mu+1},
/// and nu_o with order mu+1/2.  Reject z = 0 (Macdonald singularity).
double density_even(double mu, double lambda, Complex z);
double density_odd(double mu, double lambda, Complex z);
double density_even_radial(double mu, double lambda, double r);
double density_odd_radial(double mu, double lambda, double r);

/// nu_{Gauss,hbar}(z) = exp(-|z|^2/hbar) / (pi hbar).
double gauss_density(double hbar, Complex z);

/// Density of the ground-state probability measure d rho_{mu,t}:
/// sigma_{mu,t}(q) |q|^{2mu}.
double measure_rho_density(const MuParam& p, double q);

enum class Direction { to_ground_state, from_ground_state };

/// Change-of-measure map U_{mu,t} psi = psi / sqrt(sigma_{mu,t}) (and its
/// inverse): a rate shift by -+ 1/(4t) plus a constant rescale, exact in the
/// PolyGauss class.  to_ground_state requires rate >= 1/(4t) so the result
/// stays in the class.
PolyGauss change_of_measure(const PolyGauss& psi, const MuParam& p, Direction dir);

/// Holomorphic function sample: a callable plus coarse growth data,
/// |f(z)| <= C (1+|z|)^degree exp(growth |z|^2), used to validate
/// integrability against the planar measures.
struct HoloSample {
    std::function<Complex(Complex)> fn;
    double growth = 0.0;
    int degree = -1; // unknown
    Complex operator()(Complex z) const { return fn(z); }
};

/// Dilation T_lambda f(z) = f(sqrt(lambda) z), unitary
/// B^2_{mu,1} -> B^2_{mu,1/lambda}.
HoloSample dilate(const HoloSample& f, double lambda);

/// B^2_{mu,t} inner product: even parts against nu_e, odd parts against
/// nu_o, with lambda = 1/t.  First argument conjugated.
Complex inner_B2(const HoloSample& f, const HoloSample& g, const MuParam& p,
                 quad::Options opts = {});
double norm_B2(const HoloSample& f, const MuParam& p, quad::Options opts = {});

/// Version C normalization factor
/// M(z) = exp(-z^2/(4t)) / (2^{mu+1/2} t^{mu/2+1/4} Gamma(mu+1/2)^{1/2}).
Complex m_factor(const MuParam& p, Complex z);

/// G twist: Gf(z) = f(2z) / M(2z); C^2_{mu,t} membership means
/// Gf in B^2_{mu,t/2}.
HoloSample g_twist(const HoloSample& f, const MuParam& p);

/// C^2_{mu,t} inner product: <G f1, G f2>_{B^2_{mu,t/2}}.
Complex inner_C2(const HoloSample& f1, const HoloSample& f2, const MuParam& p,
                 quad::Options opts = {});

/// Gram matrix G_ij = <f_i, f_j>_{B^2_{mu,t}} over one shared adaptive
/// planar sweep (every f is evaluated once per node).
std::vector<std::vector<Complex>> gram_B2(const std::vector<HoloSample>& fs,
                                          const MuParam& p, quad::Options opts = {});

} // namespace musb::spaces
