#pragma once

#include "musb/mu_param.hpp"
#include "musb/polygauss.hpp"
#include "musb/quadrature.hpp"
#include "musb/report.hpp"
#include "musb/spaces.hpp"

#include <vector>

namespace musb::transforms {

enum class Version { A, B, C, D };

const char* version_name(Version v);
Version version_from_string(const std::string& s);

/// Kernel functions:
///   A(z,q) = rho(z,q)/sqrt(sigma(q))
///          = exp(-z^2/2t - q^2/4t) exp_mu(qz/t) / ((2t)^{mu/2+1/4} Gamma(mu+1/2)^{1/2})
///   B(z,q) = rho(z,q)/sigma(q),  C(z,q) = rho(z,q),  D(z,q) = A(z,q).
Complex kernel(Version v, const MuParam& p, Complex z, double q);

/// Integral transform of psi at z.  A and C integrate against |q|^{2mu} dq,
/// B and D against the probability measure d rho_{mu,t}.
Complex apply(Version v, const PolyGauss& psi, const MuParam& p, Complex z,
              quad::Options opts = {});

/// Relative residual of the kernel identity
/// C_{mu,t}(z,q) = M(z) A_{mu,t/2}(z/2,q); closed forms, no quadrature.
double ac_identity_residual(const MuParam& p, Complex z, double q);

/// V_t psi(q) = t^{mu/2+1/4} psi(sqrt(t) q), the unitary dilation of L^2_mu.
PolyGauss v_dilate(const PolyGauss& psi, const MuParam& p);

/// Relative residual of A_{mu,t} = T_{1/t} A_mu V_t on one probe at one z.
double factorization_residual(const MuParam& p, const PolyGauss& psi, Complex z,
                              quad::Options opts = {});

/// The documented probe set q^k exp(-q^2/(2t)), k = 0 .. count-1.
std::vector<PolyGauss> hermite_probes(const MuParam& p, int count = 6);

/// Domain Gram of probes in the version's domain space (L^2_mu for A and C,
/// L^2(d rho_{mu,t}) for B and D).
std::vector<std::vector<Complex>> domain_gram(Version v, const MuParam& p,
                                              const std::vector<PolyGauss>& probes,
                                              quad::Options opts = {});

/// Wrap the transform of psi as a holomorphic sample of the version's range
/// space, with the range twist applied for C and D (Gf(z) = f(2z)/M(2z)).
spaces::HoloSample range_sample(Version v, const PolyGauss& psi, const MuParam& p,
                                quad::Options opts = {});

/// Unitarity check: probes are normalized in the domain space, then the
/// range Gram (B^2_{mu,t} for A and B, C^2_{mu,t} for C and D) is compared
/// entrywise with the domain Gram.  max_residual is the largest entry
/// difference.
VerificationReport unitarity_report(Version v, const MuParam& p,
                                    const std::vector<PolyGauss>& probes,
                                    double tolerance = 1e-6, quad::Options opts = {});

} // namespace musb::transforms
