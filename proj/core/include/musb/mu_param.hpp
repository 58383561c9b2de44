#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace musb {

using Complex = std::complex<double>;

/// Deformation parameter mu > -1/2 together with the time / Planck
/// parameter t > 0.  The dilation parameter is lambda = 1/t and the
/// Planck constant is hbar = t; both are stored through t alone.
class MuParam {
public:
    MuParam(double mu, double t) : mu_(mu), t_(t) {
        if (!(mu > -0.5))
            throw std::invalid_argument("MuParam: requires mu > -1/2, got mu = " +
                                        std::to_string(mu));
        if (!(t > 0.0))
            throw std::invalid_argument("MuParam: requires t > 0, got t = " +
                                        std::to_string(t));
    }

    double mu() const { return mu_; }
    double t() const { return t_; }
    double hbar() const { return t_; }
    double lambda() const { return 1.0 / t_; }

private:
    double mu_;
    double t_;
};

inline void require_mu(double mu) {
    if (!(mu > -0.5))
        throw std::invalid_argument("requires mu > -1/2, got mu = " + std::to_string(mu));
}

} // namespace musb
