#pragma once

#include "musb/mu_param.hpp"

#include <utility>
#include <vector>

namespace musb {

/// Function of the form p(q) * exp(-b q^2) with a complex polynomial p and
/// a fixed rate b >= 0.  The class is closed under the Dunkl operator,
/// parity, position and momentum, so every operator identity below can be
/// checked exactly at the coefficient level.
class PolyGauss {
public:
    PolyGauss() = default;
    PolyGauss(std::vector<Complex> coeffs, double rate);

    static PolyGauss constant(Complex c, double rate = 0.0);
    static PolyGauss monomial(int k, Complex c = 1.0, double rate = 0.0);

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    double rate() const { return rate_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Complex(0.0);
    }

    Complex eval(double q) const;
    Complex eval(Complex z) const; // analytic continuation of the same formula
    Complex operator()(double q) const { return eval(q); }

    double max_abs_coeff() const;

    PolyGauss& operator+=(const PolyGauss& other);
    PolyGauss& operator-=(const PolyGauss& other);
    PolyGauss& operator*=(Complex s);

    friend PolyGauss operator+(PolyGauss a, const PolyGauss& b) { return a += b; }
    friend PolyGauss operator-(PolyGauss a, const PolyGauss& b) { return a -= b; }
    friend PolyGauss operator*(Complex s, PolyGauss f) { return f *= s; }

private:
    void trim();

    std::vector<Complex> coeffs_; // coeffs_[k] multiplies q^k
    double rate_ = 0.0;
};

/// Dunkl operator D_mu f = f' + (mu/q)(f(q) - f(-q)), exact in the class.
PolyGauss dunkl(const PolyGauss& f, double mu);

/// Parity J f(q) = f(-q): negates the odd coefficients.
PolyGauss parity(const PolyGauss& f);

/// (f_even, f_odd) with f = f_even + f_odd exactly.
std::pair<PolyGauss, PolyGauss> even_odd_split(const PolyGauss& f);

/// Position operator Q f(q) = q f(q).
PolyGauss position(const PolyGauss& f);

/// Momentum operator P = (hbar/i) D_mu.
PolyGauss momentum(const PolyGauss& f, double mu, double hbar);

/// i [P, Q] f - f - 2 mu J f at hbar = 1; the zero element when the
/// deformed canonical commutation relation holds.
PolyGauss commutator_defect(const PolyGauss& f, double mu);

enum class Ladder { annihilate, create };

/// a = (Q + iP)/sqrt(2), a* = (Q - iP)/sqrt(2) at hbar = 1.
PolyGauss ladder(const PolyGauss& f, double mu, Ladder kind);

/// Truncated mu-deformed translation
///   sum_{n=0}^{terms} (-x)^n D_mu^n f / gamma_mu(n).
/// Exact (terminating) for rate 0 and terms >= degree.  When requested,
/// last_term_magnitude reports the max-abs coefficient of the final summand
/// so truncation quality is visible to the caller.
PolyGauss mu_translate(const PolyGauss& f, double x, double mu, int terms,
                       double* last_term_magnitude = nullptr);

} // namespace musb
