#include "musb/heat.hpp"

#include "musb/special.hpp"

#include <cmath>
#include <stdexcept>

namespace musb::heat {

namespace {

// Value and derivative sums of the exp_mu series at real argument w,
// split by parity, for the closed-form Dunkl derivatives of rho:
//   Ee + Eo = exp_mu(w), E1 = exp_mu'(w), E2 = exp_mu''(w),
//   S  = sum_m w^{2m} / gamma_mu(2m+1)        (= odd part / w, entire)
//   S1 = S'(w)
struct ExpMuJet {
    double Ee = 0, Eo = 0, E1 = 0, E2 = 0, S = 0, S1 = 0;
};

ExpMuJet exp_mu_jet(double w, double mu) {
    ExpMuJet jet;
    if (w == 0.0) {
        const double a1 = 1.0 / (1.0 + 2.0 * mu);
        jet.Ee = 1.0;
        jet.E1 = a1;
        jet.E2 = a1; // 2 a_2 = 2 / (2 (1+2mu))
        jet.S = a1;
        return jet;
    }
    const long double lw = w;
    long double t = 1.0L; // a_n w^n
    long double Ee = 0, Eo = 0, E1 = 0, E2 = 0, S = 0, S1 = 0;
    for (int n = 0; n < 10000; ++n) {
        const long double t1 = t / lw;       // a_n w^{n-1}
        const long double t2 = t1 / lw;      // a_n w^{n-2}
        if (n & 1) {
            Eo += t;
            S += t1;
            if (n >= 3) S1 += (n - 1) * t2;
        } else {
            Ee += t;
        }
        if (n >= 1) E1 += n * t1;
        if (n >= 2) E2 += n * (n - 1) * t2;
        const long double step = (n + 1) + 2.0L * mu * ((n + 1) & 1);
        t *= lw / step;
        const long double scale = fabsl(Ee) + fabsl(Eo) + fabsl(E1) + fabsl(E2) + 1.0L;
        if (fabsl(t) * (n + 2) * (n + 2) < 1e-19L * scale && n > 4) break;
    }
    jet.Ee = (double)Ee;
    jet.Eo = (double)Eo;
    jet.E1 = (double)E1;
    jet.E2 = (double)E2;
    jet.S = (double)S;
    jet.S1 = (double)S1;
    return jet;
}

// (1/2) D_mu^2 rho at real (x, q), both Dunkl applications in closed form.
double half_dunkl2_rho(const MuParam& p, double x, double q) {
    const double t = p.t();
    const double mu = p.mu();
    const double w = x * q / t;
    const ExpMuJet j = exp_mu_jet(w, mu);
    const double E = j.Ee + j.Eo;
    const double G = front_constant(p) * std::exp(-(x * x + q * q) / (2.0 * t));
    // first Dunkl derivative is g = G * H with
    const double H = -(x / t) * E + (q / t) * j.E1 + (2.0 * mu * q / t) * j.S;
    const double Hp = -E / t - (x * q / (t * t)) * j.E1 + (q * q / (t * t)) * j.E2 +
                      (2.0 * mu * q * q / (t * t)) * j.S1;
    // D g = g' + (mu/x)(g - Jg); the reflection part reduces to entire series
    const double d2 = -(x / t) * H + Hp - (2.0 * mu / t) * j.Ee +
                      (2.0 * mu * q * q / (t * t)) * j.S;
    return 0.5 * G * d2;
}

} // namespace

double front_constant(const MuParam& p) {
    return std::pow(2.0 * p.t(), -(p.mu() + 0.5)) / special::gamma_euler(p.mu() + 0.5);
}

Complex rho(const MuParam& p, Complex z, double q) {
    const double t = p.t();
    return front_constant(p) * std::exp(-(z * z + q * q) / (2.0 * t)) *
           special::exp_mu(z * q / t, p.mu());
}

double rho(const MuParam& p, double x, double q) {
    const double t = p.t();
    // interleaved complex series summation keeps the alternating-sign
    // cancellation at long-double accuracy (the parity-split jet does not)
    return front_constant(p) * std::exp(-(x * x + q * q) / (2.0 * t)) *
           special::exp_mu(Complex(x * q / t), p.mu()).real();
}

double sigma(const MuParam& p, double q) {
    return front_constant(p) * std::exp(-q * q / (2.0 * p.t()));
}

PolyGauss sigma_polygauss(const MuParam& p) {
    return PolyGauss::constant(front_constant(p), 1.0 / (2.0 * p.t()));
}

PolyGauss ground_state(const MuParam& p) {
    return PolyGauss::constant(std::sqrt(front_constant(p)), 1.0 / (4.0 * p.t()));
}

Complex heat_solve(const PolyGauss& phi0, const MuParam& p, double x, quad::Options opts) {
    return heat_solve(phi0, p, Complex(x, 0.0), opts);
}

Complex heat_solve(const PolyGauss& phi0, const MuParam& p, Complex z, quad::Options opts) {
    auto g = [&](double q) { return rho(p, z, q) * phi0.eval(q); };
    return quad::integrate_line_weighted(g, p.mu(), opts).value;
}

Complex mu_convolve(const SigmaKernel& k, const PolyGauss& psi2, Complex x,
                    quad::Options opts) {
    // (T_q sigma)(x) = rho(q, x); the kernel formula is symmetric so the
    // argument order only matters for reading it against the definition.
    auto g = [&](double q) { return rho(k.p, x, q) * psi2.eval(q); };
    return quad::integrate_line_weighted(g, k.p.mu(), opts).value;
}

Complex mu_convolve(const PolyGauss& psi1, const PolyGauss& psi2, double mu, double x,
                    int terms, double tail_tol, quad::Options opts) {
    require_mu(mu);
    // (T_q psi1)(x) = sum_n (-q)^n (D^n psi1)(x) / gamma_mu(n): the Dunkl
    // tower is built once, each quadrature node only sums scalars.
    std::vector<Complex> tower;
    tower.reserve(terms + 1);
    PolyGauss dn = psi1;
    tower.push_back(dn.eval(x));
    for (int n = 1; n <= terms; ++n) {
        dn = dunkl(dn, mu);
        if (dn.is_zero()) break;
        tower.push_back(dn.eval(x));
    }

    double worst_tail = 0.0; // truncation-term density in the integrand
    auto g = [&](double q) -> Complex {
        Complex sum = 0.0;
        double factor = 1.0;
        Complex last = tower[0];
        for (size_t n = 0; n < tower.size(); ++n) {
            if (n > 0) factor *= -q / (n + 2.0 * mu * (n & 1));
            last = factor * tower[n];
            sum += last;
        }
        const Complex weight = psi2.eval(q);
        if (tower.size() == static_cast<size_t>(terms) + 1)
            worst_tail = std::max(worst_tail,
                                  std::abs(last * weight) *
                                      std::pow(std::fabs(q), 2.0 * mu));
        return sum * weight;
    };
    const Complex value = quad::integrate_line_weighted(g, mu, opts).value;
    if (worst_tail > tail_tol * std::max(1.0, std::abs(value)))
        throw std::runtime_error(
            "mu_convolve: translation series truncation residual " +
            std::to_string(worst_tail) + " above tolerance at terms = " +
            std::to_string(terms));
    return value;
}

double pde_residual(const MuParam& p, double x, double q0, double h) {
    if (!(h > 0.0 && h < p.t()))
        throw std::invalid_argument("pde_residual: requires 0 < h < t");
    const double fp = rho(MuParam(p.mu(), p.t() + h), x, q0);
    const double fm = rho(MuParam(p.mu(), p.t() - h), x, q0);
    const double dt = (fp - fm) / (2.0 * h);
    return std::fabs(dt - half_dunkl2_rho(p, x, q0));
}

double semigroup_defect(double mu, double s, double t, double x, double y,
                        quad::Options opts) {
    const MuParam ps(mu, s), pt(mu, t), pst(mu, s + t);
    auto g = [&](double q) { return Complex(rho(ps, x, q) * rho(pt, q, y)); };
    const Complex composed = quad::integrate_line_weighted(g, mu, opts).value;
    return std::abs(composed - Complex(rho(pst, x, y)));
}

} // namespace musb::heat
