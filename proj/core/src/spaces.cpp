#include "musb/spaces.hpp"

#include "musb/heat.hpp"
#include "musb/special.hpp"

#include <cmath>
#include <stdexcept>

namespace musb::spaces {

namespace {

double density_radial(double order_shift, double mu, double lambda, double r) {
    // common body of nu_e (order mu-1/2) and nu_o (order mu+1/2)
    const double u = std::sqrt(lambda) * r;
    const double arg = u * u;
    const double front =
        lambda * std::pow(2.0, 0.5 - mu) / (M_PI * special::gamma_euler(mu + 0.5));
    return front * special::bessel_k(mu + order_shift, arg) * std::pow(u, 2.0 * mu + 1.0);
}

void check_growth(const HoloSample& f, double lambda) {
    if (f.growth >= 0.5 * lambda)
        throw std::invalid_argument(
            "planar inner product: sample growth exp(" + std::to_string(f.growth) +
            " |z|^2) is not integrable against lambda = " + std::to_string(lambda));
}

} // namespace

double density_even_radial(double mu, double lambda, double r) {
    require_mu(mu);
    if (!(lambda > 0.0)) throw std::invalid_argument("density: requires lambda > 0");
    if (!(r > 0.0)) throw std::invalid_argument("density: requires z != 0");
    return density_radial(-0.5, mu, lambda, r);
}

double density_odd_radial(double mu, double lambda, double r) {
    require_mu(mu);
    if (!(lambda > 0.0)) throw std::invalid_argument("density: requires lambda > 0");
    if (!(r > 0.0)) throw std::invalid_argument("density: requires z != 0");
    return density_radial(+0.5, mu, lambda, r);
}

double density_even(double mu, double lambda, Complex z) {
    return density_even_radial(mu, lambda, std::abs(z));
}

double density_odd(double mu, double lambda, Complex z) {
    return density_odd_radial(mu, lambda, std::abs(z));
}

double gauss_density(double hbar, Complex z) {
    if (!(hbar > 0.0)) throw std::invalid_argument("gauss_density: requires hbar > 0");
    return std::exp(-std::norm(z) / hbar) / (M_PI * hbar);
}

double measure_rho_density(const MuParam& p, double q) {
    return heat::sigma(p, q) * std::pow(std::fabs(q), 2.0 * p.mu());
}

PolyGauss change_of_measure(const PolyGauss& psi, const MuParam& p, Direction dir) {
    const double shift = 1.0 / (4.0 * p.t());
    const double root_c = std::sqrt(heat::front_constant(p));
    double rate;
    Complex scale;
    if (dir == Direction::to_ground_state) {
        rate = psi.rate() - shift;
        if (rate < 0.0 && rate > -1e-12) rate = 0.0;
        if (rate < 0.0)
            throw std::invalid_argument(
                "change_of_measure: psi rate below 1/(4t); U psi leaves the class");
        scale = 1.0 / root_c;
    } else {
        rate = psi.rate() + shift;
        scale = root_c;
    }
    auto coeffs = psi.coeffs();
    for (auto& c : coeffs) c *= scale;
    return PolyGauss(std::move(coeffs), rate);
}

HoloSample dilate(const HoloSample& f, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilate: requires lambda > 0");
    const double root = std::sqrt(lambda);
    auto fn = f.fn;
    return HoloSample{[fn, root](Complex z) { return fn(root * z); },
                      f.growth * lambda, f.degree};
}

Complex m_factor(const MuParam& p, Complex z) {
    const double t = p.t();
    const double mu = p.mu();
    const double denom = std::pow(2.0, mu + 0.5) * std::pow(t, mu / 2.0 + 0.25) *
                         std::sqrt(special::gamma_euler(mu + 0.5));
    return std::exp(-z * z / (4.0 * t)) / denom;
}

HoloSample g_twist(const HoloSample& f, const MuParam& p) {
    auto fn = f.fn;
    const MuParam param = p;
    return HoloSample{[fn, param](Complex z) {
                          return fn(2.0 * z) / m_factor(param, 2.0 * z);
                      },
                      4.0 * f.growth + 1.0 / p.t(), f.degree};
}

std::vector<std::vector<Complex>> gram_B2(const std::vector<HoloSample>& fs,
                                          const MuParam& p, quad::Options opts) {
    const size_t n = fs.size();
    const double lambda = p.lambda();
    for (const auto& f : fs) check_growth(f, lambda);

    const int max_level = opts.max_level > 0 ? opts.max_level : quad::default_max_level();
    using Matrix = std::vector<std::vector<Complex>>;
    if (n == 0) return {};
    Matrix prev;
    Complex last00{}, prev00{};
    const double c = M_PI / 2.0;

    for (int level = opts.min_level; level <= max_level; ++level) {
        const double h = std::ldexp(1.0, -level);
        const int m = 32 << std::max(0, level - 4);
        const double dtheta = 2.0 * M_PI / m;
        Matrix cur(n, std::vector<Complex>(n, Complex(0.0)));
        double norm_acc = 0.0;

        std::vector<std::vector<Complex>> vals(n, std::vector<Complex>(m));
        std::vector<std::vector<Complex>> evens(n, std::vector<Complex>(m));
        std::vector<std::vector<Complex>> odds(n, std::vector<Complex>(m));

        auto radial_term = [&](double s) -> bool {
            const double cs = c * std::sinh(s);
            const double lw = std::log(c * std::cosh(s)) + 2.0 * cs;
            if (lw > 600.0 || lw < -670.0) return false;
            const double r = std::exp(cs);
            const double jac = std::exp(lw); // map weight times polar r
            const double we = density_even_radial(p.mu(), lambda, r);
            const double wo = density_odd_radial(p.mu(), lambda, r);
            if (!(jac * std::max(we, wo) > 1e-280)) return false;

            for (size_t i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) {
                    const double th = (2 * j + 1) * M_PI / m;
                    vals[i][j] = fs[i](Complex(r * std::cos(th), r * std::sin(th)));
                }
            for (size_t i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) {
                    const Complex a = vals[i][j];
                    const Complex b = vals[i][(j + m / 2) % m]; // antipodal node
                    evens[i][j] = 0.5 * (a + b);
                    odds[i][j] = 0.5 * (a - b);
                }

            double radius_norm = 0.0;
            for (size_t i = 0; i < n; ++i)
                for (size_t k = i; k < n; ++k) {
                    Complex se{}, so{};
                    for (int j = 0; j < m; ++j) {
                        se += std::conj(evens[i][j]) * evens[k][j];
                        so += std::conj(odds[i][j]) * odds[k][j];
                    }
                    const Complex term = dtheta * jac * (we * se + wo * so);
                    cur[i][k] += term;
                    if (i == k) radius_norm += std::abs(term);
                }
            norm_acc += radius_norm;
            return radius_norm > 1e-16 * norm_acc;
        };

        radial_term(0.0);
        for (int sign = 0; sign < 2; ++sign) {
            int stall = 0;
            for (int k = 1; k * h <= 7.5; ++k) {
                if (radial_term((sign ? -1.0 : 1.0) * k * h))
                    stall = 0;
                else if (++stall >= 4)
                    break;
            }
        }

        for (size_t i = 0; i < n; ++i)
            for (size_t k = i; k < n; ++k)
                cur[i][k] *= h;
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < i; ++k)
                cur[i][k] = std::conj(cur[k][i]);

        prev00 = last00;
        last00 = cur[0][0];
        if (level > opts.min_level) {
            double scale = 1e-300;
            for (size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(cur[i][i]));
            double diff = 0.0;
            for (size_t i = 0; i < n; ++i)
                for (size_t k = 0; k < n; ++k)
                    diff = std::max(diff, std::abs(cur[i][k] - prev[i][k]));
            if (diff / scale <= opts.rel_tol)
                return cur;
        }
        prev = std::move(cur);
    }
    throw quad::ConvergenceError("gram_B2: no convergence at max level", last00, prev00);
}

Complex inner_B2(const HoloSample& f, const HoloSample& g, const MuParam& p,
                 quad::Options opts) {
    const auto gram = gram_B2({f, g}, p, opts);
    return gram[0][1];
}

double norm_B2(const HoloSample& f, const MuParam& p, quad::Options opts) {
    const auto gram = gram_B2({f}, p, opts);
    return std::sqrt(std::max(0.0, gram[0][0].real()));
}

Complex inner_C2(const HoloSample& f1, const HoloSample& f2, const MuParam& p,
                 quad::Options opts) {
    const MuParam half(p.mu(), p.t() / 2.0);
    return inner_B2(g_twist(f1, p), g_twist(f2, p), half, opts);
}

} // namespace musb::spaces
