#include "musb/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <complex>

namespace musb::quad {

namespace {

constexpr double kC = M_PI / 2.0;
constexpr double kLineSmaxBase = 6.5;
constexpr double kPlaneSmax = 7.5;

std::atomic<int> g_default_max_level{9};

inline double abs1(Complex z) { return std::fabs(z.real()) + std::fabs(z.imag()); }

// s range needed so that the q -> 0 tail q^{2mu+1} drops below 1e-14:
// (2mu+1) * kC * sinh(smax) >= 33.
double line_smax(double mu) {
    const double p = 2.0 * mu + 1.0;
    const double need = std::asinh(33.0 / (kC * p));
    return std::min(9.0, std::max(kLineSmaxBase, need));
}

struct SideSum {
    Complex total{};
    double variation = 0.0;
};

// Trapezoidal contribution of the exp-sinh nodes s = k h (k > 0 on one side)
// to integral over (0,inf) of F(q) dq.  `weight_exponent` is the power p such
// that the map weight is kC cosh(s) q^p (p = 2mu+1 for the weighted line rule,
// p = 1 for a plain half-line rule); the guard skips F where the weight alone
// makes the node negligible or non-representable.
template <class F>
void sum_side(const F& f, double h, int k0, int stride, double sign, double smax,
              double weight_exponent, double scale, SideSum& acc) {
    int stall = 0;
    for (int k = k0;; k += stride) {
        const double s = sign * k * h;
        if (std::fabs(s) > smax) break;
        const double cs = kC * std::sinh(s);
        const double lw = std::log(kC * std::cosh(s)) + weight_exponent * cs;
        if (lw > 600.0 || lw < -670.0) {
            // Gaussian-decay callers are identically zero out here (lw large)
            // or the weight kills the node (lw small): skip the evaluation.
            if (++stall >= 4) break;
            continue;
        }
        const double q = std::exp(cs);
        const double w = std::exp(lw);
        const Complex term = f(q) * w;
        acc.total += term;
        acc.variation += abs1(term);
        if (abs1(term) <= 1e-17 * (abs1(acc.total) + scale)) {
            if (++stall >= 4) break;
        } else {
            stall = 0;
        }
    }
}

// One level of the exp-sinh trapezoid sum: all k at `level` when odd_only is
// false, otherwise only the odd k (the refinement nodes).
template <class F>
SideSum level_sum(const F& f, int level, bool odd_only, double smax,
                  double weight_exponent, double scale) {
    const double h = std::ldexp(1.0, -level);
    SideSum acc;
    if (!odd_only) {
        const Complex term = f(1.0) * kC; // k = 0: q = 1, weight kC
        acc.total += term;
        acc.variation += abs1(term);
    }
    const int stride = odd_only ? 2 : 1;
    sum_side(f, h, 1, stride, +1.0, smax, weight_exponent, scale, acc);
    sum_side(f, h, 1, stride, -1.0, smax, weight_exponent, scale, acc);
    return acc;
}

int resolve_max_level(const Options& opts) {
    return opts.max_level > 0 ? opts.max_level : g_default_max_level.load();
}

} // namespace

ConvergenceError::ConvergenceError(const std::string& what, Complex last_estimate,
                                   Complex previous_estimate)
    : std::runtime_error(what), last(last_estimate), previous(previous_estimate) {}

int default_max_level() { return g_default_max_level.load(); }

void set_default_max_level(int level) {
    if (level < 2 || level > 14)
        throw std::invalid_argument("set_default_max_level: level out of range [2,14]");
    g_default_max_level.store(level);
}

Result integrate_line_weighted(const std::function<Complex(double)>& g, double mu,
                               Options opts) {
    require_mu(mu);
    const double smax = line_smax(mu);
    const double we = 2.0 * mu + 1.0; // q^{2mu} plus dq
    auto f = [&](double q) { return g(q) + g(-q); };

    const int max_level = resolve_max_level(opts);
    SideSum acc = level_sum(f, opts.min_level, false, smax, we, 0.0);
    Complex estimate = acc.total * std::ldexp(1.0, -opts.min_level);
    Complex previous = estimate;
    for (int level = opts.min_level + 1; level <= max_level; ++level) {
        const SideSum finer = level_sum(f, level, true, smax, we, abs1(acc.total));
        acc.total += finer.total;
        acc.variation += finer.variation;
        previous = estimate;
        estimate = acc.total * std::ldexp(1.0, -level);
        // converged when the refinement shift is below tolerance or below the
        // roundoff floor of the (pre-cancellation) term magnitudes
        const double noise = acc.variation * std::ldexp(1e-15, -level);
        const double shift = abs1(estimate - previous);
        const double residual = shift / std::max({abs1(estimate), noise, 1e-300});
        if (shift <= opts.rel_tol * abs1(estimate) + noise)
            return {estimate, residual, level};
    }
    const double scale = std::max(abs1(estimate), 1e-300);
    throw ConvergenceError("integrate_line_weighted: no convergence at max level " +
                               std::to_string(max_level) + " (residual " +
                               std::to_string(abs1(estimate - previous) / scale) + ")",
                           estimate, previous);
}

Result integrate_plane_radial(const std::function<Complex(Complex)>& g,
                              const std::function<double(double)>& w, Options opts) {
    const int max_level = resolve_max_level(opts);
    Complex previous{};
    Complex estimate{};
    double residual = 0.0;

    for (int level = opts.min_level; level <= max_level; ++level) {
        const double h = std::ldexp(1.0, -level);
        const int m = 32 << std::max(0, level - 4);
        const double dtheta = 2.0 * M_PI / m;
        Complex total{};
        double variation = 0.0;

        auto radial_term = [&](double s) -> bool {
            const double cs = kC * std::sinh(s);
            // polar Jacobian r and map weight kC cosh(s) r together
            const double lw = std::log(kC * std::cosh(s)) + 2.0 * cs;
            if (lw > 600.0 || lw < -670.0) return false;
            const double r = std::exp(cs);
            const double wr = w(r);
            const double jac = std::exp(lw);
            if (!(std::fabs(wr) * jac > 1e-280)) return false; // skip g out here
            Complex ang{};
            double ang_var = 0.0; // pre-cancellation magnitude, the noise floor
            for (int j = 0; j < m; ++j) {
                const double th = (2 * j + 1) * M_PI / m;
                const Complex val = g(Complex(r * std::cos(th), r * std::sin(th)));
                ang += val;
                ang_var += abs1(val);
            }
            const Complex term = ang * (dtheta * wr * jac);
            total += term;
            variation += ang_var * dtheta * std::fabs(wr) * jac;
            return abs1(term) > 1e-16 * (abs1(total) + variation);
        };

        radial_term(0.0);
        for (int sign = 0; sign < 2; ++sign) {
            int stall = 0;
            for (int k = 1; k * h <= kPlaneSmax; ++k) {
                if (radial_term((sign ? -1.0 : 1.0) * k * h))
                    stall = 0;
                else if (++stall >= 4)
                    break;
            }
        }

        previous = estimate;
        estimate = total * h;
        if (level > opts.min_level) {
            const double noise = variation * h * 1e-15;
            const double shift = abs1(estimate - previous);
            residual = shift / std::max({abs1(estimate), noise, 1e-300});
            if (shift <= opts.rel_tol * abs1(estimate) + noise)
                return {estimate, residual, level};
        }
    }
    throw ConvergenceError("integrate_plane_radial: no convergence at max level " +
                               std::to_string(max_level),
                           estimate, previous);
}

ExpSinhGrid exp_sinh_grid(int level, double smax) {
    ExpSinhGrid grid;
    grid.h = std::ldexp(1.0, -level);
    const int kmax = static_cast<int>(smax / grid.h);
    grid.r.reserve(2 * kmax + 1);
    grid.w.reserve(2 * kmax + 1);
    for (int k = -kmax; k <= kmax; ++k) {
        const double s = k * grid.h;
        const double cs = kC * std::sinh(s);
        if (cs < -700.0 || cs > 700.0) continue;
        grid.r.push_back(std::exp(cs));
        grid.w.push_back(kC * std::cosh(s) * grid.r.back());
        if (k == 0) grid.center = static_cast<int>(grid.r.size()) - 1;
    }
    return grid;
}

std::vector<double> angular_nodes(int m) {
    std::vector<double> th(m);
    for (int j = 0; j < m; ++j)
        th[j] = (2 * j + 1) * M_PI / m;
    return th;
}

Rule make_line_rule(double mu, int level) {
    require_mu(mu);
    const auto grid = exp_sinh_grid(level, line_smax(mu));
    Rule rule{Rule::Kind::line_weighted, {}, {}, mu, level};
    for (size_t i = 0; i < grid.r.size(); ++i) {
        const double q = grid.r[i];
        const double w = grid.h * grid.w[i] * std::pow(q, 2.0 * mu);
        if (w <= 0.0 || !std::isfinite(w)) continue;
        rule.nodes.push_back(q);
        rule.weights.push_back(w);
    }
    return rule;
}

Rule make_radial_rule(int level) {
    const auto grid = exp_sinh_grid(level, kPlaneSmax);
    Rule rule{Rule::Kind::radial, {}, {}, 0.0, level};
    for (size_t i = 0; i < grid.r.size(); ++i) {
        rule.nodes.push_back(grid.r[i]);
        rule.weights.push_back(grid.h * grid.w[i]);
    }
    return rule;
}

Rule make_angular_rule(int count) {
    Rule rule{Rule::Kind::angular, angular_nodes(count),
              std::vector<double>(count, 2.0 * M_PI / count), 0.0, 0};
    return rule;
}

} // namespace musb::quad
