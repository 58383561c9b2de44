#include "musb/verify.hpp"

#include "musb/heat.hpp"
#include "musb/polygauss.hpp"
#include "musb/spaces.hpp"
#include "musb/special.hpp"
#include "musb/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <thread>

namespace musb::verify {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<double> resolve_mu(const GridSpec& grid, std::vector<double> fallback) {
    return grid.mu ? *grid.mu : std::move(fallback);
}

std::vector<double> resolve_t(const GridSpec& grid, std::vector<double> fallback) {
    return grid.t ? *grid.t : std::move(fallback);
}

std::vector<double> default_mu_grid() { return {-0.4, -0.1, 0.0, 0.5, 1.0, 3.0}; }
std::vector<double> default_t_grid() { return {0.25, 1.0, 4.0}; }

using Job = std::function<VerificationReport()>;

ReportList run_jobs(const std::vector<Job>& jobs, int parallelism) {
    ReportList out(jobs.size());
    auto run_one = [&](size_t i) {
        const auto t0 = Clock::now();
        try {
            out[i] = jobs[i]();
        } catch (const std::exception& e) {
            out[i] = make_report("error: " + std::string(e.what()), {}, 0,
                                 std::numeric_limits<double>::infinity(), 0.0, since(t0));
        }
    };
    if (parallelism <= 1 || jobs.size() <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) run_one(i);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
            run_one(i);
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<int>(parallelism, static_cast<int>(jobs.size()));
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

VerificationReport timed(const std::string& id,
                         std::vector<std::pair<std::string, double>> params,
                         double tolerance,
                         const std::function<std::pair<double, long>()>& body) {
    const auto t0 = Clock::now();
    const auto [residual, grid_size] = body();
    return make_report(id, std::move(params), grid_size, residual, tolerance, since(t0));
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    if (n == 1) { v[0] = a; return v; }
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

double rel_diff(Complex a, Complex b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// deterministic mixed-parity probe set for the operator-algebra checks
std::vector<PolyGauss> ccr_probes(int count) {
    std::mt19937 rng(20260811u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double rates[] = {0.0, 0.25, 0.5, 1.0};
    std::vector<PolyGauss> probes;
    probes.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int deg = i % 7;
        std::vector<Complex> coeffs(deg + 1);
        for (auto& c : coeffs) c = Complex(u(rng), u(rng));
        if (std::abs(coeffs.back()) < 0.1) coeffs.back() += Complex(0.5, -0.25);
        probes.emplace_back(std::move(coeffs), rates[i % 4]);
    }
    return probes;
}

std::vector<PolyGauss> heat_probes(const MuParam& p) {
    std::vector<PolyGauss> probes = transforms::hermite_probes(p, 4);
    probes.push_back(PolyGauss({1.0}, 1.0));
    probes.push_back(PolyGauss({0.0, 1.0}, 1.0));
    probes.push_back(PolyGauss({1.0, 0.0, 1.0}, 0.5));
    return probes;
}

} // namespace

// ---------------------------------------------------------------------------
// special: scalar functions and the quadrature self-oracles
// ---------------------------------------------------------------------------

ReportList suite_special(const GridSpec& grid, const RunOptions& run) {
    const auto mu_grid = resolve_mu(grid, {-0.49, -0.25, 0.0, 0.5, 1.0, 5.0});
    std::vector<Job> jobs;

    jobs.push_back([mu_grid] {
        return timed("special/gamma-positive", {}, 0.0, [&]() -> std::pair<double, long> {
            double violation = 0.0;
            long cells = 0;
            for (double mu : mu_grid)
                for (int n = 0; n <= 200; ++n, ++cells) {
                    const double g = special::gamma_mu(n, mu);
                    if (!(g > 0.0)) violation = std::max(violation, 1.0);
                }
            return {violation, cells};
        });
    });

    jobs.push_back([] {
        return timed("special/gamma0-factorial", {}, 1e-14, [&]() -> std::pair<double, long> {
            double worst = 0.0;
            double fact = 1.0;
            for (int n = 0; n <= 20; ++n) {
                if (n > 0) fact *= n;
                worst = std::max(worst,
                                 std::fabs(special::gamma_mu(n, 0.0) - fact) / fact);
            }
            return {worst, 21};
        });
    });

    jobs.push_back([] {
        return timed("special/exp0-classical", {}, 1e-13, [&]() -> std::pair<double, long> {
            double worst = 0.0;
            long cells = 0;
            for (double re : linspace(-10.0, 10.0, 9))
                for (double im : linspace(-10.0, 10.0, 9)) {
                    const Complex z(re, im);
                    if (std::abs(z) > 10.0) continue;
                    worst = std::max(worst, rel_diff(special::exp_mu(z, 0.0), std::exp(z)));
                    ++cells;
                }
            return {worst, cells};
        });
    });

    jobs.push_back([] {
        return timed("special/expmu-unit-circle", {}, 1e-12,
                     [&]() -> std::pair<double, long> {
            double worst = 0.0;
            long cells = 0;
            for (double mu : {0.0, 0.5, 2.0})
                for (double x : linspace(-20.0, 20.0, 81)) {
                    const double m = std::abs(special::exp_mu(Complex(0.0, x), mu));
                    worst = std::max(worst, m - 1.0);
                    ++cells;
                }
            return {std::max(worst, 0.0), cells};
        });
    });

    jobs.push_back([] {
        return timed("special/besselk-halfint", {}, 1e-10,
                     [&]() -> std::pair<double, long> {
            // K_{1/2}(x) = sqrt(pi/2x) e^-x, K_{3/2}(x) = K_{1/2}(x) (1 + 1/x);
            // these are the orders mu -+ 1/2 at mu = 0 and mu = 1.
            double worst = 0.0;
            long cells = 0;
            for (double x : {0.05, 0.3, 1.0, 2.7, 8.0, 25.0}) {
                const double k_half = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
                worst = std::max(worst,
                                 std::fabs(special::bessel_k(0.5, x) - k_half) / k_half);
                worst = std::max(worst,
                                 std::fabs(special::bessel_k(-0.5, x) - k_half) / k_half);
                const double k_3half = k_half * (1.0 + 1.0 / x);
                worst = std::max(
                    worst, std::fabs(special::bessel_k(1.5, x) - k_3half) / k_3half);
                cells += 3;
            }
            return {worst, cells};
        });
    });

    jobs.push_back([mu_grid] {
        return timed("special/besselk-even", {}, 1e-12, [&]() -> std::pair<double, long> {
            double worst = 0.0;
            long cells = 0;
            for (double mu : mu_grid)
                for (double nu : {mu - 0.5, mu + 0.5})
                    for (double x : {0.1, 0.9, 3.3, 12.0}) {
                        worst = std::max(worst, rel_diff(special::bessel_k(nu, x),
                                                         special::bessel_k(-nu, x)));
                        ++cells;
                    }
            return {worst, cells};
        });
    });

    const quad::Options qopts = run.quad;
    jobs.push_back([mu_grid, qopts] {
        return timed("special/quad-moment-oracle", {}, 1e-10,
                     [&]() -> std::pair<double, long> {
            // line rule against the Gamma closed form of
            // integral |q|^{2mu} q^{2k} e^{-s q^2} dq
            std::vector<double> mus = {-0.25, 0.0, 0.5, 2.0};
            for (double mu : mu_grid)
                if (std::find(mus.begin(), mus.end(), mu) == mus.end()) mus.push_back(mu);
            double worst = 0.0;
            long cells = 0;
            for (double mu : mus)
                for (int k = 0; k <= 5; ++k)
                    for (double s : {0.5, 1.0, 3.0}) {
                        const double exact = special::gamma_euler(k + mu + 0.5) /
                                             std::pow(s, k + mu + 0.5);
                        auto g = [&](double q) {
                            return Complex(std::pow(q * q, k) * std::exp(-s * q * q));
                        };
                        const Complex got =
                            quad::integrate_line_weighted(g, mu, qopts).value;
                        worst = std::max(worst, rel_diff(got, exact));
                        ++cells;
                    }
            return {worst, cells};
        });
    });

    jobs.push_back([qopts] {
        return timed("special/plane-gauss-mass", {}, 1e-10,
                     [&]() -> std::pair<double, long> {
            double worst = 0.0;
            for (double hbar : {0.5, 1.0, 2.0}) {
                auto one = [](Complex) { return Complex(1.0); };
                auto w = [hbar](double r) {
                    return std::exp(-r * r / hbar) / (M_PI * hbar);
                };
                const Complex got = quad::integrate_plane_radial(one, w, qopts).value;
                worst = std::max(worst, rel_diff(got, Complex(1.0)));
            }
            return {worst, 3};
        });
    });

    jobs.push_back([] {
        return timed("special/quad-refinement", {}, 1e-13,
                     [&]() -> std::pair<double, long> {
            // successive-level disagreement must not grow while above the
            // roundoff floor
            double violation = 0.0;
            long cells = 0;
            for (double mu : {-0.25, 0.5, 2.0})
                for (double s : {0.5, 3.0}) {
                    std::vector<double> est;
                    for (int level = 3; level <= 7; ++level) {
                        const auto rule = quad::make_line_rule(mu, level);
                        double sum = 0.0;
                        for (size_t i = 0; i < rule.nodes.size(); ++i) {
                            const double q = rule.nodes[i];
                            sum += rule.weights[i] * 2.0 * std::exp(-s * q * q);
                        }
                        est.push_back(sum);
                    }
                    for (size_t i = 2; i + 1 < est.size(); ++i) {
                        const double r_prev = std::fabs(est[i] - est[i - 1]);
                        const double r_next = std::fabs(est[i + 1] - est[i]);
                        if (r_next > 1e-13 && r_next > r_prev)
                            violation = std::max(violation, r_next - r_prev);
                        ++cells;
                    }
                }
            return {violation, cells};
        });
    });

    return run_jobs(jobs, run.jobs);
}

// ---------------------------------------------------------------------------
// heat: kernel structure, semigroup, translation, Theorem-21 routes
// ---------------------------------------------------------------------------

ReportList suite_heat(const GridSpec& grid, const RunOptions& run) {
    const auto mu_grid = resolve_mu(grid, default_mu_grid());
    const auto t_grid = resolve_t(grid, default_t_grid());
    const quad::Options qopts = run.quad;
    std::vector<Job> jobs;

    for (double mu : mu_grid)
        for (double t : t_grid) {
            jobs.push_back([mu, t] {
                return timed("heat/symmetry-parity", {{"mu", mu}, {"t", t}}, 1e-14,
                             [&]() -> std::pair<double, long> {
                    const MuParam p(mu, t);
                    const double s = std::min(1.5, std::sqrt(5.0 * t));
                    double worst = 0.0;
                    long cells = 0;
                    for (double x : linspace(-s, s, 7))
                        for (double q : linspace(-s, s, 7)) {
                            worst = std::max(worst, rel_diff(heat::rho(p, x, q),
                                                             heat::rho(p, q, x)));
                            worst = std::max(worst, rel_diff(heat::rho(p, -x, -q),
                                                             heat::rho(p, x, q)));
                            cells += 2;
                        }
                    return {worst, cells};
                });
            });

            if (mu == 0.0) {
                jobs.push_back([t] {
                    return timed("heat/mu0-reduction", {{"mu", 0.0}, {"t", t}}, 1e-13,
                                 [&]() -> std::pair<double, long> {
                        const MuParam p(0.0, t);
                        const double s = std::min(1.5, std::sqrt(5.0 * t));
                        double worst = 0.0;
                        long cells = 0;
                        for (double x : linspace(-s, s, 10))
                            for (double q : linspace(-s, s, 10)) {
                                const double classical =
                                    std::exp(-(x - q) * (x - q) / (2.0 * t)) /
                                    std::sqrt(2.0 * M_PI * t);
                                worst = std::max(
                                    worst, rel_diff(heat::rho(p, x, q), classical));
                                ++cells;
                            }
                        return {worst, cells};
                    });
                });
            }

            jobs.push_back([mu, t, qopts] {
                return timed("heat/semigroup", {{"mu", mu}, {"t", t}}, 1e-8,
                             [&]() -> std::pair<double, long> {
                    double worst = 0.0;
                    long cells = 0;
                    for (double x : {-1.0, 0.0, 0.5, 1.1})
                        for (double y : {-0.3, 0.8}) {
                            worst = std::max(worst,
                                             heat::semigroup_defect(mu, 0.4 * t, 0.6 * t,
                                                                    x, y, qopts));
                            ++cells;
                        }
                    return {worst, cells};
                });
            });

            jobs.push_back([mu, t, qopts] {
                return timed("heat/route-agreement", {{"mu", mu}, {"t", t}}, 1e-10,
                             [&]() -> std::pair<double, long> {
                    const MuParam p(mu, t);
                    double worst = 0.0;
                    long cells = 0;
                    for (const auto& probe : heat_probes(p))
                        for (double x : {-1.2, 0.0, 0.4, 1.5}) {
                            const Complex a = heat::heat_solve(probe, p, x, qopts);
                            const Complex b = heat::mu_convolve(heat::SigmaKernel{p},
                                                                probe, Complex(x), qopts);
                            worst = std::max(worst,
                                             std::abs(a - b) / std::max(std::abs(a), 1.0));
                            ++cells;
                        }
                    return {worst, cells};
                });
            });
        }

    for (double mu : mu_grid) {
        jobs.push_back([mu] {
            return timed("heat/translation-series", {{"mu", mu}, {"t", 1.0}}, 1e-8,
                         [&]() -> std::pair<double, long> {
                const MuParam p(mu, 1.0);
                const PolyGauss sig = heat::sigma_polygauss(p);
                double worst = 0.0;
                long cells = 0;
                for (double x : linspace(-1.5, 1.5, 5))
                    for (double q : linspace(-1.5, 1.5, 5)) {
                        const Complex series = mu_translate(sig, x, mu, 60).eval(q);
                        const double closed = heat::rho(p, x, q);
                        worst = std::max(worst, std::abs(series - closed) / closed);
                        ++cells;
                    }
                return {worst, cells};
            });
        });
    }

    return run_jobs(jobs, run.jobs);
}

// ---------------------------------------------------------------------------
// haar: probability normalization of d rho and the heat-kernel mass
// ---------------------------------------------------------------------------

ReportList suite_haar(const GridSpec& grid, const RunOptions& run) {
    const auto mu_grid = resolve_mu(grid, default_mu_grid());
    const auto t_grid = resolve_t(grid, default_t_grid());
    const quad::Options qopts = run.quad;
    std::vector<Job> jobs;

    for (double mu : mu_grid)
        for (double t : t_grid) {
            jobs.push_back([mu, t, qopts] {
                return timed("haar/rho-mass", {{"mu", mu}, {"t", t}}, 1e-10,
                             [&]() -> std::pair<double, long> {
                    const MuParam p(mu, t);
                    auto g = [&](double q) { return Complex(heat::sigma(p, q)); };
                    const Complex mass = quad::integrate_line_weighted(g, mu, qopts).value;
                    return {std::abs(mass - Complex(1.0)), 1};
                });
            });

            jobs.push_back([mu, t, qopts] {
                return timed("haar/kernel-mass", {{"mu", mu}, {"t", t}}, 1e-10,
                             [&]() -> std::pair<double, long> {
                    const MuParam p(mu, t);
                    double worst = 0.0;
                    long cells = 0;
                    for (double x : {-2.0, -1.2, -0.5, 0.0, 0.7, 1.5, 2.0}) {
                        auto g = [&](double q) { return Complex(heat::rho(p, x, q)); };
                        const Complex mass =
                            quad::integrate_line_weighted(g, mu, qopts).value;
                        worst = std::max(worst, std::abs(mass - Complex(1.0)));
                        ++cells;
                    }
                    return {worst, cells};
                });
            });
        }

    return run_jobs(jobs, run.jobs);
}

// ---------------------------------------------------------------------------
// pde: Theorem-1 residual with second-order signature
// ---------------------------------------------------------------------------

ReportList suite_pde(const GridSpec& grid, const RunOptions& run) {
    const auto mu_grid = resolve_mu(grid, default_mu_grid());
    const auto t_grid = resolve_t(grid, {0.7, 1.0, 2.0});
    std::vector<Job> jobs;
    const double h = 1e-3;

    for (double mu : mu_grid)
        for (double t : t_grid) {
            jobs.push_back([mu, t, h] {
                return timed("pde/residual", {{"mu", mu}, {"t", t}, {"h", h}}, 1e-5,
                             [&]() -> std::pair<double, long> {
                    const MuParam p(mu, t);
                    double worst = 0.0;
                    long cells = 0;
                    for (double x : linspace(-1.2, 1.2, 5))
                        for (double q : linspace(-1.1, 1.1, 5)) {
                            worst = std::max(worst, heat::pde_residual(p, x, q, h));
                            ++cells;
                        }
                    return {worst, cells};
                });
            });

            jobs.push_back([mu, t, h] {
                return timed("pde/richardson", {{"mu", mu}, {"t", t}, {"h", h}}, 0.5,
                             [&]() -> std::pair<double, long> {
                    const MuParam p(mu, t);
                    double worst = 0.0;
                    long cells = 0;
                    for (double x : {-1.1, -0.4, 0.3, 0.9})
                        for (double q : {-0.8, 0.25, 1.0}) {
                            const double r1 = heat::pde_residual(p, x, q, h);
                            const double r2 = heat::pde_residual(p, x, q, h / 2.0);
                            if (r1 < 1e-9) continue; // below the noise floor
                            worst = std::max(worst, std::fabs(r1 / r2 - 4.0));
                            ++cells;
                        }
                    return {worst, cells};
                });
            });
        }

    return run_jobs(jobs, run.jobs);
}

// ---------------------------------------------------------------------------
// ccr: commutation relation, ladder identity, eigenfunction truncation
// ---------------------------------------------------------------------------

ReportList suite_ccr(const GridSpec& grid, const RunOptions& run) {
    const auto mu_grid = resolve_mu(grid, {-0.49, -0.25, 0.0, 0.5, 1.0, 5.0});
    std::vector<Job> jobs;

    for (double mu : mu_grid) {
        jobs.push_back([mu] {
            return timed("ccr/commutator", {{"mu", mu}}, 1e-12,
                         [&]() -> std::pair<double, long> {
                const auto probes = ccr_probes(20);
                double worst = 0.0;
                for (const auto& f : probes) {
                    const PolyGauss defect = commutator_defect(f, mu);
                    worst = std::max(worst, defect.max_abs_coeff() /
                                                std::max(1.0, f.max_abs_coeff()));
                }
                return {worst, static_cast<long>(probes.size())};
            });
        });

        jobs.push_back([mu] {
            return timed("ccr/ladder", {{"mu", mu}}, 1e-12,
                         [&]() -> std::pair<double, long> {
                const auto probes = ccr_probes(20);
                double worst = 0.0;
                for (const auto& f : probes) {
                    // [a, a*] f = f + 2 mu J f
                    PolyGauss lhs = ladder(ladder(f, mu, Ladder::create), mu,
                                           Ladder::annihilate) -
                                    ladder(ladder(f, mu, Ladder::annihilate), mu,
                                           Ladder::create);
                    PolyGauss rhs = f + Complex(2.0 * mu) * parity(f);
                    worst = std::max(worst, (lhs - rhs).max_abs_coeff() /
                                                std::max(1.0, f.max_abs_coeff()));
                }
                // classical ground state is annihilated at mu = 0
                const PolyGauss ground = PolyGauss::constant(1.0, 0.5);
                worst = std::max(worst,
                                 ladder(ground, 0.0, Ladder::annihilate).max_abs_coeff());
                return {worst, static_cast<long>(probes.size()) + 1};
            });
        });

        jobs.push_back([mu] {
            return timed("ccr/eigenfunction-truncation", {{"mu", mu}}, 1e-12,
                         [&]() -> std::pair<double, long> {
                // D e_N - lambda e_N = -lambda^{N+1} x^N / gamma_mu(N) exactly,
                // with e_N the truncated exp_mu(lambda x) series
                const double lambda = 1.0;
                double worst = 0.0;
                long cells = 0;
                for (int n_trunc : {5, 20, 60}) {
                    std::vector<Complex> coeffs(n_trunc + 1);
                    double inv_gamma = 1.0;
                    coeffs[0] = 1.0;
                    for (int n = 1; n <= n_trunc; ++n) {
                        inv_gamma /= n + 2.0 * mu * (n & 1);
                        coeffs[n] = std::pow(lambda, n) * inv_gamma;
                    }
                    const PolyGauss e_n(coeffs, 0.0);
                    PolyGauss resid = dunkl(e_n, mu) - Complex(lambda) * e_n;
                    // expected: single coefficient at degree N
                    const double expected = -std::pow(lambda, n_trunc + 1) * inv_gamma;
                    for (int k = 0; k <= resid.degree(); ++k) {
                        const Complex want = (k == n_trunc) ? Complex(expected) : Complex(0.0);
                        worst = std::max(worst, std::abs(resid.coeff(k) - want));
                        ++cells;
                    }
                }
                return {worst, cells};
            });
        });
    }

    return run_jobs(jobs, run.jobs);
}

// ---------------------------------------------------------------------------
// ac-identity: the exact kernel relation C = M A
// ---------------------------------------------------------------------------

ReportList suite_ac_identity(const GridSpec& grid, const RunOptions& run) {
    const auto mu_grid = resolve_mu(grid, default_mu_grid());
    const auto t_grid = resolve_t(grid, default_t_grid());
    std::vector<Job> jobs;

    for (double mu : mu_grid)
        for (double t : t_grid) {
            jobs.push_back([mu, t] {
                return timed("ac-identity/kernel", {{"mu", mu}, {"t", t}}, 1e-12,
                             [&]() -> std::pair<double, long> {
                    const MuParam p(mu, t);
                    double worst = 0.0;
                    long cells = 0;
                    for (double re : linspace(-2.0, 2.0, 5))
                        for (double im : linspace(-2.0, 2.0, 5))
                            for (double q : linspace(-2.2, 2.2, 10)) {
                                worst = std::max(
                                    worst,
                                    transforms::ac_identity_residual(p, Complex(re, im), q));
                                ++cells;
                            }
                    return {worst, cells};
                });
            });
        }

    return run_jobs(jobs, run.jobs);
}

// ---------------------------------------------------------------------------
// unitarity: Theorem-2 Gram comparison for the four versions
// ---------------------------------------------------------------------------

ReportList suite_unitarity(const GridSpec& grid, const RunOptions& run) {
    const auto mu_grid = resolve_mu(grid, {-0.25, 0.0, 0.5, 1.5});
    const auto t_grid = resolve_t(grid, {0.5, 1.0, 2.0});
    const quad::Options qopts = run.quad;
    std::vector<Job> jobs;

    for (double mu : mu_grid)
        for (double t : t_grid)
            for (auto v : {transforms::Version::A, transforms::Version::B,
                           transforms::Version::C, transforms::Version::D}) {
                jobs.push_back([mu, t, v, qopts] {
                    const MuParam p(mu, t);
                    const auto probes = transforms::hermite_probes(p, 6);
                    return transforms::unitarity_report(v, p, probes, 1e-6, qopts);
                });
            }

    return run_jobs(jobs, run.jobs);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "special", "heat", "haar", "pde", "ccr", "ac-identity", "unitarity"};
    return names;
}

ReportList run_suite(const std::string& name, const GridSpec& grid, const RunOptions& run) {
    if (name == "special") return suite_special(grid, run);
    if (name == "heat") return suite_heat(grid, run);
    if (name == "haar") return suite_haar(grid, run);
    if (name == "pde") return suite_pde(grid, run);
    if (name == "ccr") return suite_ccr(grid, run);
    if (name == "ac-identity") return suite_ac_identity(grid, run);
    if (name == "unitarity") return suite_unitarity(grid, run);
    if (name == "all") {
        ReportList all;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, grid, run);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace musb::verify
