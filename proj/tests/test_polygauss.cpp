#include "doctest.h"

#include "musb/polygauss.hpp"
#include "test_util.hpp"

#include <cmath>
#include <random>

using musb::Complex;
using musb::PolyGauss;
using testutil::rel_err;

namespace {

std::vector<PolyGauss> mixed_probes(int count) {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double rates[] = {0.0, 0.25, 0.5, 1.0};
    std::vector<PolyGauss> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Complex> c(i % 7 + 1);
        for (auto& x : c) x = Complex(u(rng), u(rng));
        c.back() += Complex(1.0);
        out.emplace_back(std::move(c), rates[i % 4]);
    }
    return out;
}

double coeff_dist(const PolyGauss& a, const PolyGauss& b) {
    return (a - b).max_abs_coeff();
}

} // namespace

TEST_SUITE("polygauss") {

TEST_CASE("evaluation") {
    CHECK(PolyGauss::constant(1.0).eval(3.0) == Complex(1.0));
    CHECK(rel_err(PolyGauss::monomial(1, 1.0, 1.0).eval(1.0), std::exp(-1.0)) <= 1e-15);
    const PolyGauss f({1.0, 0.0, 1.0}, 0.5); // (1+q^2) e^{-q^2/2}
    CHECK(rel_err(f.eval(2.0), 5.0 * std::exp(-2.0)) <= 1e-15);
    // Gaussian underflow guard: huge argument evaluates to zero, not NaN
    const PolyGauss g({1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0},
                      1.0);
    CHECK(g.eval(1e40) == Complex(0.0));
}

TEST_CASE("construction rejects negative rate") {
    CHECK_THROWS_AS(PolyGauss({1.0}, -0.1), std::invalid_argument);
}

TEST_CASE("degree normalization trims trailing zeros") {
    const PolyGauss f({1.0, 2.0, 0.0, 0.0}, 0.0);
    CHECK(f.degree() == 1);
    CHECK(PolyGauss({Complex(0.0)}, 0.0).is_zero());
}

TEST_CASE("mixed rates are rejected") {
    const PolyGauss a({1.0}, 0.5);
    const PolyGauss b({1.0}, 1.0);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("dunkl on monomials") {
    // D_mu q^n = (n + 2 mu [n odd]) q^{n-1}
    const PolyGauss q = PolyGauss::monomial(1);
    const PolyGauss d = dunkl(q, 0.5);
    CHECK(d.degree() == 0);
    CHECK(rel_err(d.coeff(0), 2.0) <= 1e-15);

    const PolyGauss q2 = PolyGauss::monomial(2);
    for (double mu : {-0.4, 0.0, 1.7}) {
        const PolyGauss d2 = dunkl(q2, mu);
        CHECK(d2.degree() == 1);
        CHECK(rel_err(d2.coeff(1), 2.0) <= 1e-15);
    }
}

TEST_CASE("dunkl on q e^{-q^2} at mu = 1") {
    // worked by hand: (3 - 2 q^2) e^{-q^2}
    const PolyGauss f = PolyGauss::monomial(1, 1.0, 1.0);
    const PolyGauss d = dunkl(f, 1.0);
    const PolyGauss expected({3.0, 0.0, -2.0}, 1.0);
    CHECK(coeff_dist(d, expected) <= 1e-15);
}

TEST_CASE("dunkl reduces to the classical derivative at mu = 0") {
    for (const auto& f : mixed_probes(12)) {
        const PolyGauss d = dunkl(f, 0.0);
        // p' - 2 b q p assembled independently
        std::vector<Complex> deriv(std::max(f.degree(), 0) + 2, Complex(0.0));
        for (int k = 1; k <= f.degree(); ++k) deriv[k - 1] += Complex((double)k) * f.coeff(k);
        for (int k = 0; k <= f.degree(); ++k)
            deriv[k + 1] -= 2.0 * f.rate() * f.coeff(k);
        CHECK(coeff_dist(d, PolyGauss(deriv, f.rate())) <= 1e-14);
    }
}

TEST_CASE("parity and the even/odd split") {
    CHECK(coeff_dist(parity(PolyGauss::constant(1.0)), PolyGauss::constant(1.0)) == 0.0);
    CHECK(coeff_dist(parity(PolyGauss::monomial(1)), PolyGauss::monomial(1, -1.0)) == 0.0);
    const PolyGauss f({1.0, 1.0}, 1.0); // (1+q) e^{-q^2}
    CHECK(coeff_dist(parity(f), PolyGauss({1.0, -1.0}, 1.0)) == 0.0);

    for (const auto& g : mixed_probes(10)) {
        CHECK(coeff_dist(parity(parity(g)), g) == 0.0);
        const auto [even, odd] = even_odd_split(g);
        CHECK(coeff_dist(even + odd, g) == 0.0);
        CHECK(coeff_dist(parity(even), even) == 0.0);
        CHECK(coeff_dist(parity(odd), Complex(-1.0) * odd) == 0.0);
    }

    const auto [e1, o1] = even_odd_split(PolyGauss({1.0, 1.0}, 0.0));
    CHECK(e1.degree() == 0);
    CHECK(o1.degree() == 1);
    const auto [e2, o2] = even_odd_split(PolyGauss({2.0, 1.0, 1.0}, 0.0));
    CHECK(coeff_dist(e2, PolyGauss({2.0, 0.0, 1.0}, 0.0)) == 0.0);
    CHECK(coeff_dist(o2, PolyGauss::monomial(1)) == 0.0);
}

TEST_CASE("position and momentum") {
    CHECK(coeff_dist(position(PolyGauss::constant(1.0)), PolyGauss::monomial(1)) == 0.0);
    const PolyGauss p_q = momentum(PolyGauss::monomial(1), 0.0, 1.0);
    CHECK(p_q.degree() == 0);
    CHECK(std::abs(p_q.coeff(0) - Complex(0.0, -1.0)) <= 1e-15);
    const PolyGauss p_q2 = momentum(PolyGauss::monomial(2), 0.5, 1.0);
    CHECK(std::abs(p_q2.coeff(1) - Complex(0.0, -2.0)) <= 1e-15);
}

TEST_CASE("commutation relation i[P,Q] = I + 2 mu J") {
    CHECK(commutator_defect(PolyGauss::constant(1.0), 0.5).max_abs_coeff() <= 1e-12);
    CHECK(commutator_defect(PolyGauss::monomial(3, 1.0, 1.0), 1.0).max_abs_coeff() <=
          1e-12);
    CHECK(commutator_defect(PolyGauss::monomial(2), 0.0).max_abs_coeff() <= 1e-12);
    for (double mu : {-0.49, -0.25, 0.0, 0.5, 1.0, 5.0})
        for (const auto& f : mixed_probes(20))
            CHECK(commutator_defect(f, mu).max_abs_coeff() /
                      std::max(1.0, f.max_abs_coeff()) <=
                  1e-12);
}

TEST_CASE("ladder operators") {
    using musb::Ladder;
    // a_0 annihilates the classical ground state e^{-q^2/2}
    const PolyGauss ground = PolyGauss::constant(1.0, 0.5);
    CHECK(ladder(ground, 0.0, Ladder::annihilate).max_abs_coeff() <= 1e-15);

    // [a, a*] f = f + 2 mu J f, spot-checked on 1 and q at mu = 0.5
    auto bracket = [](const PolyGauss& f, double mu) {
        return ladder(ladder(f, mu, Ladder::create), mu, Ladder::annihilate) -
               ladder(ladder(f, mu, Ladder::annihilate), mu, Ladder::create);
    };
    const PolyGauss one = PolyGauss::constant(1.0);
    CHECK(coeff_dist(bracket(one, 0.5), Complex(2.0) * one) <= 1e-15);
    const PolyGauss q = PolyGauss::monomial(1);
    CHECK(bracket(q, 0.5).max_abs_coeff() <= 1e-15); // (1 - 2 mu) q = 0 at mu = 1/2

    for (double mu : {-0.3, 0.0, 0.8, 2.0})
        for (const auto& f : mixed_probes(12)) {
            const PolyGauss expected = f + Complex(2.0 * mu) * parity(f);
            CHECK(coeff_dist(bracket(f, mu), expected) /
                      std::max(1.0, f.max_abs_coeff()) <=
                  1e-12);
        }
}

TEST_CASE("mu_translate basics") {
    // constants are fixed points: D_mu^n 1 = 0 for n >= 1
    const PolyGauss one = PolyGauss::constant(1.0);
    CHECK(coeff_dist(mu_translate(one, 0.8, 1.3, 40), one) == 0.0);

    // classical translation at mu = 0: q -> q - a
    const PolyGauss q = PolyGauss::monomial(1);
    const PolyGauss shifted = mu_translate(q, 0.7, 0.0, 2);
    CHECK(coeff_dist(shifted, PolyGauss({-0.7, 1.0}, 0.0)) <= 1e-15);

    // mu = 0 on polynomials is the exact shifted polynomial
    const PolyGauss poly({2.0, -1.0, 0.5, 1.0}, 0.0);
    const double a = 1.3;
    const PolyGauss translated = mu_translate(poly, a, 0.0, 10);
    for (double x : {-1.0, 0.0, 0.4, 2.2})
        CHECK(rel_err(translated.eval(x), poly.eval(x - a)) <= 1e-14);

    double tail = 1.0;
    mu_translate(poly, a, 0.0, 10, &tail);
    CHECK(tail == 0.0); // terminating series
}

TEST_CASE("eigenfunction truncation identity") {
    // with e_N = sum_{n<=N} (lambda x)^n / gamma_mu(n):
    // D e_N - lambda e_N = -lambda^{N+1} x^N / gamma_mu(N) exactly
    const double lambda = 1.0;
    for (double mu : {-0.25, 0.0, 0.5, 1.0, 3.0})
        for (int N : {5, 20, 60}) {
            std::vector<Complex> coeffs(N + 1);
            double inv_gamma = 1.0;
            coeffs[0] = 1.0;
            for (int n = 1; n <= N; ++n) {
                inv_gamma /= n + 2.0 * mu * (n & 1);
                coeffs[n] = std::pow(lambda, n) * inv_gamma;
            }
            const PolyGauss e_n(coeffs, 0.0);
            const PolyGauss resid = dunkl(e_n, mu) - Complex(lambda) * e_n;
            for (int k = 0; k <= resid.degree(); ++k) {
                const Complex want =
                    (k == N) ? Complex(-std::pow(lambda, N + 1) * inv_gamma) : Complex(0.0);
                CHECK(std::abs(resid.coeff(k) - want) <= 1e-12);
            }
            CHECK(resid.degree() == N);
        }
}

} // TEST_SUITE
