#include "musb/transforms.hpp"

#include "musb/heat.hpp"
#include "musb/special.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace musb::transforms {

namespace {

// Upper bound on the |z|^2 exponent of the transform of a rate-a probe:
// completing the square in the q-integral gives exp(c z^2) with
// c = 1/(4 a t^2 + t) - 1/(2t); the bound only steers integrability checks.
double output_growth(double rate, const MuParam& p) {
    const double t = p.t();
    const double c = 1.0 / (4.0 * rate * t * t + t) - 1.0 / (2.0 * t);
    return 1.05 * std::fabs(c) + 1e-12;
}

} // namespace

const char* version_name(Version v) {
    switch (v) {
        case Version::A: return "A";
        case Version::B: return "B";
        case Version::C: return "C";
        case Version::D: return "D";
    }
    return "?";
}

Version version_from_string(const std::string& s) {
    if (s == "A") return Version::A;
    if (s == "B") return Version::B;
    if (s == "C") return Version::C;
    if (s == "D") return Version::D;
    throw std::invalid_argument("unknown transform version '" + s + "' (expected A|B|C|D)");
}

Complex kernel(Version v, const MuParam& p, Complex z, double q) {
    const double t = p.t();
    const double mu = p.mu();
    switch (v) {
        case Version::A:
        case Version::D: {
            const double denom = std::pow(2.0 * t, mu / 2.0 + 0.25) *
                                 std::sqrt(special::gamma_euler(mu + 0.5));
            return std::exp(-z * z / (2.0 * t) - q * q / (4.0 * t)) *
                   special::exp_mu(q * z / t, mu) / denom;
        }
        case Version::B:
            return heat::rho(p, z, q) / heat::sigma(p, q);
        case Version::C:
            return heat::rho(p, z, q);
    }
    throw std::logic_error("kernel: bad version");
}

Complex apply(Version v, const PolyGauss& psi, const MuParam& p, Complex z,
              quad::Options opts) {
    std::function<Complex(double)> g;
    switch (v) {
        case Version::A:
            g = [&](double q) { return kernel(Version::A, p, z, q) * psi.eval(q); };
            break;
        case Version::B:
            g = [&](double q) {
                return heat::sigma(p, q) * kernel(Version::B, p, z, q) * psi.eval(q);
            };
            break;
        case Version::C:
            g = [&](double q) { return kernel(Version::C, p, z, q) * psi.eval(q); };
            break;
        case Version::D:
            g = [&](double q) {
                return heat::sigma(p, q) * kernel(Version::D, p, z, q) * psi.eval(q);
            };
            break;
    }
    return quad::integrate_line_weighted(g, p.mu(), opts).value;
}

double ac_identity_residual(const MuParam& p, Complex z, double q) {
    const Complex lhs = kernel(Version::C, p, z, q);
    const MuParam half(p.mu(), p.t() / 2.0);
    const Complex rhs = spaces::m_factor(p, z) * kernel(Version::A, half, z / 2.0, q);
    return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
}

PolyGauss v_dilate(const PolyGauss& psi, const MuParam& p) {
    const double t = p.t();
    const double front = std::pow(t, p.mu() / 2.0 + 0.25);
    std::vector<Complex> coeffs = psi.coeffs();
    double power = front; // t^{mu/2+1/4} t^{k/2}
    for (size_t k = 0; k < coeffs.size(); ++k) {
        coeffs[k] *= power;
        power *= std::sqrt(t);
    }
    return PolyGauss(std::move(coeffs), psi.rate() * t);
}

double factorization_residual(const MuParam& p, const PolyGauss& psi, Complex z,
                              quad::Options opts) {
    const Complex lhs = apply(Version::A, psi, p, z, opts);
    const MuParam unit(p.mu(), 1.0);
    const Complex rhs =
        apply(Version::A, v_dilate(psi, p), unit, z / std::sqrt(p.t()), opts);
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

std::vector<PolyGauss> hermite_probes(const MuParam& p, int count) {
    std::vector<PolyGauss> probes;
    probes.reserve(count);
    const double rate = 1.0 / (2.0 * p.t());
    for (int k = 0; k < count; ++k)
        probes.push_back(PolyGauss::monomial(k, 1.0, rate));
    return probes;
}

std::vector<std::vector<Complex>> domain_gram(Version v, const MuParam& p,
                                              const std::vector<PolyGauss>& probes,
                                              quad::Options opts) {
    const size_t n = probes.size();
    const bool ground = (v == Version::B || v == Version::D);
    std::vector<std::vector<Complex>> gram(n, std::vector<Complex>(n, Complex(0.0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = i; k < n; ++k) {
            auto g = [&](double q) {
                Complex val = std::conj(probes[i].eval(q)) * probes[k].eval(q);
                if (ground) val *= heat::sigma(p, q);
                return val;
            };
            gram[i][k] = quad::integrate_line_weighted(g, p.mu(), opts).value;
            if (k != i) gram[k][i] = std::conj(gram[i][k]);
        }
    return gram;
}

spaces::HoloSample range_sample(Version v, const PolyGauss& psi, const MuParam& p,
                                quad::Options opts) {
    const double growth_raw = output_growth(psi.rate() + ((v == Version::B || v == Version::D)
                                                              ? 1.0 / (4.0 * p.t())
                                                              : 0.0),
                                            p);
    switch (v) {
        case Version::A:
        case Version::B: {
            const MuParam param = p;
            const PolyGauss probe = psi;
            return spaces::HoloSample{
                [=](Complex z) { return apply(v, probe, param, z, opts); }, growth_raw,
                psi.degree()};
        }
        case Version::C:
        case Version::D: {
            // range element of C^2_{mu,t}; the Gram is taken after the G twist,
            // and the twisted sample coincides with an A_{mu,t/2}-type output.
            const MuParam param = p;
            const PolyGauss probe = psi;
            spaces::HoloSample raw{
                [=](Complex z) { return apply(v, probe, param, z, opts); }, 0.0,
                psi.degree()};
            spaces::HoloSample twisted = spaces::g_twist(raw, p);
            const MuParam half(p.mu(), p.t() / 2.0);
            twisted.growth = output_growth(
                psi.rate() + ((v == Version::D) ? 1.0 / (4.0 * p.t()) : 0.0), half);
            return twisted;
        }
    }
    throw std::logic_error("range_sample: bad version");
}

VerificationReport unitarity_report(Version v, const MuParam& p,
                                    const std::vector<PolyGauss>& probes,
                                    double tolerance, quad::Options opts) {
    const auto start = std::chrono::steady_clock::now();
    const size_t n = probes.size();

    auto dom = domain_gram(v, p, probes, opts);

    // normalize probes in the domain space so Gram entries are O(1)
    std::vector<PolyGauss> unit;
    unit.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const double norm = std::sqrt(std::max(dom[i][i].real(), 1e-300));
        PolyGauss scaled = probes[i];
        scaled *= Complex(1.0 / norm);
        unit.push_back(std::move(scaled));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            dom[i][k] /= std::sqrt(dom[i][i].real() * dom[k][k].real());

    std::vector<spaces::HoloSample> images;
    images.reserve(n);
    for (size_t i = 0; i < n; ++i)
        images.push_back(range_sample(v, unit[i], p, opts));

    const MuParam range_param = (v == Version::C || v == Version::D)
                                    ? MuParam(p.mu(), p.t() / 2.0)
                                    : p;
    quad::Options gram_opts = opts;
    if (gram_opts.rel_tol < 1e-9) gram_opts.rel_tol = 1e-9;
    const auto ran = spaces::gram_B2(images, range_param, gram_opts);

    double defect = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            defect = std::max(defect, std::abs(ran[i][k] - dom[i][k]));

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return make_report(std::string("unitarity/") + version_name(v),
                       {{"mu", p.mu()}, {"t", p.t()}},
                       static_cast<long>(n * n), defect, tolerance, wall);
}

} // namespace musb::transforms
