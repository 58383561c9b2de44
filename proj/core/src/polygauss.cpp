#include "musb/polygauss.hpp"

#include <cmath>
#include <stdexcept>

namespace musb {

PolyGauss::PolyGauss(std::vector<Complex> coeffs, double rate)
    : coeffs_(std::move(coeffs)), rate_(rate) {
    if (!(rate_ >= 0.0))
        throw std::invalid_argument("PolyGauss: rate must be >= 0");
    trim();
}

PolyGauss PolyGauss::constant(Complex c, double rate) {
    return PolyGauss({c}, rate);
}

PolyGauss PolyGauss::monomial(int k, Complex c, double rate) {
    if (k < 0) throw std::invalid_argument("PolyGauss::monomial: k must be >= 0");
    std::vector<Complex> coeffs(k + 1, Complex(0.0));
    coeffs[k] = c;
    return PolyGauss(std::move(coeffs), rate);
}

void PolyGauss::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0))
        coeffs_.pop_back();
}

Complex PolyGauss::eval(double q) const {
    if (coeffs_.empty()) return 0.0;
    const double e = rate_ * q * q;
    if (e > 745.0) return 0.0; // Gaussian factor underflows before p overflows
    Complex p = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        p = p * q + *it;
    return p * std::exp(-e);
}

Complex PolyGauss::eval(Complex z) const {
    if (coeffs_.empty()) return 0.0;
    Complex p = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        p = p * z + *it;
    return p * std::exp(-rate_ * z * z);
}

double PolyGauss::max_abs_coeff() const {
    double m = 0.0;
    for (auto c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

PolyGauss& PolyGauss::operator+=(const PolyGauss& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) { *this = other; return *this; }
    if (rate_ != other.rate_)
        throw std::invalid_argument("PolyGauss: mixed Gaussian rates are not representable");
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Complex(0.0));
    for (size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

PolyGauss& PolyGauss::operator-=(const PolyGauss& other) {
    PolyGauss neg = other;
    neg *= Complex(-1.0);
    return *this += neg;
}

PolyGauss& PolyGauss::operator*=(Complex s) {
    if (s == Complex(0.0)) { coeffs_.clear(); return *this; }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

PolyGauss dunkl(const PolyGauss& f, double mu) {
    require_mu(mu);
    if (f.is_zero()) return PolyGauss({}, f.rate());
    const auto& c = f.coeffs();
    const int deg = f.degree();
    const double b = f.rate();
    // D_mu (q^k e^{-bq^2}) picks up (k + 2 mu [k odd]) q^{k-1} from the
    // derivative-plus-reflection part and -2b q^{k+1} from the Gaussian.
    std::vector<Complex> out(deg + 2, Complex(0.0));
    for (int k = 0; k <= deg; ++k) {
        if (k >= 1)
            out[k - 1] += c[k] * (k + 2.0 * mu * (k & 1));
        if (b != 0.0)
            out[k + 1] -= 2.0 * b * c[k];
    }
    return PolyGauss(std::move(out), b);
}

PolyGauss parity(const PolyGauss& f) {
    auto c = f.coeffs();
    for (size_t k = 1; k < c.size(); k += 2)
        c[k] = -c[k];
    return PolyGauss(std::move(c), f.rate());
}

std::pair<PolyGauss, PolyGauss> even_odd_split(const PolyGauss& f) {
    std::vector<Complex> even(f.coeffs().size(), Complex(0.0));
    std::vector<Complex> odd(f.coeffs().size(), Complex(0.0));
    for (size_t k = 0; k < f.coeffs().size(); ++k)
        ((k & 1) ? odd : even)[k] = f.coeffs()[k];
    return {PolyGauss(std::move(even), f.rate()), PolyGauss(std::move(odd), f.rate())};
}

PolyGauss position(const PolyGauss& f) {
    if (f.is_zero()) return f;
    std::vector<Complex> out(f.coeffs().size() + 1, Complex(0.0));
    for (size_t k = 0; k < f.coeffs().size(); ++k)
        out[k + 1] = f.coeffs()[k];
    return PolyGauss(std::move(out), f.rate());
}

PolyGauss momentum(const PolyGauss& f, double mu, double hbar) {
    if (!(hbar > 0.0))
        throw std::invalid_argument("momentum: requires hbar > 0");
    PolyGauss d = dunkl(f, mu);
    d *= Complex(0.0, -hbar); // hbar/i = -i hbar
    return d;
}

PolyGauss commutator_defect(const PolyGauss& f, double mu) {
    const double hbar = 1.0;
    PolyGauss pq = momentum(position(f), mu, hbar);
    PolyGauss qp = position(momentum(f, mu, hbar));
    PolyGauss defect = pq - qp;
    defect *= Complex(0.0, 1.0);
    defect -= f;
    defect -= Complex(2.0 * mu) * parity(f);
    return defect;
}

PolyGauss ladder(const PolyGauss& f, double mu, Ladder kind) {
    // At hbar = 1, iP = D, so a f = (Q + D) f / sqrt(2), a* f = (Q - D) f / sqrt(2).
    PolyGauss q = position(f);
    PolyGauss d = dunkl(f, mu);
    PolyGauss out = (kind == Ladder::annihilate) ? q + d : q - d;
    out *= Complex(1.0 / std::sqrt(2.0));
    return out;
}

PolyGauss mu_translate(const PolyGauss& f, double x, double mu, int terms,
                       double* last_term_magnitude) {
    require_mu(mu);
    if (terms < 0) throw std::invalid_argument("mu_translate: terms must be >= 0");
    PolyGauss sum = f;
    PolyGauss dn = f;            // D_mu^n f
    double factor = 1.0;         // (-x)^n / gamma_mu(n)
    double tail = 0.0;
    for (int n = 1; n <= terms; ++n) {
        dn = dunkl(dn, mu);
        if (dn.is_zero()) { tail = 0.0; break; } // terminating series
        factor *= -x / (n + 2.0 * mu * (n & 1));
        sum += Complex(factor) * dn;
        tail = std::fabs(factor) * dn.max_abs_coeff();
    }
    if (last_term_magnitude) *last_term_magnitude = tail;
    return sum;
}

} // namespace musb
