#pragma once

#include "musb/mu_param.hpp"

#include <functional>
#include <vector>

namespace musb::quad {

struct Options {
    int min_level = 4;
    int max_level = 0; // 0 -> default ceiling (see set_default_max_level)
    double rel_tol = 1e-12;
};

struct Result {
    Complex value{};
    double residual = 0.0; // achieved successive-level agreement, relative
    int level = 0;
};

/// Raised when successive refinements fail to agree within the tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, Complex last_estimate, Complex previous_estimate);
    Complex last;
    Complex previous;
};

int default_max_level();
void set_default_max_level(int level);

/// integral over R of |q|^{2 mu} g(q) dq for g with at least Gaussian decay.
/// The half line is covered by an exp-sinh substitution which absorbs both
/// the |q|^{2 mu} endpoint singularity and the Gaussian tail; levels are
/// doubled until two successive estimates agree to rel_tol.
Result integrate_line_weighted(const std::function<Complex(double)>& g, double mu,
                               Options opts = {});

/// integral over C of g(z) w(|z|) dx dy in polar form: exp-sinh radial rule
/// times a midpoint angular rule (exact for trigonometric polynomials of
/// degree < M).  The angular count doubles along with the radial level.
Result integrate_plane_radial(const std::function<Complex(Complex)>& g,
                              const std::function<double(double)>& w, Options opts = {});

/// Materialized node/weight sets, exposed for inspection and self-tests.
struct Rule {
    enum class Kind { line_weighted, radial, angular };
    Kind kind;
    std::vector<double> nodes;   // strictly increasing
    std::vector<double> weights; // all positive, include the level step h
    double mu = 0.0;
    int level = 0;
};

Rule make_line_rule(double mu, int level);
Rule make_radial_rule(int level);
Rule make_angular_rule(int count);

/// exp-sinh grid on (0, inf): r = exp((pi/2) sinh(k h)), w = (pi/2) cosh(k h) r.
/// Weights exclude the step h.  center is the index of the k = 0 node.
struct ExpSinhGrid {
    std::vector<double> r;
    std::vector<double> w;
    int center = 0;
    double h = 0.0;
};
ExpSinhGrid exp_sinh_grid(int level, double smax);

/// Angular midpoint nodes theta_j = (2j+1) pi / m, antipodes at j + m/2.
std::vector<double> angular_nodes(int m);

} // namespace musb::quad
