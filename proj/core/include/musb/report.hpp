#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace musb {

/// Outcome of one identity check over one parameter cell.
/// Invariant: passed == (max_residual <= tolerance), residual finite.
struct VerificationReport {
    std::string identity_id;
    std::vector<std::pair<std::string, double>> params;
    long grid_size = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double wall_time_s = 0.0;
};

inline VerificationReport make_report(std::string id,
                                      std::vector<std::pair<std::string, double>> params,
                                      long grid_size, double max_residual,
                                      double tolerance, double wall_time_s) {
    VerificationReport r;
    r.identity_id = std::move(id);
    r.params = std::move(params);
    r.grid_size = grid_size;
    r.max_residual = max_residual;
    r.tolerance = tolerance;
    r.passed = std::isfinite(max_residual) && max_residual <= tolerance;
    r.wall_time_s = wall_time_s;
    return r;
}

} // namespace musb
