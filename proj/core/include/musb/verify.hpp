#pragma once

#include "musb/quadrature.hpp"
#include "musb/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace musb::verify {

/// Parameter grids for the identity suites.  Unset fields fall back to each
/// suite's documented default grid.
struct GridSpec {
    std::optional<std::vector<double>> mu;
    std::optional<std::vector<double>> t;
};

struct RunOptions {
    int jobs = 1;
    quad::Options quad{};
};

using ReportList = std::vector<VerificationReport>;

ReportList suite_special(const GridSpec& grid = {}, const RunOptions& run = {});
ReportList suite_heat(const GridSpec& grid = {}, const RunOptions& run = {});
ReportList suite_haar(const GridSpec& grid = {}, const RunOptions& run = {});
ReportList suite_pde(const GridSpec& grid = {}, const RunOptions& run = {});
ReportList suite_ccr(const GridSpec& grid = {}, const RunOptions& run = {});
ReportList suite_ac_identity(const GridSpec& grid = {}, const RunOptions& run = {});
ReportList suite_unitarity(const GridSpec& grid = {}, const RunOptions& run = {});

const std::vector<std::string>& suite_names();
ReportList run_suite(const std::string& name, const GridSpec& grid = {},
                     const RunOptions& run = {});

} // namespace musb::verify
