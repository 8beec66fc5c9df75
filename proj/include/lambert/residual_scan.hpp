#pragma once

#include <utility>
#include <vector>

namespace lambert {

// Residuals of an asymptotic claim along a parameter grid decreasing toward
// the limit, with the log-log least-squares slope of |residual| vs parameter.
struct ResidualScan {
    std::vector<std::pair<double, double>> points;  // (parameter, residual)
    double fitted_exponent = 0.0;
};

// Least-squares slope of log|residual| against log(parameter).
// Requires >= 2 points with nonzero residuals.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace lambert
