#include "lambert/residual_scan.hpp"

#include <cmath>
#include <stdexcept>

namespace lambert {

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& [param, residual] : points) {
        if (residual == 0.0 || param <= 0.0) continue;
        double lx = std::log(param);
        double ly = std::log(std::abs(residual));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2)
        throw std::invalid_argument("fit_loglog_slope: need >= 2 usable points");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace lambert
