#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "lambert/arith.hpp"
#include "lambert/residual_scan.hpp"

namespace lambert {

// Asymptotic expansion of sum d(n) e^{-nz} as z -> 0 in a sector:
// gamma/z - log(z)/z + 1/4 - sum_{n<N} c_n z^{2n+1},
// c_n = B_{2n+2}^2 / ((2n+2)! (2n+2)).
enum class LeadingTerm { gamma_over_z, minus_log_z_over_z, quarter };

struct AsymptoticExpansion {
    std::array<LeadingTerm, 3> leading{LeadingTerm::gamma_over_z,
                                       LeadingTerm::minus_log_z_over_z,
                                       LeadingTerm::quarter};
    std::vector<mpq_class> odd_coeffs_exact;  // c_0 .. c_{N-1}
    std::vector<double> odd_coeffs;
    int order = 0;  // N
};

// Exact-rational coefficients from the Bernoulli cache.  1 <= N <= 30.
AsymptoticExpansion wigert_expansion(int order_n);

// Evaluate the expansion at z, principal log branch.  0 < |z| <= 1 and
// |arg z| <= 1.2 enforced (sector guard keeps log z off the branch cut).
std::complex<double> wigert_eval(std::complex<double> z, int order_n);

// Direct sum of sum d(n) e^{-nz}; terms stop below 1e-18 * |partial|.
// Requires Re z >= 1e-4 (term-count guard).  The real overload also checks
// nothing extra: for real xi the value is real.
std::complex<double> dseries_direct(std::complex<double> z,
                                    const ArithTable& table);
double dseries_direct(double xi, const ArithTable& table);

// The same quantity as sum_m 1/(e^{m xi} - 1) (Lambert rearrangement with
// x = e^{-xi}); agrees with dseries_direct within 1e-12 on moderate xi.
double dseries_reciprocal_form(double xi);

// Residuals of the truncated expansion (k coefficient terms dropped after
// m < k) of sum 1/(e^{m xi}-1) on a strictly decreasing grid of xi in
// (0, 0.5]; fitted slope approaches 2k-1.  k <= 10.
ResidualScan schlomilch_residual_scan(int order_k, std::span<const double> xs,
                                      const ArithTable& table);

// Exponential-integral form of the d-series identity:
// gamma/x - log x/x + 1/4 - (2/x) sum_{n<=n_terms} d(n) g(4 pi^2 n / x)
// with g = ei_symmetric_combo.  0.05 <= x < 1, n_terms <= 100.
double voronoi_rhs(double x, int n_terms, const ArithTable& table);

// [sum_n (log n - d(n)) e^{-nx} + 2 gamma / x] * sqrt(x); bounded as x -> 0.
// 1e-3 <= x <= 0.2.
double tauber_logd_residual(double x, const ArithTable& table);

// h(x) = sum_{n<=x} (Lambda(n) - 1)/n; tends (slowly) to -2 gamma.
double tauber_h(double x, const ArithTable& table);

// Slow-decrease certificate for h: min over the grids of
// [h(rho x) - h(x) + log rho + 2/x]; nonnegative per the explicit bound chain.
double slowly_decreasing_check(std::span<const double> x_grid,
                               std::span<const double> rho_grid,
                               const ArithTable& table);

// The partition-function inequality sum x^m/m^2 < (1-x) log F(x) < (pi^2/6) x
// evaluated at x: lhs = dilogarithm partial sum (terms to 1e-15),
// mid = (1-x) sum_m (1/m) x^m/(1-x^m), rhs = (pi^2/6) x.
struct PartitionCheck {
    double lhs = 0.0;
    double mid = 0.0;
    double rhs = 0.0;
};
PartitionCheck partition_log_check(double x);  // 1e-4 <= x <= 1 - 1e-4

}  // namespace lambert
