#include "lambert/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lambert/bernoulli.hpp"
#include "lambert/engines.hpp"
#include "lambert/special.hpp"

namespace lambert {

namespace {

using cld = std::complex<long double>;

constexpr long double kPi = 3.141592653589793238462643383279503L;

std::complex<double> narrow(cld x) {
    return {static_cast<double>(x.real()), static_cast<double>(x.imag())};
}

}  // namespace

AsymptoticExpansion wigert_expansion(int order_n) {
    if (order_n < 1 || order_n > 30)
        throw std::invalid_argument("wigert_expansion: order must be in [1, 30]");

    BernoulliCache bc = bernoulli_numbers(order_n + 1);  // needs B_{2n+2}, n < N
    AsymptoticExpansion exp;
    exp.order = order_n;
    exp.odd_coeffs_exact.reserve(order_n);
    exp.odd_coeffs.reserve(order_n);
    mpz_class fact = 2;  // (2n+2)! running from n = 0
    for (int n = 0; n < order_n; ++n) {
        // c_n = B_{2n+2}^2 / ((2n+2)! (2n+2))
        const mpq_class& b = bc.exact[2 * n + 2];
        mpq_class c = b * b / (mpq_class(fact) * (2 * n + 2));
        exp.odd_coeffs_exact.push_back(c);
        exp.odd_coeffs.push_back(c.get_d());
        fact *= (2 * n + 3) * (2 * n + 4);
    }
    return exp;
}

std::complex<double> wigert_eval(std::complex<double> z, int order_n) {
    AsymptoticExpansion exp = wigert_expansion(order_n);
    double az = std::abs(z);
    if (!(az > 0.0 && az <= 1.0))
        throw std::domain_error("wigert_eval: requires 0 < |z| <= 1");
    if (!(std::abs(std::arg(z)) <= 1.2))
        throw std::domain_error("wigert_eval: requires |arg z| <= 1.2");

    cld lz(z.real(), z.imag());
    cld value = (long double)kEulerGamma / lz - std::log(lz) / lz + 0.25L;
    cld zpow = lz;  // z^{2n+1}
    for (int n = 0; n < order_n; ++n) {
        value -= (long double)exp.odd_coeffs[n] * zpow;
        zpow *= lz * lz;
    }
    return narrow(value);
}

std::complex<double> dseries_direct(std::complex<double> z, const ArithTable& table) {
    if (!(z.real() >= 1e-4))
        throw std::domain_error("dseries_direct: requires Re z >= 1e-4");

    cld lz(z.real(), z.imag());
    cld e = std::exp(-lz);  // e^{-z}
    cld en = 1.0L;          // e^{-nz}
    cld sum = 0.0L;
    for (std::uint64_t n = 1;; ++n) {
        if (n > table.limit)
            throw std::out_of_range(
                "dseries_direct: series needs d(n) beyond the table limit");
        en *= e;
        cld term = (long double)table.d[n] * en;
        sum += term;
        if (std::abs(term) < 1e-18L * std::abs(sum)) break;
    }
    return narrow(sum);
}

double dseries_direct(double xi, const ArithTable& table) {
    return dseries_direct(std::complex<double>(xi, 0.0), table).real();
}

double dseries_reciprocal_form(double xi) {
    if (!(xi >= 1e-4))
        throw std::domain_error("dseries_reciprocal_form: requires xi >= 1e-4");
    long double sum = 0.0L;
    for (std::uint64_t m = 1; m <= 50'000'000ULL; ++m) {
        long double term = 1.0L / expm1l((long double)m * (long double)xi);
        sum += term;
        if (term < 1e-18L * sum) break;
    }
    return (double)sum;
}

ResidualScan schlomilch_residual_scan(int order_k, std::span<const double> xs,
                                      const ArithTable& table) {
    if (order_k < 1 || order_k > 10)
        throw std::invalid_argument("schlomilch_residual_scan: k must be in [1, 10]");
    if (xs.empty())
        throw std::invalid_argument("schlomilch_residual_scan: empty grid");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0 && xs[i] <= 0.5))
            throw std::domain_error("schlomilch_residual_scan: xi must lie in (0, 0.5]");
        if (i > 0 && !(xs[i] < xs[i - 1]))
            throw std::invalid_argument(
                "schlomilch_residual_scan: grid must decrease strictly");
    }

    // sum_m 1/(e^{m xi}-1) = gamma/xi - log xi/xi + 1/4
    //   - sum_{m<k} B_{2m+2}^2/((2m+2)!(2m+2)) xi^{2m+1} + O(xi^{2k-1});
    // the coefficient list is the Wigert list reindexed (asserted in tests).
    AsymptoticExpansion exp = wigert_expansion(order_k);
    ResidualScan scan;
    for (double xi : xs) {
        double direct = dseries_direct(xi, table);
        long double lx = xi;
        long double truncated = (long double)kEulerGamma / lx - logl(lx) / lx + 0.25L;
        long double xpow = lx;
        for (int m = 0; m + 1 < order_k; ++m) {
            truncated -= (long double)exp.odd_coeffs[m] * xpow;
            xpow *= lx * lx;
        }
        scan.points.emplace_back(xi, direct - (double)truncated);
    }
    scan.fitted_exponent = fit_loglog_slope(scan.points);
    return scan;
}

double voronoi_rhs(double x, int n_terms, const ArithTable& table) {
    if (!(x >= 0.05 && x < 1.0))
        throw std::domain_error("voronoi_rhs: requires 0.05 <= x < 1");
    if (n_terms < 1 || n_terms > 100)
        throw std::invalid_argument("voronoi_rhs: n_terms must be in [1, 100]");
    if ((std::uint64_t)n_terms > table.limit)
        throw std::out_of_range("voronoi_rhs: table too small for n_terms");

    long double lx = x;
    long double sum = 0.0L;
    for (int n = 1; n <= n_terms; ++n) {
        double y = 4.0 * (double)kPi * (double)kPi * n / x;
        sum += (long double)table.d[n] * (long double)ei_symmetric_combo(y);
    }
    return (double)((long double)kEulerGamma / lx - logl(lx) / lx + 0.25L -
                    2.0L / lx * sum);
}

double tauber_logd_residual(double x, const ArithTable& table) {
    if (!(x >= 1e-3 && x <= 0.2))
        throw std::domain_error("tauber_logd_residual: requires 1e-3 <= x <= 0.2");

    long double lx = x;
    long double e = expl(-lx);
    long double en = 1.0L;
    long double sum = 0.0L;
    int quiet = 0;
    for (std::uint64_t n = 1;; ++n) {
        if (n > table.limit)
            throw std::out_of_range(
                "tauber_logd_residual: series needs d(n) beyond the table limit");
        en *= e;
        long double ln = n == 1 ? 0.0L : logl((long double)n);
        sum += (ln - (long double)table.d[n]) * en;
        // The signed terms oscillate; stop on the monotone-enough envelope
        // (log n + d(n)) e^{-nx} staying negligible for several n.
        long double envelope = (ln + (long double)table.d[n]) * en;
        if (envelope < 1e-18L * (fabsl(sum) + 1.0L)) {
            if (++quiet >= 5) break;
        } else {
            quiet = 0;
        }
    }
    return (double)((sum + 2.0L * (long double)kEulerGamma / lx) * sqrtl(lx));
}

double tauber_h(double x, const ArithTable& table) {
    if (!(x >= 1.0)) throw std::domain_error("tauber_h: requires x >= 1");
    if (x > (double)table.limit)
        throw std::out_of_range("tauber_h: x exceeds the table limit");
    long double sum = 0.0L;
    std::uint64_t top = (std::uint64_t)x;
    for (std::uint64_t n = 1; n <= top; ++n)
        sum += ((long double)table.von_mangoldt[n] - 1.0L) / (long double)n;
    return (double)sum;
}

double slowly_decreasing_check(std::span<const double> x_grid,
                               std::span<const double> rho_grid,
                               const ArithTable& table) {
    if (x_grid.empty() || rho_grid.empty())
        throw std::invalid_argument("slowly_decreasing_check: empty grid");
    double worst = std::numeric_limits<double>::infinity();
    for (double rho : rho_grid) {
        if (!(rho > 1.0))
            throw std::domain_error("slowly_decreasing_check: requires rho > 1");
        for (double x : x_grid) {
            if (!(x >= 1.0) || rho * x > (double)table.limit)
                throw std::out_of_range("slowly_decreasing_check: grid outside table");
            double deficit =
                tauber_h(rho * x, table) - tauber_h(x, table) + std::log(rho) + 2.0 / x;
            worst = std::min(worst, deficit);
        }
    }
    return worst;
}

PartitionCheck partition_log_check(double x) {
    if (!(x >= 1e-4 && x <= 1.0 - 1e-4))
        throw std::domain_error("partition_log_check: requires 1e-4 <= x <= 1 - 1e-4");

    long double lx = x;
    PartitionCheck out;

    // lhs: dilogarithm partial sum, terms to 1e-15
    long double xm = 1.0L, lhs = 0.0L;
    for (std::uint64_t m = 1; m <= kDefaultTermCap; ++m) {
        xm *= lx;
        long double term = xm / ((long double)m * (long double)m);
        if (term < 1e-15L && m > 1) break;
        lhs += term;
    }
    out.lhs = (double)lhs;

    // mid: (1-x) log F(x) = (1-x) sum_m (1/m) x^m/(1-x^m)
    xm = 1.0L;
    long double logf = 0.0L;
    for (std::uint64_t m = 1; m <= kDefaultTermCap; ++m) {
        xm *= lx;
        long double term = xm / ((long double)m * (1.0L - xm));
        logf += term;
        if (term < 1e-18L * logf) break;
    }
    out.mid = (double)((1.0L - lx) * logf);

    out.rhs = (double)(kPi * kPi / 6.0L * lx);
    return out;
}

}  // namespace lambert
