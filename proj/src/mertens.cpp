#include "lambert/mertens.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lambert/special.hpp"

namespace lambert {

namespace {

// Mobius on the small n the H series needs (log zeta(n) underflows by n ~ 60).
int mobius_small(std::uint64_t n) {
    int count = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++count;
        }
    }
    if (n > 1) ++count;
    return count % 2 == 0 ? 1 : -1;
}

}  // namespace

MobiusH mertens_H_mobius() {
    // H = -sum_{n>=2} mu(n) log(zeta(n))/n, stopping once log zeta(n) < 1e-18
    // (in binary double that happens near n = 54, where zeta rounds to 1;
    // the dropped tail is < 2^-54/54, far below the result's resolution).
    long double sum = 0.0L;
    std::uint64_t n = 1;
    std::uint64_t used = 0;
    for (;;) {
        ++n;
        double lz = std::log(zeta_real((double)n));
        if (lz < 1e-18) break;
        int mu = mobius_small(n);
        if (mu != 0) {
            sum -= (long double)mu * (long double)lz / (long double)n;
            ++used;
        }
    }
    return MobiusH{(double)sum, used};
}

DirectH mertens_H_direct(std::uint64_t prime_limit, int m_cap,
                         const ArithTable& table) {
    if (prime_limit > table.limit)
        throw std::out_of_range("mertens_H_direct: prime_limit exceeds table");
    if (m_cap < 2)
        throw std::invalid_argument("mertens_H_direct: m_cap must be >= 2");

    long double sum = 0.0L;
    for (std::uint64_t p = 2; p <= prime_limit; ++p) {
        if (!table.is_prime[p]) continue;
        long double inv = 1.0L / (long double)p;
        long double pm = inv;  // p^{-m}
        for (int m = 2; m <= m_cap; ++m) {
            pm *= inv;
            long double term = pm / (long double)m;
            sum += term;
            if (term < 1e-22L) break;
        }
    }

    // Tail over primes > prime_limit, all m >= 2: bounded by
    // sum_{p>P} 1/(2p(p-1)), then by parts with pi(t) < 1.25506 t/log t
    // (valid t >= 17):  <= (1.25506/log P)(1/(2(P-1)) + (1/2)log(P/(P-1))).
    // The m > m_cap remainder adds (2/(m_cap+1))(2^{-(m_cap+1)} + P 3^{-(m_cap+1)}).
    long double lp = (long double)prime_limit;
    long double prime_tail = 1.25506L / logl(lp) *
                             (0.5L / (lp - 1.0L) + 0.5L * logl(lp / (lp - 1.0L)));
    long double m_tail = 2.0L / (long double)(m_cap + 1) *
                         (powl(2.0L, -(long double)(m_cap + 1)) +
                          lp * powl(3.0L, -(long double)(m_cap + 1)));
    return DirectH{(double)sum, (double)(prime_tail + m_tail)};
}

MertensReport compute_mertens_report(const ArithTable& table) {
    // The direct route needs primes to 1e7 for the 1e-8 agreement invariant;
    // smaller caller tables get a dedicated internal sieve.
    constexpr std::uint64_t kDirectFloor = 10'000'000;
    MobiusH mob = mertens_H_mobius();
    DirectH dir;
    std::uint64_t prime_limit;
    if (table.limit >= kDirectFloor) {
        prime_limit = table.limit;
        dir = mertens_H_direct(prime_limit, 64, table);
    } else {
        prime_limit = kDirectFloor;
        ArithTable big = build_table(kDirectFloor);
        dir = mertens_H_direct(prime_limit, 64, big);
    }
    MertensReport report;
    report.H_mobius = mob.value;
    report.H_direct = dir.value;
    report.agreement = std::abs(mob.value - dir.value);
    report.terms_mobius = mob.terms_used;
    report.prime_limit_direct = prime_limit;
    report.m_cap_direct = 64;
    return report;
}

ResidualScan mertens_first_check(std::span<const double> rho_grid,
                                 const ArithTable& table) {
    if (rho_grid.empty())
        throw std::invalid_argument("mertens_first_check: empty grid");
    ResidualScan scan;
    for (double rho : rho_grid) {
        if (!(rho >= 1e-3 && rho <= 0.5))
            throw std::domain_error("mertens_first_check: rho must be in [1e-3, 0.5]");
        double residual = prime_zeta(1.0 + rho, table) - std::log(1.0 / rho) + kMertensH;
        scan.points.emplace_back(rho, residual);
    }
    scan.fitted_exponent = fit_loglog_slope(scan.points);
    return scan;
}

double mertens_second_check(std::span<const double> x_grid, const ArithTable& table) {
    if (x_grid.empty())
        throw std::invalid_argument("mertens_second_check: empty grid");
    double worst = std::numeric_limits<double>::infinity();
    for (double x : x_grid) {
        if (!(x >= 3.0))
            throw std::domain_error("mertens_second_check: requires x >= 3");
        double delta = prime_reciprocal_sum(x, table) - std::log(std::log(x)) -
                       kEulerGamma + kMertensH;
        double bound = 4.0 / std::log(x + 1.0) + 2.0 / (x * std::log(x));
        worst = std::min(worst, bound - std::abs(delta));
    }
    return worst;
}

}  // namespace lambert
