#include "lambert/arith.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lambert {

ArithTable build_table(std::uint64_t limit) {
    if (limit < 1 || limit > 100'000'000)
        throw std::invalid_argument("build_table: limit must be in [1, 1e8]");

    ArithTable t;
    t.limit = limit;
    t.d.assign(limit + 1, 0);
    t.mu.assign(limit + 1, 0);
    t.phi.assign(limit + 1, 0);
    t.liouville.assign(limit + 1, 0);
    t.big_omega.assign(limit + 1, 0);
    t.von_mangoldt.assign(limit + 1, 0.0);
    t.is_prime.assign(limit + 1, false);

    t.d[1] = 1;
    t.mu[1] = 1;
    t.phi[1] = 1;
    t.liouville[1] = 1;

    // low[n] = p^k where p is the smallest prime factor of n and p^k | n exactly.
    std::vector<std::uint32_t> low(limit + 1, 0);
    std::vector<std::uint32_t> primes;

    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (low[i] == 0) {
            low[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            t.is_prime[i] = true;
            t.d[i] = 2;
            t.mu[i] = -1;
            t.phi[i] = static_cast<std::uint32_t>(i - 1);
            t.liouville[i] = -1;
            t.big_omega[i] = 1;
        }
        for (std::uint32_t p : primes) {
            std::uint64_t ip = i * p;
            if (ip > limit) break;
            t.big_omega[ip] = static_cast<std::uint8_t>(t.big_omega[i] + 1);
            t.liouville[ip] = static_cast<std::int8_t>(-t.liouville[i]);
            if (i % p == 0) {
                low[ip] = low[i] * p;
                std::uint64_t cof = ip / low[ip];
                if (cof == 1) {  // ip is a prime power p^k, k >= 2
                    t.d[ip] = t.big_omega[ip] + 1;
                    t.mu[ip] = 0;
                    t.phi[ip] = static_cast<std::uint32_t>(ip - ip / p);
                } else {
                    t.d[ip] = t.d[low[ip]] * t.d[cof];
                    t.mu[ip] = static_cast<std::int8_t>(t.mu[low[ip]] * t.mu[cof]);
                    t.phi[ip] = t.phi[low[ip]] * t.phi[cof];
                }
                break;  // keep the sieve linear: p must stay <= spf(i)
            }
            low[ip] = p;
            t.d[ip] = 2 * t.d[i];
            t.mu[ip] = static_cast<std::int8_t>(-t.mu[i]);
            t.phi[ip] = static_cast<std::uint32_t>((p - 1) * t.phi[i]);
        }
    }

    for (std::uint64_t p : primes) {
        double lp = std::log(static_cast<double>(p));
        for (std::uint64_t q = p; q <= limit; q *= p) {
            t.von_mangoldt[q] = lp;
            if (q > limit / p) break;  // q*p would overflow past limit
        }
    }
    return t;
}

std::vector<double> divisor_convolve_with_one(std::span<const double> a) {
    std::size_t n = a.size();
    std::vector<double> b(n, 0.0);
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = m; k <= n; k += m) b[k - 1] += a[m - 1];
    return b;
}

namespace {

std::uint64_t checked_floor(double x, const ArithTable& table, const char* who) {
    if (!(x >= 0.0)) throw std::domain_error(std::string(who) + ": x must be >= 0");
    if (x > static_cast<double>(table.limit))
        throw std::out_of_range(std::string(who) + ": x exceeds the table limit");
    return static_cast<std::uint64_t>(x);
}

}  // namespace

double chebyshev_theta(double x, const ArithTable& table) {
    std::uint64_t n = checked_floor(x, table, "chebyshev_theta");
    long double s = 0.0L;
    for (std::uint64_t k = 2; k <= n; ++k)
        if (table.is_prime[k]) s += std::log(static_cast<double>(k));
    return static_cast<double>(s);
}

double chebyshev_psi(double x, const ArithTable& table) {
    std::uint64_t n = checked_floor(x, table, "chebyshev_psi");
    long double s = 0.0L;
    for (std::uint64_t k = 2; k <= n; ++k) s += table.von_mangoldt[k];
    return static_cast<double>(s);
}

double prime_reciprocal_sum(double x, const ArithTable& table) {
    std::uint64_t n = checked_floor(x, table, "prime_reciprocal_sum");
    long double s = 0.0L;
    for (std::uint64_t k = 2; k <= n; ++k)
        if (table.is_prime[k]) s += 1.0L / static_cast<long double>(k);
    return static_cast<double>(s);
}

}  // namespace lambert
