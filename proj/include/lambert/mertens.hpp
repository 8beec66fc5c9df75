#pragma once

#include <cstdint>
#include <span>

#include "lambert/arith.hpp"
#include "lambert/residual_scan.hpp"

namespace lambert {

// H = sum_{m>=2} sum_p 1/(m p^m), the constant in
// sum_{p<=x} 1/p = log log x + gamma - H + delta.  Frozen from the Mobius
// route (documented to 10 digits: 0.3157184520...); recomputed only in tests.
inline constexpr double kMertensH = 0.3157184520538901;

struct MertensReport {
    double H_mobius = 0.0;
    double H_direct = 0.0;
    double agreement = 0.0;  // |H_mobius - H_direct|
    std::uint64_t terms_mobius = 0;
    std::uint64_t prime_limit_direct = 0;
    int m_cap_direct = 0;
};

struct MobiusH {
    double value = 0.0;
    std::uint64_t terms_used = 0;
};

// H = -sum_{n>=2} mu(n) log(zeta(n))/n, summed until log zeta(n) < 1e-18.
MobiusH mertens_H_mobius();

struct DirectH {
    double value = 0.0;
    double tail_bound = 0.0;  // rigorous: m-geometric tail + prime integral tail
};

// Double sum over primes <= prime_limit, 2 <= m <= m_cap.
// prime_limit <= table.limit, m_cap >= 2.
DirectH mertens_H_direct(std::uint64_t prime_limit, int m_cap,
                         const ArithTable& table);

// Both routes, m_cap = 64.  The direct route runs at
// prime_limit = max(table.limit, 1e7), sieving internally when the caller's
// table is smaller: the prime tail is ~3.6e-8 at 1e6 and ~3.1e-9 at 1e7, and
// the 1e-8 agreement invariant needs the latter.
MertensReport compute_mertens_report(const ArithTable& table);

// residual(rho) = P(1+rho) - log(1/rho) + H on a decreasing rho grid in
// [1e-3, 0.5]; |residual| decreases along the grid tail.
ResidualScan mertens_first_check(std::span<const double> rho_grid,
                                 const ArithTable& table);

// For each x: delta = prime_reciprocal_sum(x) - log log x - gamma + H;
// returns min over the grid of [4/log(x+1) + 2/(x log x) - |delta|]; > 0
// when the explicit second-theorem bound holds.  x >= 3, within table range.
double mertens_second_check(std::span<const double> x_grid,
                            const ArithTable& table);

}  // namespace lambert
