#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lambert {

// Sieve-backed tables of the classical arithmetic functions on 1..limit.
// Accessors are 1-indexed; slot 0 is unused padding.
struct ArithTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> d;          // number of divisors
    std::vector<std::int8_t> mu;           // Mobius
    std::vector<std::uint32_t> phi;        // Euler totient
    std::vector<std::int8_t> liouville;    // (-1)^Omega(n)
    std::vector<std::uint8_t> big_omega;   // prime factors with multiplicity
    std::vector<double> von_mangoldt;      // log p at prime powers, else 0
    std::vector<bool> is_prime;
};

// Linear sieve over 1..limit; one pass fills every column. limit in [1, 1e8].
ArithTable build_table(std::uint64_t limit);

// b[n] = sum over divisors m of n of a[m].  a is the 1-based coefficient
// sequence stored from index 0 (a[0] holds the n=1 coefficient); the result
// uses the same layout and length.
std::vector<double> divisor_convolve_with_one(std::span<const double> a);

// Chebyshev sums over the table: theta = sum of log p over primes <= x,
// psi = sum of von_mangoldt(n) over n <= x.  Requires x <= limit.
double chebyshev_theta(double x, const ArithTable& table);
double chebyshev_psi(double x, const ArithTable& table);

// Sum of 1/p over primes p <= x.  Requires x <= limit.
double prime_reciprocal_sum(double x, const ArithTable& table);

}  // namespace lambert
