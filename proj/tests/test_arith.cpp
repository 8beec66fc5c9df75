#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "lambert/arith.hpp"
#include "oracles.hpp"

using lambert::ArithTable;
using lambert::build_table;

namespace {

const ArithTable& table_10k() {
    static const ArithTable t = build_table(10'000);
    return t;
}

}  // namespace

TEST_CASE("sieve columns match the trial-division oracle up to 1e4") {
    const ArithTable& t = table_10k();
    for (std::uint64_t n = 1; n <= t.limit; ++n) {
        CAPTURE(n);
        REQUIRE(t.d[n] == oracle::divisor_count(n));
        REQUIRE(t.mu[n] == oracle::mobius(n));
        REQUIRE(t.phi[n] == oracle::euler_phi(n));
        REQUIRE(t.liouville[n] == oracle::liouville(n));
        REQUIRE(t.big_omega[n] == oracle::big_omega(n));
        REQUIRE(t.is_prime[n] == oracle::is_prime(n));
        REQUIRE(t.von_mangoldt[n] == doctest::Approx(oracle::von_mangoldt(n)).epsilon(1e-14));
    }
}

TEST_CASE("multiplicativity on 200 random coprime pairs") {
    const ArithTable& t = build_table(4'000'000);
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<std::uint64_t> pick(2, 2000);
    int tested = 0;
    while (tested < 200) {
        std::uint64_t a = pick(rng), b = pick(rng);
        if (std::gcd(a, b) != 1) continue;
        std::uint64_t ab = a * b;
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(t.d[ab] == t.d[a] * t.d[b]);
        REQUIRE(t.mu[ab] == t.mu[a] * t.mu[b]);
        REQUIRE(t.phi[ab] == t.phi[a] * t.phi[b]);
        REQUIRE(t.liouville[ab] == t.liouville[a] * t.liouville[b]);
        REQUIRE(t.big_omega[ab] == t.big_omega[a] + t.big_omega[b]);
        ++tested;
    }
}

TEST_CASE("table guards") {
    CHECK_THROWS_AS(build_table(0), std::invalid_argument);
    CHECK_THROWS_AS(build_table(200'000'000), std::invalid_argument);
    ArithTable one = build_table(1);
    CHECK(one.d[1] == 1);
    CHECK(one.mu[1] == 1);
    CHECK(one.phi[1] == 1);
    CHECK_FALSE(one.is_prime[1]);
}

TEST_CASE("divisor convolution with one") {
    const ArithTable& t = table_10k();
    const std::size_t n_max = 300;

    std::vector<double> mu(n_max), phi(n_max), lam(n_max), one(n_max, 1.0);
    for (std::size_t i = 0; i < n_max; ++i) {
        mu[i] = t.mu[i + 1];
        phi[i] = t.phi[i + 1];
        lam[i] = t.liouville[i + 1];
    }

    auto from_one = lambert::divisor_convolve_with_one(one);
    auto from_mu = lambert::divisor_convolve_with_one(mu);
    auto from_phi = lambert::divisor_convolve_with_one(phi);
    auto from_lam = lambert::divisor_convolve_with_one(lam);
    for (std::size_t i = 0; i < n_max; ++i) {
        std::uint64_t n = i + 1;
        CAPTURE(n);
        // sum_{m|n} 1 = d(n); sum mu = [n=1]; sum phi = n;
        // sum lambda = 1 if n is a square else 0.
        CHECK(from_one[i] == double(t.d[n]));
        CHECK(from_mu[i] == (n == 1 ? 1.0 : 0.0));
        CHECK(from_phi[i] == double(n));
        std::uint64_t r = std::uint64_t(std::sqrt(double(n)) + 0.5);
        CHECK(from_lam[i] == (r * r == n ? 1.0 : 0.0));
    }
}

TEST_CASE("chebyshev sums at hand-checked points") {
    const ArithTable& t = table_10k();
    double log2 = std::log(2.0), log3 = std::log(3.0);
    double log5 = std::log(5.0), log7 = std::log(7.0);

    CHECK(lambert::chebyshev_theta(10.0, t) ==
          doctest::Approx(log2 + log3 + log5 + log7).epsilon(1e-15));
    // psi adds the prime powers 4, 8, 9 below 10.
    CHECK(lambert::chebyshev_psi(10.0, t) ==
          doctest::Approx(3 * log2 + 2 * log3 + log5 + log7).epsilon(1e-15));
    CHECK(lambert::chebyshev_theta(1.5, t) == 0.0);
    CHECK(lambert::prime_reciprocal_sum(10.0, t) ==
          doctest::Approx(1 / 2.0 + 1 / 3.0 + 1 / 5.0 + 1 / 7.0).epsilon(1e-15));
}

TEST_CASE("chebyshev psi - theta window and psi rebuilt from theta") {
    const ArithTable& t = table_10k();
    for (double x : {1e3, 1e4}) {
        double theta = lambert::chebyshev_theta(x, t);
        double psi = lambert::chebyshev_psi(x, t);
        double gap = psi - theta;
        CAPTURE(x);
        CHECK(gap >= 0.0);
        CHECK(gap <= 2.0 * std::sqrt(x) * std::pow(std::log(x), 2));

        // psi(x) = sum_m theta(x^{1/m}); m caps at log2(x).
        double rebuilt = 0.0;
        for (int m = 1; std::pow(x, 1.0 / m) >= 2.0; ++m)
            rebuilt += lambert::chebyshev_theta(std::pow(x, 1.0 / m), t);
        CHECK(psi == doctest::Approx(rebuilt).epsilon(1e-9));
    }
}

TEST_CASE("range guards on table queries") {
    const ArithTable& t = table_10k();
    CHECK_THROWS_AS(lambert::chebyshev_theta(-1.0, t), std::domain_error);
    CHECK_THROWS_AS(lambert::chebyshev_psi(1e5, t), std::out_of_range);
    CHECK_THROWS_AS(lambert::prime_reciprocal_sum(2e4, t), std::out_of_range);
}
