#pragma once

#include <vector>

#include "lambert/arith.hpp"

namespace lambert {

// Euler-Mascheroni constant, frozen; never recomputed at runtime (the
// Bernoulli series for it diverges and exists only as a demonstration).
inline constexpr double kEulerGamma = 0.57721566490153286;

// Real zeta via direct sum to cutoff_m plus Euler-Maclaurin corrections of
// the given order (order 5 = corrections through B_10).  Accurate to
// ~1e-12 relative for s >= 2 and ~1e-10 absolute on (1, 2).
struct ZetaEvaluator {
    int cutoff_m = 50;
    int correction_order = 5;
    double operator()(double s) const;  // requires s >= 1 + 1e-6
};

double zeta_real(double s);

// Prime zeta P(s) = sum over primes of p^{-s}, computed as
// sum_n mu(n)/n * log zeta(ns).  Requires s >= 1 + 1e-3, table.limit >= 1e5.
double prime_zeta(double s, const ArithTable& table);

// Exponential integral Ei(x) = -PV int_{-x}^inf e^{-t}/t dt, x != 0,
// |x| <= 700.  Series-plus-log for |x| <= 40, asymptotic/continued-fraction
// regime beyond.
double exp_integral_ei(double x);

// g(y) = e^y Ei(-y) + e^{-y} Ei(y), y > 0.  The 1/y terms cancel and
// g(y) ~ 2/y^2; direct composition for y <= 500, asymptotic series beyond.
double ei_symmetric_combo(double y);

namespace detail {
// Both branch implementations of ei_symmetric_combo, exposed so tests can
// check crossover continuity at y = 500.
double ei_combo_direct(double y);
double ei_combo_asymptotic(double y);
// Ei branch implementations for the |x| = 40 overlap check.
double ei_series(double x);      // gamma + log|x| + sum x^k/(k*k!)
double ei_asymptotic(double x);  // e^x/x * sum k!/x^k, x > 0
}  // namespace detail

// Degree-(k-1) partial sum of the expansion of (1/2)cot(h/2) - 1/h in odd
// powers of h, plus the rigorous remainder bound |B_2k| h^{2k}/((2k)! |sin h|).
// Requires 0 < h < pi, 1 <= k <= 30.
struct CotExpansion {
    double value = 0.0;
    double remainder_bound = 0.0;
};
CotExpansion cot_half_expansion(double h, int k);

// s_k = 1/2 + sum_{n=1}^{k} (-1)^{n+1} B_{2n}/(2n) for k = 1..K (K <= 40).
// The series is divergent; this exists to demonstrate its asymptotic
// character, not to compute gamma.
std::vector<double> gamma_bernoulli_partial_sums(int count_k);

}  // namespace lambert
