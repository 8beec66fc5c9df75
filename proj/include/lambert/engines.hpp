#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <functional>
#include <string_view>

#include "lambert/arith.hpp"

namespace lambert {

enum class StopReason { tolerance_met, term_cap, divergence_guard };
const char* to_string(StopReason r);

// Outcome of any series evaluation: value, work done, why the loop stopped,
// and the magnitude of the first omitted term as an a-posteriori estimate.
struct EvalReport {
    std::complex<double> value;
    std::uint64_t terms_used = 0;
    StopReason stop_reason = StopReason::tolerance_met;
    double error_estimate = 0.0;
};

enum class Coeff { one, mobius, phi, liouville, mangoldt };
Coeff coeff_from_name(std::string_view name);  // throws on unknown name
const char* to_string(Coeff c);

// Coefficient source a_n for the engines.  Table-backed sources throw
// out_of_range past table.limit; the constant-1 source has no bound.
using CoeffFn = std::function<double(std::uint64_t)>;
CoeffFn coefficient_one();
CoeffFn coefficient_source(Coeff c, const ArithTable& table);

inline constexpr std::uint64_t kDefaultTermCap = 1'000'000;

// Direct partial sums of sum a_n x^n/(1-x^n); stops after three consecutive
// terms with |term| < tol*max(1,|partial|) (single small terms are unsafe
// for sign-changing a_n), or at term_cap.  |x| <= 1 - 1e-9.
EvalReport eval_naive(const CoeffFn& a, std::complex<double> x, double tol,
                      std::uint64_t term_cap = kDefaultTermCap);

// Rearranged power series sum_{n<=N} b_n x^n with b_n = sum_{m|n} a_m;
// error_estimate from the geometric tail |b_N| |x|^{N+1}/(1-|x|).  N <= 1e7.
EvalReport eval_power_series(const CoeffFn& a, std::complex<double> x,
                             std::uint64_t n_terms);

// Accelerated form of the d-series only:
// sum x^n/(1-x^n) = sum x^{n^2} (1+x^n)/(1-x^n).  0 <= x <= 1 - 1e-9.
EvalReport eval_clausen(double x, double tol);

// q-factorial form of the d-series, x = z throughout:
// [prod_j (1-z^j)]^{-1} * sum_n (-1)^{n+1} n z^{n(n+1)/2} / prod_{k<=n}(1-z^k).
// Inner sum truncated at n_terms (<= 1e4) with tail estimate.
EvalReport eval_eisenstein_qseries(std::complex<double> z,
                                   std::uint64_t n_terms);

// Continued fraction for the d-series, evaluated bottom-up at depth D
// (1 <= D <= 500), 0 < z <= 1 - 1e-6.  Partial numerators/denominators follow
// the index law a_1=1, a_2j = t^{j-1}(t^j-1)^2, a_{2j+1} = t^j(t^j-1)^2,
// b_k = t^k-1 with t = 1/z, computed here in the equivalent rescaled z-form
// (every intermediate stays bounded).  The law is induced from the seven
// displayed levels of the source fraction and is quarantined behind
// cross-engine tests; see docs in README.  error_estimate = |val(D)-val(D-1)|.
EvalReport eval_eisenstein_cf(double z, int depth);

// |LHS - RHS| for the four closed forms: mobius -> x; phi -> x/(1-x)^2;
// liouville -> sum x^{n^2}; mangoldt -> sum log(n) x^n.  |x| <= 0.95.
double identity_residual(Coeff name, double x, double tol,
                         const ArithTable& table);

// Closed form of the n-th derivative at 0 of F_k(x) = x^k/(1-x^k):
// 0 if k does not divide n; n! for odd k | n; n! - (n!/k)(1+(-1)^{n+1})
// for even k | n (the correction vanishes since k|n with k even forces n
// even; the branch structure is kept literally and the simplification is a
// tested consequence).  Guards k, n <= 170 (factorial overflow in float mode).
double burhenne_fk_derivative(std::uint64_t k, std::uint64_t n);
mpz_class burhenne_fk_exact(std::uint64_t k, std::uint64_t n);

// Decomposition of (1-r) * f(r e^{2 pi i p/q}) for the d-series f into the
// divergent major arc (n divisible by q) and the bounded minor arc, with the
// closed-form bounds for each.
struct SingularityProbe {
    std::uint64_t p = 0, q = 0;
    double r = 0.0;
    double major_arc = 0.0;               // (1-r) * sum_{q | n} term, real
    std::complex<double> minor_arc;       // (1-r) * sum_{q !| n} term
    double major_lower_bound = 0.0;       // -(1/q) log(1 - r^q)
    double minor_upper_bound = 0.0;       // 1/sin(pi/q)
};

// gcd(p,q)=1, q >= 2, r <= 1 - 1e-7; both arcs summed to absolute
// tolerance tol via rigorous geometric tail bounds.
SingularityProbe singularity_probe(std::uint64_t p, std::uint64_t q, double r,
                                   double tol);

}  // namespace lambert
