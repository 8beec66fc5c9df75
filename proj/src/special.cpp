#include "lambert/special.hpp"

#include <cmath>
#include <stdexcept>

#include "lambert/bernoulli.hpp"

namespace lambert {

namespace {

const BernoulliCache& shared_bernoulli() {
    static const BernoulliCache cache = bernoulli_numbers(40);
    return cache;
}

}  // namespace

double ZetaEvaluator::operator()(double s) const {
    if (!(s >= 1.0 + 1e-6))
        throw std::domain_error("zeta_real: requires s >= 1 + 1e-6");
    if (cutoff_m < 2 || correction_order < 0 || correction_order > 20)
        throw std::invalid_argument("zeta_real: bad evaluator configuration");

    const int m = cutoff_m;
    long double sum = 0.0L;
    for (int n = 1; n < m; ++n) sum += powl((long double)n, (long double)-s);

    // Euler-Maclaurin tail from n = m: M^{1-s}/(s-1) + M^{-s}/2
    //   + sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * M^{-s-2k+1}.
    long double lm = (long double)m;
    long double sm = powl(lm, (long double)-s);
    sum += sm * lm / ((long double)s - 1.0L);
    sum += sm / 2.0L;

    const BernoulliCache& bc = shared_bernoulli();
    long double rising = (long double)s;  // s(s+1)...(s+2k-2), grown per k
    long double mpow = sm / lm;           // M^{-s-2k+1}
    long double fact = 2.0L;              // (2k)!
    for (int k = 1; k <= correction_order; ++k) {
        sum += (long double)bc.approx[2 * k] / fact * rising * mpow;
        rising *= ((long double)s + 2 * k - 1) * ((long double)s + 2 * k);
        mpow /= lm * lm;
        fact *= (2 * k + 1) * (2 * k + 2);
    }
    return (double)sum;
}

double zeta_real(double s) { return ZetaEvaluator{}(s); }

double prime_zeta(double s, const ArithTable& table) {
    if (!(s >= 1.0 + 1e-3))
        throw std::domain_error("prime_zeta: requires s >= 1 + 1e-3");
    if (table.limit < 100'000)
        throw std::invalid_argument("prime_zeta: table.limit must be >= 1e5");

    // P(s) = sum_n mu(n)/n log zeta(ns).  The truncation bound log zeta(ns)/n
    // is monotone, so mu(n)=0 terms cannot trigger a premature stop.
    long double sum = 0.0L;
    for (std::uint64_t n = 1;; ++n) {
        double lz = std::log(zeta_real(s * (double)n));
        if (lz / (double)n < 1e-15 && n > 1) break;
        if (table.mu[n] != 0)
            sum += (long double)table.mu[n] * (long double)lz / (long double)n;
    }
    return (double)sum;
}

namespace detail {

double ei_series(double x) {
    // Ei(x) = gamma + log|x| + sum_{k>=1} x^k/(k k!)  (valid either sign)
    long double term = 1.0L, sum = 0.0L;
    long double lx = (long double)x;
    for (int k = 1; k <= 400; ++k) {
        term *= lx / k;
        long double add = term / k;
        sum += add;
        if (fabsl(add) < 1e-20L * (fabsl(sum) + 1.0L)) break;
    }
    return (double)(0.57721566490153286060651209008L + logl(fabsl(lx)) + sum);
}

double ei_asymptotic(double x) {
    // Ei(x) ~ e^x/x sum_{k>=0} k!/x^k, truncated at the smallest term.
    long double lx = (long double)x;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k <= 200; ++k) {
        long double next = term * k / lx;
        if (fabsl(next) >= fabsl(term)) break;
        term = next;
        sum += term;
        if (fabsl(term) < 1e-20L * fabsl(sum)) break;
    }
    return (double)(expl(lx) / lx * sum);
}

// E1(y) = -Ei(-y) for y > 1 via the modified Lentz continued fraction
// e^{-y}/(y+1-1/(y+3-4/(y+5-9/(...)))).
double e1_continued_fraction(double y) {
    const long double tiny = 1e-300L;
    long double b = (long double)y + 1.0L;
    long double c = 1.0L / tiny;
    long double d = 1.0L / b;
    long double h = d;
    for (int k = 1; k <= 400; ++k) {
        long double a = -(long double)k * k;
        b += 2.0L;
        d = a * d + b;
        if (fabsl(d) < tiny) d = tiny;
        c = b + a / c;
        if (fabsl(c) < tiny) c = tiny;
        d = 1.0L / d;
        long double delta = d * c;
        h *= delta;
        if (fabsl(delta - 1.0L) < 1e-19L) break;
    }
    return (double)(expl(-(long double)y) * h);
}

}  // namespace detail

double exp_integral_ei(double x) {
    if (x == 0.0) throw std::domain_error("exp_integral_ei: x = 0 (log singularity)");
    if (!(std::abs(x) <= 700.0))
        throw std::domain_error("exp_integral_ei: |x| must be <= 700");
    // x > 0: series to the crossover 40, asymptotic beyond.  x < 0: the
    // alternating series loses ~0.43|x| digits to cancellation, so the
    // continued-fraction regime takes over already from |x| = 1.
    if (x > 0.0) return x <= 40.0 ? detail::ei_series(x) : detail::ei_asymptotic(x);
    double y = -x;  // Ei(x) = -E1(y)
    return y <= 1.0 ? detail::ei_series(x) : -detail::e1_continued_fraction(y);
}

namespace detail {

double ei_combo_direct(double y) {
    return std::exp(y) * exp_integral_ei(-y) + std::exp(-y) * exp_integral_ei(y);
}

double ei_combo_asymptotic(double y) {
    // g(y) ~ 2 sum_{j odd} j!/y^{j+1}, truncated at the smallest term.
    long double y2 = (long double)y * (long double)y;
    long double term = 2.0L / y2;  // j = 1
    long double sum = term;
    for (int j = 3; j <= 400; j += 2) {
        long double next = term * (long double)(j - 1) * (long double)j / y2;
        if (next >= term) break;
        term = next;
        sum += term;
        if (term < 1e-20L * sum) break;
    }
    return (double)sum;
}

}  // namespace detail

double ei_symmetric_combo(double y) {
    if (!(y > 0.0)) throw std::domain_error("ei_symmetric_combo: requires y > 0");
    return y <= 500.0 ? detail::ei_combo_direct(y) : detail::ei_combo_asymptotic(y);
}

CotExpansion cot_half_expansion(double h, int k) {
    if (!(h > 0.0 && h < 3.14159265358979323846))
        throw std::domain_error("cot_half_expansion: requires 0 < h < pi");
    if (k < 1 || k > 30)
        throw std::invalid_argument("cot_half_expansion: requires 1 <= k <= 30");

    const BernoulliCache& bc = shared_bernoulli();
    // (1/2)cot(h/2) - 1/h = sum_{m=1}^{k-1} (-1)^m B_{2m} h^{2m-1}/(2m)!  + R_k,
    // |R_k| <= |B_2k| h^{2k} / ((2k)! |sin h|).
    long double sum = 0.0L;
    long double hpow = (long double)h;  // h^{2m-1}
    long double fact = 2.0L;            // (2m)!
    int sign = -1;
    for (int m = 1; m < k; ++m) {
        sum += sign * (long double)bc.approx[2 * m] * hpow / fact;
        hpow *= (long double)h * (long double)h;
        fact *= (2 * m + 1) * (2 * m + 2);
        sign = -sign;
    }
    // After the loop hpow = h^{2k-1}, fact = (2k)!.
    double bound = (double)(fabsl((long double)bc.approx[2 * k]) * hpow *
                            (long double)h / (fact * fabsl(sinl((long double)h))));
    return CotExpansion{(double)sum, bound};
}

std::vector<double> gamma_bernoulli_partial_sums(int count_k) {
    if (count_k < 1 || count_k > 40)
        throw std::invalid_argument("gamma_bernoulli_partial_sums: K in [1, 40]");
    const BernoulliCache& bc = shared_bernoulli();
    std::vector<double> out;
    out.reserve(count_k);
    double s = 0.5;
    int sign = 1;  // (-1)^{n+1}
    for (int n = 1; n <= count_k; ++n) {
        s += sign * bc.approx[2 * n] / (2.0 * n);
        out.push_back(s);
        sign = -sign;
    }
    return out;
}

}  // namespace lambert
